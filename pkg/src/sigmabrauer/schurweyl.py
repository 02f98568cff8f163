"""Weight-space combinatorics and concrete Schur functor realizations.

This module is the first-principles side of the central consistency
check: the weight space of (free algebra) tensor (tensor power) with all
torus weights equal to one has an explicit monomial basis, enumerated
here directly, and a bijection onto the basis diagrams of the downwards
category.  It also realizes Schur functors on k^N concretely as Young
symmetrizer images inside the tensor power, with exact matrices for the
action of arbitrary rational N x N matrices; the bridge between that
realization and the abstract Specht modules (used for block
functionals) is computed as an explicit intertwiner.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import NamedTuple

from .combinat import Partition, PartitionTuple, schur_dim, specht_dim
from .exactla import RatMat, inverse, kernel_basis
from .specht import get_specht_module, perm_sign


class WeightBasisElement(NamedTuple):
    """A monomial basis element: typed generator factors plus a tensor word.

    `blocks` holds (support, type index, basis polytabloid index) triples
    with pairwise disjoint supports; `word` is the sequence of labels in
    the pure tensor part.  Supports and word letters together partition
    the ground set {1..n}.
    """

    blocks: tuple[tuple[tuple[int, ...], int, int], ...]
    word: tuple[int, ...]


def _typed_partitions_by_counts(sigma: PartitionTuple, elements: tuple[int, ...]):
    """Partitions of `elements` into typed supports, driven by the multiset
    of types: first choose how many blocks of each type, then assign
    supports smallest-element first."""
    total = len(elements)
    sizes = [p.size for p in sigma]

    def count_vectors(p: int, remaining: int):
        if p == len(sigma):
            if remaining == 0:
                yield ()
            return
        for c in range(remaining // sizes[p] + 1):
            for rest in count_vectors(p + 1, remaining - c * sizes[p]):
                yield (c,) + rest

    def assign(remaining: tuple[int, ...], counts: list[int]):
        if not remaining:
            yield ()
            return
        first = remaining[0]
        rest = remaining[1:]
        for p in range(len(sigma)):
            if counts[p] == 0 or sizes[p] - 1 > len(rest):
                continue
            counts[p] -= 1
            for others in combinations(rest, sizes[p] - 1):
                support = (first,) + others
                left = tuple(x for x in rest if x not in others)
                for tail in assign(left, counts):
                    yield ((support, p),) + tail
            counts[p] += 1

    for counts in count_vectors(0, total):
        yield from assign(elements, list(counts))


def weight_space_basis(sigma, n: int, m: int) -> list[WeightBasisElement]:
    """The monomial basis of the all-weights-one subspace in degree (n, m)."""
    sigma = PartitionTuple(sigma)
    if not sigma.pure:
        raise ValueError("sigma must be pure")
    if m < 0 or n < 0 or m > n:
        return []
    out: list[WeightBasisElement] = []
    for word in permutations(range(1, n + 1), m):
        leftover = tuple(x for x in range(1, n + 1) if x not in word)
        for typed in _typed_partitions_by_counts(sigma, leftover):
            ranges = [range(specht_dim(sigma[p])) for _, p in typed]
            for indices in product(*ranges) if ranges else [()]:
                blocks = tuple(
                    sorted(
                        ((support, p, t) for (support, p), t in zip(typed, indices)),
                        key=lambda b: (min(b[0]), b[1]),
                    )
                )
                out.append(WeightBasisElement(blocks, word))
    out.sort()
    return out


def diagram_weight_iso(sigma, n: int, m: int) -> dict:
    """The explicit pairing: generator factors become blocks, the j-th
    tensor letter is matched to target j.  Returns a dict from
    WeightBasisElement to Diagram; the map is total and injective onto
    the basis diagram list."""
    from .brauer import Block, Diagram, _normalize_blocks

    sigma = PartitionTuple(sigma)
    out = {}
    for el in weight_space_basis(sigma, n, m):
        matching = tuple(sorted((s, j + 1) for j, s in enumerate(el.word)))
        blocks = _normalize_blocks([Block(sup, p, t) for sup, p, t in el.blocks])
        out[el] = Diagram(n, m, blocks, matching)
    return out


# ---------------------------------------------------------------------------
# Schur functor realizations


def _row_filling(shape: Partition) -> tuple[tuple[int, ...], ...]:
    tab = []
    k = 0
    for r in shape:
        tab.append(tuple(range(k, k + r)))
        k += r
    return tuple(tab)


def _group_perms(groups: list[tuple[int, ...]], d: int):
    """All slot permutations that keep each group inside itself."""
    perms_by_group = [list(permutations(g)) for g in groups]
    for choice in product(*perms_by_group) if perms_by_group else [()]:
        perm = list(range(d))
        for g, img in zip(groups, choice):
            for a, b in zip(g, img):
                perm[a] = b
        yield tuple(perm)


class TensorRep:
    """The Schur functor for `shape` on k^N, realized as the image of the
    Young symmetrizer of the initial row filling inside the d-th tensor
    power.  Basis vectors are the symmetrizer images of the first words
    (in lexicographic order) that produce independent vectors, scaled so
    their lexicographically first nonzero coordinate is 1; this choice
    is stable under enlarging N, so the realization at a smaller rank
    sits inside the larger one as the subset of its basis."""

    def __init__(self, shape, N: int):
        self.shape = Partition(shape)
        self.N = int(N)
        self.d = self.shape.size
        t0 = _row_filling(self.shape)
        rows = [tuple(r) for r in t0]
        ncols = len(t0[0]) if t0 else 0
        cols = [
            tuple(t0[i][j] for i in range(len(t0)) if len(t0[i]) > j)
            for j in range(ncols)
        ]
        self._row_perms = list(_group_perms(rows, self.d))
        self._col_perms = [
            (q, perm_sign(q)) for q in _group_perms(cols, self.d)
        ]
        self.basis: list[dict[tuple[int, ...], Fraction]] = []
        self.pivot_words: list[tuple[int, ...]] = []
        self.source_words: list[tuple[int, ...]] = []
        self._class_of_basis: list[tuple[int, ...]] = []
        self._build_basis()
        assert len(self.basis) == schur_dim(self.shape, self.N)
        self._class_members: dict[tuple[int, ...], list[int]] = {}
        for j, cls in enumerate(self._class_of_basis):
            self._class_members.setdefault(cls, []).append(j)
        self._class_solver: dict[tuple[int, ...], RatMat] = {}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def symmetrizer_image(self, word: tuple[int, ...]) -> dict[tuple[int, ...], Fraction]:
        out: dict[tuple[int, ...], Fraction] = {}
        for r in self._row_perms:
            for q, sg in self._col_perms:
                rq = tuple(r[q[i]] for i in range(self.d))
                neww = tuple(word[rq[i]] for i in range(self.d))
                out[neww] = out.get(neww, Fraction(0)) + sg
        return {w: c for w, c in out.items() if c != 0}

    def _build_basis(self):
        # greedy sparse row reduction, independently inside each content class
        rref_rows: dict[tuple[int, ...], list[tuple[tuple[int, ...], dict]]] = {}
        for word in product(range(1, self.N + 1), repeat=self.d):
            cls = tuple(sorted(word))
            vec = self.symmetrizer_image(word)
            if not vec:
                continue
            red = dict(vec)
            for piv, rowvec in rref_rows.get(cls, []):
                c = red.get(piv)
                if c:
                    for w, v in rowvec.items():
                        nv = red.get(w, Fraction(0)) - c * v
                        if nv:
                            red[w] = nv
                        else:
                            red.pop(w, None)
            if not red:
                continue
            piv = min(red)
            norm = {w: v / red[piv] for w, v in red.items()}
            rref_rows.setdefault(cls, []).append((piv, norm))
            lead = min(vec)
            scaled = {w: v / vec[lead] for w, v in vec.items()}
            self.basis.append(scaled)
            self.pivot_words.append(piv)
            self.source_words.append(word)
            self._class_of_basis.append(cls)

    def _solver(self, cls: tuple[int, ...]) -> RatMat:
        mat = self._class_solver.get(cls)
        if mat is None:
            members = self._class_members[cls]
            pivots = [self.pivot_words[j] for j in members]
            b = RatMat(
                len(members),
                len(members),
                [[self.basis[j].get(p, Fraction(0)) for j in members] for p in pivots],
            )
            mat = inverse(b)
            self._class_solver[cls] = mat
        return mat

    def coords(self, vec: dict[tuple[int, ...], Fraction]) -> tuple[Fraction, ...]:
        """Coordinates of a vector known to lie in the realization."""
        out = [Fraction(0)] * self.dim
        by_cls: dict[tuple[int, ...], dict] = {}
        for w, c in vec.items():
            by_cls.setdefault(tuple(sorted(w)), {})[w] = c
        for cls, piece in by_cls.items():
            members = self._class_members.get(cls)
            if members is None:
                raise ValueError("vector does not lie in the realization")
            pivots = [self.pivot_words[j] for j in members]
            rhs = [piece.get(p, Fraction(0)) for p in pivots]
            sol = self._solver(cls).matvec(rhs)
            for j, x in zip(members, sol):
                out[j] = x
        return tuple(out)

    def apply_matrix(self, g: RatMat, vec: dict) -> dict:
        """Apply g tensor ... tensor g to a vector in word coordinates."""
        if g.rows < self.N or g.cols < self.N:
            raise ValueError("matrix is too small for this rank")
        colmap = [
            [(i, g.data[i][j]) for i in range(g.rows) if g.data[i][j] != 0]
            for j in range(g.cols)
        ]
        out: dict[tuple[int, ...], Fraction] = {}

        def expand(slot: int, word, c: Fraction, current: tuple[int, ...]):
            if slot == self.d:
                out[current] = out.get(current, Fraction(0)) + c
                return
            for i, v in colmap[word[slot] - 1]:
                expand(slot + 1, word, c * v, current + (i + 1,))

        for word, c in vec.items():
            expand(0, word, c, ())
        return {w: c for w, c in out.items() if c != 0}

    def act_matrix(self, g: RatMat) -> RatMat:
        """Matrix of the induced action of g on the realization basis."""
        cols = []
        for b in self.basis:
            img = self.apply_matrix(g, b)
            cols.append(self.coords(img))
        return RatMat(self.dim, self.dim, list(zip(*cols)) if cols else [])

    def restriction_indices(self, n: int) -> list[int]:
        """Basis indices whose defining words use only letters 1..n; these
        form the realization at rank n."""
        return [
            j for j, w in enumerate(self.source_words) if all(x <= n for x in w)
        ]

    def __repr__(self):
        return f"TensorRep({self.shape!s}, N={self.N}, dim={self.dim})"


@lru_cache(maxsize=None)
def get_tensor_rep(shape: Partition, N: int) -> TensorRep:
    return TensorRep(Partition(shape), N)


def evaluate_rep(thing, N: int):
    """Realize a Schur functor (partition) or a direct sum (tuple) on k^N."""
    if isinstance(thing, PartitionTuple) or (
        isinstance(thing, (list, tuple)) and thing and isinstance(thing[0], (list, tuple, Partition))
        and not isinstance(thing, Partition)
    ):
        return [get_tensor_rep(Partition(p), N) for p in PartitionTuple(thing)]
    return get_tensor_rep(Partition(thing), N)


# ---------------------------------------------------------------------------
# the bridge between abstract Specht modules and the realization


@lru_cache(maxsize=None)
def specht_word_expansions(shape: Partition) -> tuple:
    """Pure-word expansions of the standard polytabloids.

    For every basis polytabloid of the Specht module on labels 1..d this
    gives a dict from permutation words (w(1),...,w(d)) over the
    alphabet {1..d} to rational coefficients: the image of the
    polytabloid under the canonical (up to one overall scalar,
    normalized deterministically) intertwiner into the weight space of
    the realization where each letter appears once.  The intertwiner
    conjugates the Specht action of adjacent label transpositions into
    the action of the corresponding permutation matrices.
    """
    shape = Partition(shape)
    d = shape.size
    if d == 0:
        return ({(): Fraction(1)},)
    rep = get_tensor_rep(shape, d)
    weight_idx = [
        j for j, cls in enumerate(rep._class_of_basis) if cls == tuple(range(1, d + 1))
    ]
    f = specht_dim(shape)
    assert len(weight_idx) == f
    module = get_specht_module(shape, tuple(range(1, d + 1)))
    gens_specht = module.generator_matrices()

    if d == 1:
        big = [RatMat.identity(1)]
    else:
        big = []
        for k in range(d - 1):
            pm = [[0] * d for _ in range(d)]
            for i in range(d):
                pm[i][i] = 1
            pm[k][k] = pm[k + 1][k + 1] = 0
            pm[k][k + 1] = pm[k + 1][k] = 1
            full = rep.act_matrix(RatMat(d, d, pm))
            sub = [[full.data[a][b] for b in weight_idx] for a in weight_idx]
            big.append(RatMat(f, f, sub))

    if f == 1:
        iota = RatMat(1, 1, [[1]])
    else:
        # solve W_k X = X G_k for all k; the solution space is one dimensional
        rows = []
        for W, G in zip(big, gens_specht):
            for a in range(f):
                for b in range(f):
                    row = [Fraction(0)] * (f * f)
                    for c in range(f):
                        row[c * f + b] += W.data[a][c]
                        row[a * f + c] -= G.data[c][b]
                    rows.append(row)
        ker = kernel_basis(RatMat(len(rows), f * f, rows))
        if len(ker) != 1:
            raise RuntimeError("intertwiner space is not one dimensional")
        flat = ker[0]
        iota = RatMat(f, f, [[flat[a * f + b] for b in range(f)] for a in range(f)])

    # expand into pure words and normalize the overall scalar
    expansions = []
    for t in range(f):
        amb: dict[tuple[int, ...], Fraction] = {}
        for a, j in enumerate(weight_idx):
            c = iota.data[a][t]
            if c == 0:
                continue
            for w, v in rep.basis[j].items():
                nv = amb.get(w, Fraction(0)) + c * v
                if nv:
                    amb[w] = nv
                else:
                    amb.pop(w, None)
        expansions.append(amb)
    first = expansions[0]
    lead = min(first)
    scale = first[lead]
    out = tuple(
        {w: c / scale for w, c in amb.items()} for amb in expansions
    )
    return out
