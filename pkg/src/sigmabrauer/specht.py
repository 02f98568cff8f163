"""Specht modules over Q on arbitrary ordered label sets.

The basis is the set of standard polytabloids, indexed by standard
Young tableaux with entries from the label set, listed in lexicographic
order of their row reading words.  A polytabloid of a non-standard
tableau is rewritten into this basis in two moves: sorting the columns
(which only changes the sign) and Garnir relations.  The Garnir step at
a row descent T[i][j] > T[i][j+1] takes A = the entries of column j
from row i down, B = the entries of column j+1 from the top down to row
i, and rewrites e_T against all other ways of splitting A u B into a
column-j part and a column-j+1 part, each kept increasing; the signs
are the parities of the induced rearrangements.  All structure
constants are integers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .combinat import Partition, specht_dim
from .exactla import RatMat


# ---------------------------------------------------------------------------
# permutations (as dicts label -> label, or one-line tuples for S_n work)


def perm_sign(one_line: tuple[int, ...]) -> int:
    seen = [False] * len(one_line)
    sign = 1
    for i in range(len(one_line)):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = one_line[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def cycle_type(one_line: tuple[int, ...]) -> Partition:
    """Cycle type of a permutation given in 0-indexed one-line notation."""
    seen = [False] * len(one_line)
    lens = []
    for i in range(len(one_line)):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = one_line[j]
            clen += 1
        lens.append(clen)
    return Partition(sorted(lens, reverse=True))


def _parity_of_rearrangement(old: tuple, new: tuple) -> int:
    """Sign of the permutation carrying the tuple `old` to `new`."""
    pos = {v: k for k, v in enumerate(old)}
    idx = [pos[v] for v in new]
    inv = 0
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            if idx[a] > idx[b]:
                inv += 1
    return -1 if inv % 2 else 1


def plain_changes(n: int):
    """Steinhaus-Johnson-Trotter: yields (one_line, swapped_adjacent_position).

    The first item carries the identity and position None; each later
    permutation differs from its predecessor by the transposition of
    positions (k, k+1), with k reported.
    """
    perm = list(range(n))
    dirs = [-1] * n
    yield tuple(perm), None
    if n < 2:
        return
    while True:
        mobile = -1
        mi = -1
        for i in range(n):
            j = i + dirs[i]
            if 0 <= j < n and perm[i] > perm[j] and perm[i] > mobile:
                mobile = perm[i]
                mi = i
        if mi == -1:
            return
        j = mi + dirs[mi]
        k = min(mi, j)
        perm[mi], perm[j] = perm[j], perm[mi]
        dirs[mi], dirs[j] = dirs[j], dirs[mi]
        for i in range(n):
            if perm[i] > mobile:
                dirs[i] = -dirs[i]
        yield tuple(perm), k


# ---------------------------------------------------------------------------
# tableaux


def standard_tableaux(shape: Partition, labels: tuple[int, ...]):
    """All standard Young tableaux of the given shape on the given labels."""
    shape = Partition(shape)
    labels = tuple(sorted(labels))
    if shape.size != len(labels):
        raise ValueError("label count must equal the size of the shape")
    if shape.size == 0:
        return [()]
    rows = len(shape)
    out = []
    filling = [[None] * shape[i] for i in range(rows)]
    row_fill = [0] * rows  # cells filled so far in each row

    def rec(k: int):
        if k == len(labels):
            out.append(tuple(tuple(row) for row in filling))
            return
        for i in range(rows):
            j = row_fill[i]
            if j >= shape[i]:
                continue
            if i > 0 and row_fill[i - 1] <= j:
                continue  # cell above not filled yet
            filling[i][j] = labels[k]
            row_fill[i] += 1
            rec(k + 1)
            row_fill[i] -= 1
            filling[i][j] = None

    rec(0)
    out.sort(key=lambda t: tuple(x for row in t for x in row))
    return out


def _columns(tab) -> list[list]:
    if not tab:
        return []
    ncols = len(tab[0])
    return [[row[j] for row in tab if len(row) > j] for j in range(ncols)]


def _from_columns(cols, shape) -> tuple:
    return tuple(
        tuple(cols[j][i] for j in range(shape[i])) for i in range(len(shape))
    )


class SpechtVector:
    """Coordinates of an element in the standard polytabloid basis."""

    __slots__ = ("module", "coords")

    def __init__(self, module: "SpechtModule", coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != module.dim:
            raise ValueError("coordinate length does not match the basis size")
        self.module = module
        self.coords = coords

    def __eq__(self, other):
        return (
            isinstance(other, SpechtVector)
            and self.module is other.module
            and self.coords == other.coords
        )

    def __add__(self, other):
        if other.module is not self.module:
            raise ValueError("vectors live in different modules")
        return SpechtVector(self.module, [a + b for a, b in zip(self.coords, other.coords)])

    def scale(self, c):
        c = Fraction(c)
        return SpechtVector(self.module, [c * x for x in self.coords])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __repr__(self):
        return f"SpechtVector({self.module.shape!s}, {self.coords})"


class SpechtModule:
    """The Specht module for `shape` on an ordered set of integer labels."""

    def __init__(self, shape, labels):
        self.shape = Partition(shape)
        self.labels = tuple(sorted(int(x) for x in labels))
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be distinct")
        if self.shape.size != len(self.labels):
            raise ValueError("label count must equal the size of the shape")
        self.tableaux = standard_tableaux(self.shape, self.labels)
        self.index = {t: k for k, t in enumerate(self.tableaux)}
        self.dim = len(self.tableaux)
        assert self.dim == specht_dim(self.shape)
        self._straighten_cache: dict[tuple, dict[int, int]] = {}
        self._perm_cache: dict[tuple, RatMat] = {}

    # -- straightening ------------------------------------------------------

    def straighten(self, tab) -> dict[int, int]:
        """Expand the polytabloid of an arbitrary bijective filling.

        Returns a map basis index -> integer coefficient.
        """
        tab = tuple(tuple(row) for row in tab)
        cached = self._straighten_cache.get(tab)
        if cached is not None:
            return cached

        # sort columns; only the sign changes
        cols = _columns(tab)
        sign = 1
        sorted_cols = []
        for col in cols:
            sc = sorted(col)
            sign *= _parity_of_rearrangement(tuple(col), tuple(sc))
            sorted_cols.append(sc)
        stab = _from_columns(sorted_cols, self.shape)

        violation = None
        for i, row in enumerate(stab):
            for j in range(len(row) - 1):
                if row[j] > row[j + 1]:
                    violation = (i, j)
                    break
            if violation:
                break

        if violation is None:
            result = {self.index[stab]: sign}
            self._straighten_cache[tab] = result
            return result

        i, j = violation
        col_j = sorted_cols[j]
        col_j1 = sorted_cols[j + 1]
        a_part = tuple(col_j[i:])
        b_part = tuple(col_j1[: i + 1])
        pool = sorted(a_part + b_part)
        old_seq = a_part + b_part

        from itertools import combinations

        acc: dict[int, int] = {}
        for new_a in combinations(pool, len(a_part)):
            if new_a == a_part:
                continue
            rest = list(pool)
            for x in new_a:
                rest.remove(x)
            new_b = tuple(rest)
            tau_sign = _parity_of_rearrangement(old_seq, new_a + new_b)
            new_cols = [list(c) for c in sorted_cols]
            new_cols[j][i:] = list(new_a)
            new_cols[j + 1][: i + 1] = list(new_b)
            sub = self.straighten(_from_columns(new_cols, self.shape))
            for idx, c in sub.items():
                acc[idx] = acc.get(idx, 0) - tau_sign * c
        result = {idx: sign * c for idx, c in acc.items() if c != 0}
        self._straighten_cache[tab] = result
        return result

    def polytabloid(self, tab) -> SpechtVector:
        coords = [Fraction(0)] * self.dim
        for idx, c in self.straighten(tab).items():
            coords[idx] = Fraction(c)
        return SpechtVector(self, coords)

    # -- group action -------------------------------------------------------

    def _check_perm(self, perm: dict) -> dict:
        if set(perm.keys()) != set(self.labels) or set(perm.values()) != set(self.labels):
            raise ValueError("permutation must move exactly the module labels")
        return perm

    def perm_matrix(self, perm: dict) -> RatMat:
        """Matrix of the action of a permutation of the labels (columns are
        the straightened images of the basis polytabloids)."""
        perm = self._check_perm(perm)
        key = tuple(perm[x] for x in self.labels)
        cached = self._perm_cache.get(key)
        if cached is not None:
            return cached
        cols = []
        for tab in self.tableaux:
            image = tuple(tuple(perm[x] for x in row) for row in tab)
            expansion = self.straighten(image)
            col = [Fraction(0)] * self.dim
            for idx, c in expansion.items():
                col[idx] = Fraction(c)
            cols.append(col)
        mat = RatMat(self.dim, self.dim, list(zip(*cols)))
        self._perm_cache[key] = mat
        return mat

    def act(self, perm: dict, v: SpechtVector) -> SpechtVector:
        if v.module is not self:
            raise ValueError("vector does not belong to this module")
        return SpechtVector(self, self.perm_matrix(perm).matvec(v.coords))

    def generator_matrices(self) -> list[RatMat]:
        """Action matrices of the adjacent transpositions of the label order."""
        gens = []
        for k in range(len(self.labels) - 1):
            a, b = self.labels[k], self.labels[k + 1]
            perm = {x: x for x in self.labels}
            perm[a], perm[b] = b, a
            gens.append(self.perm_matrix(perm))
        return gens

    def __repr__(self):
        return f"SpechtModule({self.shape!s}, labels={self.labels})"


@lru_cache(maxsize=None)
def get_specht_module(shape: Partition, labels: tuple[int, ...]) -> SpechtModule:
    return SpechtModule(Partition(shape), tuple(labels))


def relabel(v: SpechtVector, mapping: dict) -> SpechtVector:
    """Transport a Specht vector along an arbitrary bijection of label sets.

    The bijection factors as (order preserving) o (permutation of the
    source labels); the permutation acts through the module, the order
    preserving part re-indexes the basis verbatim.
    """
    src = v.module
    if set(mapping.keys()) != set(src.labels):
        raise ValueError("mapping domain must be the source label set")
    targets = sorted(mapping.values())
    if len(set(targets)) != len(targets):
        raise ValueError("mapping must be a bijection")
    order_iso = dict(zip(src.labels, targets))
    inv_order = {v2: k for k, v2 in order_iso.items()}
    w = {x: inv_order[mapping[x]] for x in src.labels}
    moved = src.act(w, v)
    tgt = get_specht_module(src.shape, tuple(targets))
    return SpechtVector(tgt, moved.coords)


# ---------------------------------------------------------------------------
# characters (Murnaghan-Nakayama)


@lru_cache(maxsize=None)
def sn_character(lam: Partition, cls: Partition) -> int:
    """Irreducible symmetric group character value, by border strip removal
    on first-column hook lengths."""
    lam, cls = Partition(lam), Partition(cls)
    if lam.size != cls.size:
        raise ValueError("partition and cycle type must have equal size")
    if lam.size == 0:
        return 1
    m = cls[0]
    L = len(lam)
    beta = [lam[j] + (L - 1 - j) for j in range(L)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - m
        if nb < 0 or nb in bset:
            continue
        ht = sum(1 for x in beta if nb < x < b)
        newbeta = sorted((x for x in beta if x != b), reverse=True)
        newbeta.append(nb)
        newbeta.sort(reverse=True)
        newlam = [newbeta[j] - (L - 1 - j) for j in range(L)]
        total += (-1) ** ht * sn_character(
            Partition([x for x in newlam if x > 0]), Partition(cls[1:])
        )
    return total


# ---------------------------------------------------------------------------
# isotypic projection


def _check_coxeter(gens: list[RatMat]):
    """Verify involution, braid, and commutation relations.

    Exact matrix identities for small dimensions; for large spaces the
    identities are verified exactly on a deterministic family of probe
    vectors instead (full products would be needlessly expensive there).
    """
    n = len(gens) + 1
    d = gens[0].rows if gens else 0
    for g in gens:
        if g.rows != g.cols or g.rows != d:
            raise ValueError("generator matrices must be square and equally sized")
    if d <= 48:
        ident = RatMat.identity(d)
        for k, g in enumerate(gens):
            if g @ g != ident:
                raise ValueError(f"generator {k} is not an involution")
        for k in range(len(gens) - 1):
            a, b = gens[k], gens[k + 1]
            if a @ b @ a != b @ a @ b:
                raise ValueError(f"braid relation fails at generators {k},{k+1}")
        for k in range(len(gens)):
            for l in range(k + 2, len(gens)):
                if gens[k] @ gens[l] != gens[l] @ gens[k]:
                    raise ValueError(f"generators {k},{l} do not commute")
        return n
    import random

    rng = random.Random(20240 + d)
    probes = [
        tuple(Fraction(rng.randint(-4, 4)) for _ in range(d)) for _ in range(6)
    ]
    for v in probes:
        for k, g in enumerate(gens):
            if g.matvec(g.matvec(v)) != v:
                raise ValueError(f"generator {k} is not an involution")
        for k in range(len(gens) - 1):
            a, b = gens[k], gens[k + 1]
            if a.matvec(b.matvec(a.matvec(v))) != b.matvec(a.matvec(b.matvec(v))):
                raise ValueError(f"braid relation fails at generators {k},{k+1}")
        for k in range(len(gens)):
            for l in range(k + 2, len(gens)):
                if gens[k].matvec(gens[l].matvec(v)) != gens[l].matvec(gens[k].matvec(v)):
                    raise ValueError(f"generators {k},{l} do not commute")
    return n


def isotypic_projector(
    n: int,
    lam: Partition,
    gens: list[RatMat],
    dim: int | None = None,
    perm_action=None,
) -> RatMat:
    """Projector onto the lam-isotypic component of a representation of the
    symmetric group on n letters, given by its adjacent transposition
    matrices.  Built by character averaging; exact and idempotent.

    When `perm_action` is given it must map a 0-indexed one-line
    permutation to its action matrix; it is used in place of the
    incremental products over generator words (worthwhile when the
    underlying action is a coordinate permutation).
    """
    lam = Partition(lam)
    if lam.size != n:
        raise ValueError("|lam| must equal n")
    if n <= 1:
        if dim is None:
            if not gens:
                raise ValueError("dimension required when no generators are given")
            dim = gens[0].rows
        return RatMat.identity(dim)
    if len(gens) != n - 1:
        raise ValueError("expected n-1 generator matrices")
    _check_coxeter(gens)
    d = gens[0].rows
    total = None
    current = RatMat.identity(d)
    from math import factorial

    for perm, swap in plain_changes(n):
        chi = sn_character(lam, cycle_type(perm))
        if perm_action is None:
            if swap is not None:
                current = current @ gens[swap]
            mat = current
        else:
            if chi == 0:
                continue
            mat = perm_action(perm)
        if chi == 0:
            continue
        piece = mat.scale(chi)
        total = piece if total is None else total + piece
    if total is None:
        return RatMat.zeros(d, d)
    return total.scale(Fraction(specht_dim(lam), factorial(n)))
