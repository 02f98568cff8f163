"""Finite-rank invariants of the module category attached to a pure tuple.

Composition multiplicities and Ext dimensions are pure character
computations, delegated to the symmetric function engine.  The finite
rank side evaluates the diagram category on a concrete space k^N
equipped with a form (one linear functional on each generator Schur
functor): every block becomes a concrete contraction, every diagram a
matrix, and the traceless subspace of a tensor power together with its
symmetric group action realizes the simple objects.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product

from .combinat import Partition, PartitionTuple, schur_dim, specht_dim
from .exactla import RatMat, kernel_basis_with_free, solve, vstack
from .brauer import Morphism, hom_basis
from .schurweyl import get_tensor_rep, specht_word_expansions
from .symfun import (
    SchurExpr,
    exterior_power_char,
    inner_product,
    lr_product,
    sym_algebra_degree,
)
from .specht import isotypic_projector


class FormPoint:
    """A form on k^N for the tuple sigma: for each entry one linear
    functional on the corresponding Schur functor realization, stored as
    the row of its values on the realization basis."""

    __slots__ = ("sigma", "N", "comps")

    def __init__(self, sigma, N: int, comps):
        self.sigma = PartitionTuple(sigma)
        if not self.sigma.pure:
            raise ValueError("a form needs a pure tuple")
        self.N = int(N)
        comps = tuple(tuple(Fraction(c) for c in row) for row in comps)
        if len(comps) != len(self.sigma):
            raise ValueError("need exactly one component per entry of sigma")
        for p, row in enumerate(comps):
            if len(row) != schur_dim(self.sigma[p], self.N):
                raise ValueError(
                    f"component {p} must have length {schur_dim(self.sigma[p], self.N)}"
                )
        self.comps = comps

    def __eq__(self, other):
        return (
            isinstance(other, FormPoint)
            and self.sigma == other.sigma
            and self.N == other.N
            and self.comps == other.comps
        )

    def __hash__(self):
        return hash((self.sigma, self.N, self.comps))

    def __repr__(self):
        return f"FormPoint(sigma={self.sigma!s}, N={self.N})"


def random_form(sigma, N: int, seed: int) -> FormPoint:
    """Seeded random integer form; entries uniform in [-5, 5]."""
    rng = random.Random(seed)
    sigma = PartitionTuple(sigma)
    comps = [
        [rng.randint(-5, 5) for _ in range(schur_dim(p, N))] for p in sigma
    ]
    return FormPoint(sigma, N, comps)


# ---------------------------------------------------------------------------
# block functionals


def _omega_tilde(form: FormPoint, p: int) -> dict[tuple[int, ...], Fraction]:
    """The form component as a row over the pivot words of the realization."""
    rep = get_tensor_rep(form.sigma[p], form.N)
    table = form.comps[p]
    out: dict[tuple[int, ...], Fraction] = {}
    for cls, members in rep._class_members.items():
        inv = rep._solver(cls)
        k = len(members)
        for r in range(k):
            val = sum(
                (table[members[c]] * inv.data[c][r] for c in range(k)), Fraction(0)
            )
            if val:
                out[rep.pivot_words[members[r]]] = val
    return out


_functional_cache: dict = {}


def block_functional(form: FormPoint, p: int, t: int) -> dict[tuple[int, ...], Fraction]:
    """Values of the contraction attached to a block of type p with basis
    polytabloid t, as a dict over all words of length |sigma_p| in [N].

    The contraction factors through the Schur functor realization: first
    the equivariant projection labeled by the polytabloid, then the form
    component.
    """
    key = (form, p, t)
    cached = _functional_cache.get(key)
    if cached is not None:
        return cached
    shape = form.sigma[p]
    d = shape.size
    N = form.N
    out: dict[tuple[int, ...], Fraction] = {}
    if schur_dim(shape, N) == 0:
        _functional_cache[key] = out
        return out
    gamma = specht_word_expansions(shape)[t]
    omega = _omega_tilde(form, p)
    for u in product(range(1, N + 1), repeat=d):
        val = Fraction(0)
        for w, c in gamma.items():
            q = tuple(u[w[j] - 1] for j in range(d))
            v = omega.get(q)
            if v is not None:
                val += c * v
        if val:
            out[u] = val
    _functional_cache[key] = out
    return out


def _word_index(word: tuple[int, ...], N: int) -> int:
    idx = 0
    for x in word:
        idx = idx * N + (x - 1)
    return idx


def theta_apply(form: FormPoint, f: Morphism) -> RatMat:
    """The matrix of the specialization of a morphism at the form.

    Tensor slots of a disjoint union are ordered first factor then
    second; matchings act by the corresponding coordinate permutation.
    """
    if f.sigma != form.sigma:
        raise ValueError("morphism and form live over different tuples")
    N = form.N
    n, m = f.source, f.target
    rows, cols = N**m, N**n
    data = [[Fraction(0)] * cols for _ in range(rows)]
    for d, coeff in f.terms.items():
        fns = [
            (tuple(b.support), block_functional(form, b.type_index, b.basis_index))
            for b in d.blocks
        ]
        matching = d.matching
        for u in product(range(1, N + 1), repeat=n):
            val = coeff
            for support, fn in fns:
                sub = tuple(u[s - 1] for s in support)
                c = fn.get(sub)
                if c is None:
                    val = Fraction(0)
                    break
                val *= c
            if val == 0:
                continue
            tgt = [0] * m
            for s, t in matching:
                tgt[t - 1] = u[s - 1]
            data[_word_index(tuple(tgt), N)][_word_index(u, N)] += val
    return RatMat(rows, cols, data)


# ---------------------------------------------------------------------------
# traceless tensors


class TracelessSpace:
    """The joint kernel of all block contractions inside a tensor power,
    carrying the restricted symmetric group action."""

    __slots__ = ("sigma", "form", "n", "ambient_dim", "basis", "free_cols", "words", "_gens")

    def __init__(self, sigma, form: FormPoint, n: int, basis, free_cols):
        self.sigma = sigma
        self.form = form
        self.n = n
        self.ambient_dim = form.N**n
        self.basis = basis
        self.free_cols = free_cols
        self.words = list(product(range(1, form.N + 1), repeat=n))
        self._gens = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, vec) -> tuple[Fraction, ...]:
        """Coordinates via the free columns of the kernel basis."""
        return tuple(vec[c] for c in self.free_cols)

    def _permute_vector(self, vec, one_line):
        """Apply the place permutation (slot i content moves to slot
        one_line[i]) to an ambient vector."""
        N = self.form.N
        out = [Fraction(0)] * self.ambient_dim
        for idx, c in enumerate(vec):
            if c == 0:
                continue
            w = self.words[idx]
            neww = [0] * self.n
            for i in range(self.n):
                neww[one_line[i]] = w[i]
            out[_word_index(tuple(neww), N)] = c
        return out

    def perm_matrix(self, one_line) -> RatMat:
        cols = [self.coords(self._permute_vector(b, one_line)) for b in self.basis]
        return RatMat(self.dim, self.dim, list(zip(*cols)) if cols else [])

    def generators(self) -> list[RatMat]:
        if self._gens is None:
            gens = []
            for k in range(self.n - 1):
                ol = list(range(self.n))
                ol[k], ol[k + 1] = ol[k + 1], ol[k]
                gens.append(self.perm_matrix(tuple(ol)))
            self._gens = gens
        return self._gens


def _constraint_matrices(sigma: PartitionTuple, form: FormPoint, n: int) -> list[RatMat]:
    N = form.N
    out = []
    for p, shape in enumerate(sigma):
        d = shape.size
        if d > n:
            continue
        for t in range(specht_dim(shape)):
            fn = block_functional(form, p, t)
            for S in combinations(range(1, n + 1), d):
                rows = N ** (n - d)
                cols = N**n
                data = [[Fraction(0)] * cols for _ in range(rows)]
                rest = [s for s in range(1, n + 1) if s not in S]
                for u in product(range(1, N + 1), repeat=n):
                    sub = tuple(u[s - 1] for s in S)
                    c = fn.get(sub)
                    if not c:
                        continue
                    tgt = tuple(u[s - 1] for s in rest)
                    data[_word_index(tgt, N)][_word_index(u, N)] += c
                out.append(RatMat(rows, cols, data))
    return out


_traceless_cache: dict = {}
_hom_kernel_cache: dict = {}


def traceless_space(sigma, form: FormPoint, n: int) -> TracelessSpace:
    """Intersection of the kernels of every block contraction on n slots."""
    sigma = PartitionTuple(sigma)
    if sigma != form.sigma:
        raise ValueError("form does not match sigma")
    if n < 0:
        raise ValueError("n must be non-negative")
    key = (sigma, form, n)
    cached = _traceless_cache.get(key)
    if cached is not None:
        return cached
    mats = _constraint_matrices(sigma, form, n)
    if mats:
        basis, free = kernel_basis_with_free(vstack(mats))
    else:
        basis, free = kernel_basis_with_free(RatMat.zeros(1, form.N**n))
    space = TracelessSpace(sigma, form, n, basis, free)
    _traceless_cache[key] = space
    return space


def _isotypic_dim(space: TracelessSpace, lam: Partition) -> int:
    """Dimension of the lam-isotypic piece of a traceless space; the rank of
    the exact idempotent equals its trace."""
    n = lam.size
    if space.dim == 0:
        return 0
    if n <= 1:
        return space.dim
    proj = isotypic_projector(
        n, lam, space.generators(), perm_action=space.perm_matrix
    )
    tr = proj.trace()
    if tr.denominator != 1 or tr < 0:
        raise RuntimeError("isotypic projector trace is not a non-negative integer")
    # idempotence check: full product on small spaces, probe vectors otherwise
    if space.dim <= 48:
        if proj @ proj != proj:
            raise RuntimeError("isotypic projector failed the idempotence check")
    else:
        rng = random.Random(517 + space.dim)
        for _ in range(6):
            v = tuple(Fraction(rng.randint(-3, 3)) for _ in range(space.dim))
            pv = proj.matvec(v)
            if proj.matvec(pv) != pv:
                raise RuntimeError("isotypic projector failed the idempotence check")
    return int(tr)


def simple_realization_dim(sigma, form: FormPoint, lam: Partition) -> int:
    """Dimension of the lam-isotypic piece of the traceless space on |lam|
    slots: the rank-N realization of the corresponding simple object."""
    lam = Partition(lam)
    space = traceless_space(sigma, form, lam.size)
    dim = _isotypic_dim(space, lam)
    f = specht_dim(lam)
    if dim % f != 0:
        raise RuntimeError(
            "isotypic dimension is not divisible by the Specht dimension; "
            "this indicates an internal inconsistency"
        )
    return dim


def socle_check(sigma, form: FormPoint, lam: Partition) -> bool:
    """Compare two descriptions of the traceless subspace on |lam| slots:
    the kernels of the generating block contractions against the kernels
    of every basis morphism to a strictly smaller object, specialized at
    the form.  Returns whether the lam-isotypic dimensions agree."""
    sigma = PartitionTuple(sigma)
    lam = Partition(lam)
    n = lam.size
    gen_space = traceless_space(sigma, form, n)
    key = (sigma, form, n)
    hom_space = _hom_kernel_cache.get(key)
    if hom_space is None:
        mats = []
        for m in range(n):
            for d in hom_basis(sigma, n, m):
                mats.append(theta_apply(form, Morphism.from_diagram(sigma, d)))
        if mats:
            basis, free = kernel_basis_with_free(vstack(mats))
        else:
            basis, free = kernel_basis_with_free(RatMat.zeros(1, form.N**n))
        hom_space = TracelessSpace(sigma, form, n, basis, free)
        _hom_kernel_cache[key] = hom_space
    return _isotypic_dim(gen_space, lam) == _isotypic_dim(hom_space, lam)


# ---------------------------------------------------------------------------
# character-level invariants


def multiplicity(sigma, lam, mu) -> int:
    """Composition multiplicity of the simple labeled mu inside the
    injective labeled lam; the pairing of s_lam against s_mu times the
    degree |lam|-|mu| part of the free algebra character."""
    sigma = PartitionTuple(sigma)
    lam, mu = Partition(lam), Partition(mu)
    if mu.size > lam.size:
        return 0
    piece = sym_algebra_degree(sigma, lam.size - mu.size)
    val = inner_product(SchurExpr.schur(lam), lr_product(SchurExpr.schur(mu), piece))
    assert val.denominator == 1 and val >= 0
    return int(val)


def ext_dim(sigma, i: int, lam, mu) -> int:
    """Dimension of the degree-i Ext space between the simples labeled lam
    and mu, via the exterior powers of the generator space."""
    sigma = PartitionTuple(sigma)
    if i < 0:
        raise ValueError("i must be non-negative")
    lam, mu = Partition(lam), Partition(mu)
    wedge = exterior_power_char(sigma, i)
    val = inner_product(
        lr_product(wedge, SchurExpr.schur(lam)), SchurExpr.schur(mu)
    )
    assert val.denominator == 1 and val >= 0
    return int(val)


class InjectivePresentation:
    """The label lam together with, for each strictly smaller mu, the basis
    morphisms into the mu-sized object (their specializations, cut down by
    isotypic projectors, present the injective for lam)."""

    __slots__ = ("sigma", "lam", "lower_maps")

    def __init__(self, sigma, lam, lower_maps):
        self.sigma = PartitionTuple(sigma)
        self.lam = Partition(lam)
        for mu in lower_maps:
            if Partition(mu).size >= self.lam.size:
                raise ValueError("lower maps must target strictly smaller labels")
        self.lower_maps = {Partition(mu): tuple(ms) for mu, ms in lower_maps.items()}


def injective_presentation(sigma, lam) -> InjectivePresentation:
    sigma = PartitionTuple(sigma)
    lam = Partition(lam)
    n = lam.size
    from .combinat import partitions

    lower = {}
    for m in range(n):
        basis = [Morphism.from_diagram(sigma, d) for d in hom_basis(sigma, n, m)]
        for mu in partitions(m):
            lower[mu] = basis
    return InjectivePresentation(sigma, lam, lower)


# ---------------------------------------------------------------------------
# distinguished forms


def _embed(g: RatMat, N: int) -> RatMat:
    if g.rows > N or g.cols > N:
        raise ValueError("matrix does not fit inside the requested rank")
    data = [[Fraction(int(i == j)) for j in range(N)] for i in range(N)]
    for i in range(g.rows):
        for j in range(g.cols):
            data[i][j] = g.data[i][j]
    return RatMat(N, N, data)


def translate(form: FormPoint, g: RatMat) -> FormPoint:
    """The form v -> omega(g v): the inverse translate of omega by g."""
    if g == RatMat.identity(g.rows):
        return form
    comps = []
    for p, shape in enumerate(form.sigma):
        rep = get_tensor_rep(shape, form.N)
        if rep.dim == 0:
            comps.append(())
            continue
        act = rep.act_matrix(_embed(g, form.N))
        row = form.comps[p]
        comps.append(
            tuple(
                sum((row[i] * act.data[i][j] for i in range(rep.dim)), Fraction(0))
                for j in range(rep.dim)
            )
        )
    return FormPoint(form.sigma, form.N, comps)


def form_from_tensor_values(sigma, N: int, p: int, values: dict) -> FormPoint:
    """Solve for a form whose block contraction (for the first basis
    polytabloid of entry p) takes prescribed values on the given words;
    unspecified components are zero."""
    sigma = PartitionTuple(sigma)
    shape = sigma[p]
    d = shape.size
    r = schur_dim(shape, N)
    gamma = specht_word_expansions(shape)[0]
    rep = get_tensor_rep(shape, N)
    rows = []
    rhs = []
    for u, target in sorted(values.items()):
        row = [Fraction(0)] * r
        # F(e_u) = sum_w gamma_w * omega~(u o w); omega~ is linear in the table
        for w, c in gamma.items():
            q = tuple(u[w[j] - 1] for j in range(d))
            cls = tuple(sorted(q))
            members = rep._class_members.get(cls)
            if members is None:
                continue
            inv = rep._solver(cls)
            pivots = [rep.pivot_words[j] for j in members]
            if q not in pivots:
                continue
            ridx = pivots.index(q)
            for cidx in range(len(members)):
                row[members[cidx]] += c * inv.data[cidx][ridx]
        rows.append(row)
        rhs.append(Fraction(target))
    sol = solve(RatMat(len(rows), r, rows), rhs)
    if sol is None:
        raise ValueError("no form takes the prescribed values")
    return FormPoint(sigma, N, [sol if q == p else [0] * schur_dim(sigma[q], N) for q in range(len(sigma))])


def dot_product_form(N: int) -> FormPoint:
    """The standard symmetric bilinear form on k^N as a FormPoint for [(2)]."""
    sigma = PartitionTuple(((2,),))
    values = {}
    for i in range(1, N + 1):
        for j in range(i, N + 1):
            values[(i, j)] = 1 if i == j else 0
    return form_from_tensor_values(sigma, N, 0, values)


def monomial_cubic_form(M: int) -> FormPoint:
    """The cubic monomial form x1 x2 x3 at rank M (for sigma = [(3)]): the
    functional picking the coefficient of the symmetrized basis vector on
    the word (1, 2, 3)."""
    if M < 3:
        raise ValueError("the monomial form needs rank at least 3")
    sigma = PartitionTuple(((3,),))
    rep = get_tensor_rep(Partition((3,)), M)
    table = [Fraction(0)] * rep.dim
    idx = rep.source_words.index((1, 2, 3))
    table[idx] = Fraction(1)
    return FormPoint(sigma, M, [table])
