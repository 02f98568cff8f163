"""Independent oracles and small utilities shared by the test modules."""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product

from sigmabrauer.combinat import Partition
from sigmabrauer.exactla import RatMat
from sigmabrauer.symfun import SchurExpr, monomials_to_schur


# ---------------------------------------------------------------------------
# plethysm by explicit monomial substitution


def ssyt_monomials(shape: Partition, nvars: int):
    """Exponent vectors of the monomials of a Schur function, one per
    semistandard tableau, enumerated directly by backtracking."""
    shape = Partition(shape)
    if shape.size == 0:
        yield (0,) * nvars
        return
    if len(shape) > nvars:
        return
    rows = len(shape)
    tab = [[0] * shape[i] for i in range(rows)]

    def rec(i: int, j: int):
        if i == rows:
            exp = [0] * nvars
            for row in tab:
                for v in row:
                    exp[v - 1] += 1
            yield tuple(exp)
            return
        ni, nj = (i, j + 1) if j + 1 < shape[i] else (i + 1, 0)
        lo = 1
        if j > 0:
            lo = max(lo, tab[i][j - 1])
        if i > 0:
            lo = max(lo, tab[i - 1][j] + 1)
        for v in range(lo, nvars + 1):
            tab[i][j] = v
            yield from rec(ni, nj)
        tab[i][j] = 0

    yield from rec(0, 0)


def plethysm_brute(outer: int, inner: SchurExpr, mode: str) -> SchurExpr:
    """Brute-force plethysm: expand the inner function into an explicit list
    of monomials in max(8, result degree) variables, substitute them into
    the outer complete/exterior function by enumerating index multisets or
    subsets, then convert back to the Schur basis."""
    assert mode in ("h", "e")
    if outer == 0:
        return SchurExpr.one()
    if not inner:
        return SchurExpr.zero()
    degree = outer * inner.max_degree()
    nvars = max(8, degree)
    shift = max(degree.bit_length() + 1, 5)
    packed: list[int] = []
    for p, c in inner.terms.items():
        assert c.denominator == 1 and c >= 0
        for exp in ssyt_monomials(p, nvars):
            word = 0
            for k, e in enumerate(exp):
                word |= e << (shift * k)
            packed.extend([word] * int(c))
    chooser = combinations_with_replacement if mode == "h" else combinations
    acc: dict[int, int] = {}
    for combo in chooser(packed, outer):
        acc[sum(combo)] = acc.get(sum(combo), 0) + 1
    mask = (1 << shift) - 1
    mono: dict[tuple[int, ...], Fraction] = {}
    for word, c in acc.items():
        exp = tuple((word >> (shift * k)) & mask for k in range(nvars))
        mono[exp] = mono.get(exp, Fraction(0)) + c
    return monomials_to_schur(mono, nvars)


# ---------------------------------------------------------------------------
# symmetric group utilities


def conjugacy_class_size(cls: Partition) -> int:
    cls = Partition(cls)
    z = 1
    for part, k in Counter(cls).items():
        z *= part**k * math.factorial(k)
    return math.factorial(cls.size) // z


def regular_representation_gens(n: int) -> list[RatMat]:
    """Adjacent transposition matrices of the left regular representation."""
    from itertools import permutations as iperm

    elems = list(iperm(range(n)))
    eidx = {e: i for i, e in enumerate(elems)}

    def compose(a, b):
        return tuple(a[b[i]] for i in range(n))

    gens = []
    for k in range(n - 1):
        s = list(range(n))
        s[k], s[k + 1] = s[k + 1], s[k]
        s = tuple(s)
        mat = [[0] * len(elems) for _ in elems]
        for e in elems:
            mat[eidx[compose(s, e)]][eidx[e]] = 1
        gens.append(RatMat(len(elems), len(elems), mat))
    return gens


# ---------------------------------------------------------------------------
# brute-force traceless isotypic dimension (independent of the engine path)


def traceless_isotypic_brute(form, lam: Partition) -> int:
    """For the symmetric bilinear tuple [(2)]: the dimension of the
    lam-isotypic part of the joint contraction kernel, computed from
    scratch: the Gram matrix comes straight from the realization
    coordinates and the form table, the contraction matrices and the
    ambient projector are assembled directly, and the answer is the
    nullity of one stacked matrix."""
    from sigmabrauer.schurweyl import get_tensor_rep
    from sigmabrauer.specht import cycle_type, sn_character
    from sigmabrauer.combinat import specht_dim
    from sigmabrauer.exactla import kernel_basis, vstack
    from itertools import permutations as iperm

    lam = Partition(lam)
    n = lam.size
    N = form.N
    assert tuple(tuple(p) for p in form.sigma) == ((2,),)
    rep = get_tensor_rep(Partition((2,)), N)
    table = form.comps[0]
    gram = [[Fraction(0)] * N for _ in range(N)]
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            vec = rep.symmetrizer_image((i, j))
            coords = rep.coords(vec)
            gram[i - 1][j - 1] = sum(
                (table[k] * coords[k] for k in range(rep.dim)), Fraction(0)
            )

    words = list(product(range(1, N + 1), repeat=n))
    widx = {w: i for i, w in enumerate(words)}
    mats = []
    for a in range(n):
        for b in range(a + 1, n):
            rows_words = list(product(range(1, N + 1), repeat=n - 2))
            ridx = {w: i for i, w in enumerate(rows_words)}
            data = [[Fraction(0)] * len(words) for _ in rows_words]
            for w in words:
                c = gram[w[a] - 1][w[b] - 1]
                if c == 0:
                    continue
                rest = tuple(x for k, x in enumerate(w) if k not in (a, b))
                data[ridx[rest]][widx[w]] += c
            mats.append(RatMat(len(rows_words), len(words), data))

    # ambient isotypic projector, assembled from raw permutation matrices
    total = [[Fraction(0)] * len(words) for _ in words]
    for perm in iperm(range(n)):
        chi = sn_character(lam, cycle_type(perm))
        if chi == 0:
            continue
        for w in words:
            neww = [0] * n
            for i in range(n):
                neww[perm[i]] = w[i]
            total[widx[tuple(neww)]][widx[w]] += chi
    scale = Fraction(specht_dim(lam), math.factorial(max(n, 1)))
    proj = RatMat(len(words), len(words), [[scale * x for x in row] for row in total])
    ident = RatMat.identity(len(words))
    mats.append(ident - proj)
    return len(kernel_basis(vstack(mats)))
