import random
from fractions import Fraction

import pytest

from helpers import plethysm_brute
from sigmabrauer.combinat import Partition, PartitionTuple, partitions, schur_dim
from sigmabrauer.symfun import (
    SchurExpr,
    inner_product,
    kostka,
    lr_product,
    plethysm_e,
    plethysm_h,
    shift_decompose,
    skew_schur_expand,
    sym_algebra_degree,
)

s = SchurExpr.schur


def test_lr_fixtures():
    assert lr_product(s((1,)), s((1,))) == SchurExpr({(2,): 1, (1, 1): 1})
    assert lr_product(s((3, 1)), SchurExpr.one()) == s((3, 1))
    assert lr_product(s((2,)), s((2,))) == SchurExpr({(4,): 1, (3, 1): 1, (2, 2): 1})
    # a case with a multiplicity
    assert lr_product(s((2, 1)), s((2, 1))).coefficient((3, 2, 1)) == 2


def test_lr_commutative_associative():
    rng = random.Random(2024)
    pool = [p for n in range(5) for p in partitions(n)]
    for _ in range(100):
        a, b, c = (s(rng.choice(pool)) for _ in range(3))
        ab = lr_product(a, b)
        assert ab == lr_product(b, a)
        assert lr_product(ab, c) == lr_product(a, lr_product(b, c))


def test_lr_degree_additive_and_bilinear():
    a = s((2,)) + s((1,)).scale(Fraction(1, 2))
    b = s((1, 1))
    prod = lr_product(a, b)
    assert prod.degrees() == {3, 4}
    assert prod.degree_component(3) == lr_product(s((1,)), b).scale(Fraction(1, 2))


def test_skew_matches_lr():
    # the coefficient of s_lam in s_mu s_nu equals the coefficient of
    # s_nu in the skew expansion of lam/mu
    rng = random.Random(7)
    pool = [p for n in range(1, 5) for p in partitions(n)]
    for _ in range(60):
        mu, nu = rng.choice(pool), rng.choice(pool)
        prod = lr_product(s(mu), s(nu))
        for lam, c in prod.terms.items():
            assert skew_schur_expand(lam, mu).coefficient(nu) == c


def test_skew_trivial_cases():
    assert skew_schur_expand(Partition((2, 1)), Partition((2, 1))) == SchurExpr.one()
    assert skew_schur_expand(Partition((2,)), Partition((3,))) == SchurExpr.zero()
    assert skew_schur_expand(Partition((2, 1)), Partition(())) == s((2, 1))


def test_inner_product():
    assert inner_product(s((3, 1)), s((3, 1))) == 1
    assert inner_product(s((2,)), s((1, 1))) == 0
    assert inner_product(s((2, 2)), lr_product(s((2,)), s((2,)))) == 1


def test_plethysm_fixtures():
    assert plethysm_h(1, s((2,))) == s((2,))
    assert plethysm_h(2, s((2,))) == SchurExpr({(4,): 1, (2, 2): 1})
    assert plethysm_e(2, s((2,))) == s((3, 1))
    for a in range(5):
        assert plethysm_h(a, s((1,))) == s((a,) if a else ())
        assert plethysm_e(a, s((1,))) == s((1,) * a)


def test_plethysm_rejects_virtual_characters():
    with pytest.raises(ValueError):
        plethysm_h(2, s((1,)).scale(-1))
    with pytest.raises(ValueError):
        plethysm_e(2, s((1,)).scale(Fraction(1, 2)))


def test_koszul_exactness_of_characters():
    # sum over i of (-1)^i e_i[f] h_{a-i}[f] vanishes in positive degree
    for f in [s((2,)), s((3,)), s((1, 1))]:
        g = f.max_degree()
        for d in range(1, 9):
            if d % g:
                continue
            a = d // g
            total = SchurExpr.zero()
            for i in range(a + 1):
                term = lr_product(plethysm_e(i, f), plethysm_h(a - i, f))
                total = total + term.scale((-1) ** i)
            assert not total.degree_component(d), (f, d)


def test_plethysm_against_brute_oracle_small():
    # the full sweep (inner degree <= 3, outer <= 3) runs in acceptance
    for shape in [(1,), (2,), (1, 1)]:
        for a in range(4):
            assert plethysm_h(a, s(shape)) == plethysm_brute(a, s(shape), "h")
            assert plethysm_e(a, s(shape)) == plethysm_brute(a, s(shape), "e")
    mixed = s((2,)) + s((1,))
    for a in range(3):
        assert plethysm_h(a, mixed) == plethysm_brute(a, mixed, "h")
        assert plethysm_e(a, mixed) == plethysm_brute(a, mixed, "e")


def test_kostka_basics():
    assert kostka(Partition((2, 1)), (1, 1, 1)) == 2
    assert kostka(Partition((2, 1)), (2, 1)) == 1
    assert kostka(Partition((2, 1)), (3,)) == 0
    assert kostka(Partition((3,)), (1, 1, 1)) == 1


def test_sym_algebra_degree():
    sig = PartitionTuple(((2,),))
    assert sym_algebra_degree(sig, 0) == SchurExpr.one()
    assert sym_algebra_degree(sig, 2) == s((2,))
    assert sym_algebra_degree(sig, 4) == SchurExpr({(4,): 1, (2, 2): 1})
    assert sym_algebra_degree(sig, 3) == SchurExpr.zero()
    two = PartitionTuple(((1,), (1,)))
    # two degree-1 generators: degree d part has dimension-counting character
    assert sym_algebra_degree(two, 1) == s((1,)).scale(2)
    with pytest.raises(ValueError):
        sym_algebra_degree(PartitionTuple(((1,), ())), 2)


def test_shift_fixtures():
    assert shift_decompose(Partition((3, 1)), 0) == {Partition((3, 1)): 1}
    assert shift_decompose(Partition((2,)), 1) == {
        Partition(()): 1,
        Partition((1,)): 1,
        Partition((2,)): 1,
    }
    assert shift_decompose(Partition((1, 1)), 2) == {
        Partition(()): 1,
        Partition((1,)): 2,
        Partition((1, 1)): 1,
    }


def test_shift_invariants():
    for n in range(4):
        for size in range(5):
            for lam in partitions(size):
                dec = shift_decompose(lam, n)
                assert dec.get(lam) == 1
                for nu in dec:
                    if nu != lam:
                        assert nu.size < lam.size
                for N in range(5):
                    total = sum(m * schur_dim(nu, N) for nu, m in dec.items())
                    assert total == schur_dim(lam, n + N)
