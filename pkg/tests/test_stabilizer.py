import random
from fractions import Fraction

import pytest

from sigmabrauer.combinat import Partition, PartitionTuple
from sigmabrauer.modcat import monomial_cubic_form, random_form
from sigmabrauer.schurweyl import get_tensor_rep
from sigmabrauer.stabilizer import (
    GLElement,
    GammaQuery,
    PreconditionError,
    evaluation_presentation,
    gamma_linearity_check,
    gamma_product_level,
    germinal_axiom_suite,
    in_gamma,
    permutation_element,
    random_block_fixing,
    random_unimodular,
)

SIG3 = PartitionTuple(((3,),))
SIG2 = PartitionTuple(((2,),))


def test_gl_element_normalization():
    assert GLElement([[1, 0], [0, 1]]).m == 0
    assert GLElement([[2, 0], [0, 1]]) == GLElement([[2]])
    with pytest.raises(ValueError):
        GLElement([[1, 2], [2, 4]])
    with pytest.raises(ValueError):
        GLElement([[1, 2, 3], [4, 5, 6]])


def test_gl_element_product_extends_by_identity():
    a = GLElement([[0, 1], [1, 0]])
    b = GLElement([[1, 0, 0], [0, 1, 0], [0, 0, 2]])
    ab = a * b
    assert ab.m == 3
    assert ab.embed(3) == a.embed(3) @ b.embed(3)


def test_identity_membership_all_levels():
    form = random_form(SIG3, 4, seed=1)
    for lvl in range(5):
        assert in_gamma(GammaQuery(form, lvl, GLElement([])))


def test_block_fixing_elements_are_members():
    rng = random.Random(0)
    form = random_form(SIG3, 4, seed=3)
    for _ in range(20):
        g = random_block_fixing(2, 4, rng)
        assert in_gamma(GammaQuery(form, 2, g))


def test_generic_cubic_rejects_coordinate_swap():
    form = random_form(SIG3, 3, seed=123)
    swap = permutation_element({1: 2, 2: 1})
    assert not in_gamma(GammaQuery(form, 2, swap))


def test_level_violation_names_required_rank():
    form = random_form(SIG3, 3, seed=2)
    g = random_unimodular(5, random.Random(1))
    if g.m <= 3:  # ensure the sample is actually big
        g = GLElement([[1, 0, 0, 0, 1], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]])
    with pytest.raises(PreconditionError) as exc:
        in_gamma(GammaQuery(form, 2, g))
    assert "rank" in str(exc.value)


def test_monomial_form_symmetries():
    mono = monomial_cubic_form(4)
    cyc = permutation_element({1: 2, 2: 3, 3: 1})
    swap = permutation_element({1: 2, 2: 1})
    for lvl in range(5):
        assert in_gamma(GammaQuery(mono, lvl, cyc))
        assert in_gamma(GammaQuery(mono, lvl, swap))
    # torus elements with product one fix the monomial
    torus = GLElement([[2, 0, 0], [0, 3, 0], [0, 0, Fraction(1, 6)]])
    assert in_gamma(GammaQuery(mono, 4, torus))
    bad_torus = GLElement([[2, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert not in_gamma(GammaQuery(mono, 3, bad_torus))
    shear = GLElement([[1, 1], [0, 1]])
    assert not in_gamma(GammaQuery(mono, 3, shear))


def test_gamma_product_level_fixture():
    assert gamma_product_level(GLElement([[2, 0], [0, 1]]), 5) == 5
    g = GLElement([[int(i == j) for j in range(7)] for i in range(6)] + [[0, 0, 0, 0, 0, 0, 2]])
    assert gamma_product_level(g, 3) == 7


def test_product_law_randomized():
    rng = random.Random(6)
    form = random_form(SIG3, 5, seed=44)
    for _ in range(30):
        n = rng.randint(1, 3)
        g = random_block_fixing(n, 5, rng)
        assert in_gamma(GammaQuery(form, n, g))
        j = gamma_product_level(g, n)
        h = random_block_fixing(j, 5, rng)
        assert in_gamma(GammaQuery(form, n, h * g))


def test_axiom_suite_generic_and_monomial():
    form = random_form(SIG3, 5, seed=77)
    reports = germinal_axiom_suite(form, [1, 2, 3, 4, 5], samples=25, seed=10)
    assert [r["axiom"] for r in reports] == ["a", "b", "c"]
    for r in reports:
        assert r["passes"] == r["samples"]
        assert r["failures"] == []
    mono = monomial_cubic_form(4)
    cyc = permutation_element({1: 2, 2: 3, 3: 1})
    swap = permutation_element({1: 2, 2: 1})
    reports = germinal_axiom_suite(mono, [1, 2, 3, 4], samples=25, seed=11, extra_members=[cyc, swap])
    for r in reports:
        assert r["passes"] == r["samples"]
        assert r["failures"] == []


def test_axiom_suite_level_validation():
    form = random_form(SIG3, 3, seed=5)
    with pytest.raises(PreconditionError):
        germinal_axiom_suite(form, [1, 7], samples=5, seed=0)


def test_gamma_linearity_positive():
    rng = random.Random(0)
    form = random_form(SIG3, 4, seed=3)
    rep = get_tensor_rep(Partition((3,)), 4)
    idx = rep.restriction_indices(2)
    v = [Fraction(0)] * rep.dim
    v[idx[0]] = Fraction(2)
    v[idx[-1]] = Fraction(-1)
    phi = evaluation_presentation(form, 0, v)
    g = random_block_fixing(2, 4, rng)
    assert gamma_linearity_check(SIG3, form, phi, 2, g, v) is True


def test_gamma_linearity_monomial_cycle():
    mono = monomial_cubic_form(4)
    rep = get_tensor_rep(Partition((3,)), 4)
    idx3 = rep.restriction_indices(3)
    v = [Fraction(0)] * rep.dim
    v[idx3[0]] = Fraction(1)
    v[idx3[2]] = Fraction(3)
    phi = evaluation_presentation(mono, 0, v)
    cyc = permutation_element({1: 2, 2: 3, 3: 1})
    assert gamma_linearity_check(SIG3, mono, phi, 3, cyc, v) is True


def test_gamma_linearity_negative_control():
    form = random_form(SIG3, 4, seed=3)
    rep = get_tensor_rep(Partition((3,)), 4)
    v = [Fraction(0)] * rep.dim
    v[rep.source_words.index((2, 2, 2))] = Fraction(1)
    phi = evaluation_presentation(form, 0, v)
    shear = GLElement([[1, 1], [0, 1]])
    assert not in_gamma(GammaQuery(form, 2, shear))
    assert gamma_linearity_check(SIG3, form, phi, 2, shear, v) is False


def test_gamma_linearity_preconditions_are_distinct():
    form = random_form(SIG3, 4, seed=3)
    rep = get_tensor_rep(Partition((3,)), 4)
    v = [Fraction(1)] * rep.dim  # not supported on k^2
    phi = evaluation_presentation(form, 0, v)
    g = random_block_fixing(2, 4, random.Random(0))
    with pytest.raises(PreconditionError):
        gamma_linearity_check(SIG3, form, phi, 2, g, v)
    big = GLElement([[int(i == j) for j in range(5)] for i in range(4)] + [[0, 0, 0, 0, 2]])
    w = [Fraction(0)] * rep.dim
    w[rep.restriction_indices(2)[0]] = Fraction(1)
    with pytest.raises(PreconditionError):
        gamma_linearity_check(SIG3, form, evaluation_presentation(form, 0, w), 2, big, w)


def test_gamma_linearity_with_module_target():
    # phi(1 (x) v) = omega(v) * (1 (x) u): a map into the standard-type module
    rng = random.Random(2)
    form = random_form(SIG3, 4, seed=3)
    rep = get_tensor_rep(Partition((3,)), 4)
    std = get_tensor_rep(Partition((1,)), 4)
    v = [Fraction(0)] * rep.dim
    v[rep.restriction_indices(2)[0]] = Fraction(1)
    v[rep.source_words.index((2, 2, 2))] = Fraction(2)
    poly = {((0, j),): c for j, c in enumerate(v) if c}
    u = [Fraction(1), Fraction(-2), Fraction(0), Fraction(0)]
    from sigmabrauer.stabilizer import MapPresentation

    phi = MapPresentation(0, Partition((1,)), ((poly, tuple(u)),))
    good = random_block_fixing(2, 4, rng)
    assert gamma_linearity_check(SIG3, form, phi, 2, good, v) is True
    shear = GLElement([[1, 1], [0, 1]])
    assert gamma_linearity_check(SIG3, form, phi, 2, shear, v) is False
