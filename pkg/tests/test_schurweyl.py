import math
import random
from fractions import Fraction

import pytest

from sigmabrauer.brauer import hom_basis
from sigmabrauer.combinat import Partition, PartitionTuple, schur_dim
from sigmabrauer.exactla import RatMat
from sigmabrauer.schurweyl import (
    diagram_weight_iso,
    evaluate_rep,
    get_tensor_rep,
    specht_word_expansions,
    weight_space_basis,
)
from sigmabrauer.specht import get_specht_module

SIG2 = PartitionTuple(((2,),))
FAMILY = [
    SIG2,
    PartitionTuple(((1, 1),)),
    PartitionTuple(((1,),)),
    PartitionTuple(((1,), (1,))),
    PartitionTuple(((3,),)),
    PartitionTuple(((2,), (1,))),
]


def test_weight_basis_fixtures():
    assert len(weight_space_basis(SIG2, 4, 0)) == 3
    assert len(weight_space_basis(SIG2, 3, 1)) == 3
    for sigma in FAMILY:
        for n in range(5):
            assert len(weight_space_basis(sigma, n, n)) == math.factorial(n)


def test_weight_basis_partitions_ground_set():
    for el in weight_space_basis(PartitionTuple(((2,), (1,))), 4, 1):
        labels = list(el.word)
        for support, _p, _t in el.blocks:
            labels.extend(support)
        assert sorted(labels) == [1, 2, 3, 4]


def test_weight_basis_rejects_impure_sigma():
    with pytest.raises(ValueError):
        weight_space_basis(PartitionTuple(((),)), 1, 0)


def test_iso_is_a_bijection_onto_hom_basis():
    for sigma in FAMILY:
        for n in range(5):
            for m in range(n + 1):
                iso = diagram_weight_iso(sigma, n, m)
                hb = hom_basis(sigma, n, m)
                assert len(iso) == len(hb)
                assert len(set(iso.values())) == len(iso)
                assert set(iso.values()) == set(hb)


def test_permutation_words_map_to_permutation_diagrams():
    iso = diagram_weight_iso(SIG2, 3, 3)
    for el, d in iso.items():
        assert not d.blocks
        assert dict(d.matching) == {s: j + 1 for j, s in enumerate(el.word)}


def test_evaluate_rep_dims():
    assert evaluate_rep(Partition((1,)), 4).dim == 4
    assert evaluate_rep(Partition((1, 1)), 3).dim == 3
    assert evaluate_rep(Partition((2, 1)), 3).dim == 8
    parts = evaluate_rep(PartitionTuple(((2,), (1,))), 3)
    assert [r.dim for r in parts] == [6, 3]
    assert evaluate_rep(Partition((2, 1, 1)), 2).dim == 0


def test_standard_representation_action():
    rep = get_tensor_rep(Partition((1,)), 3)
    g = RatMat(3, 3, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert rep.act_matrix(g) == g


def test_torus_traces_match_principal_specialization():
    from sigmabrauer.symfun import schur_monomials

    for n in range(5):
        from sigmabrauer.combinat import partitions

        for shape in partitions(n):
            for N in range(1, 5):
                rep = get_tensor_rep(shape, N)
                if rep.dim == 0:
                    continue
                for q in (2, 3):
                    g = [[int(i == j) for j in range(N)] for i in range(N)]
                    g[0][0] = q
                    tr = rep.act_matrix(RatMat(N, N, g)).trace()
                    expected = sum(
                        c * q ** exp[0] for exp, c in schur_monomials(shape, N)
                    )
                    assert tr == expected


def test_act_matrix_is_multiplicative():
    rng = random.Random(8)
    rep = get_tensor_rep(Partition((2, 1)), 3)
    for _ in range(5):
        a = RatMat(3, 3, [[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)])
        b = RatMat(3, 3, [[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)])
        assert rep.act_matrix(a @ b) == rep.act_matrix(a) @ rep.act_matrix(b)


def test_restriction_indices_nest():
    rep = get_tensor_rep(Partition((2,)), 5)
    for n in range(6):
        assert len(rep.restriction_indices(n)) == schur_dim(Partition((2,)), n)
    rep3 = get_tensor_rep(Partition((2, 1)), 4)
    for n in range(5):
        assert len(rep3.restriction_indices(n)) == schur_dim(Partition((2, 1)), n)


def test_specht_word_expansions_are_equivariant():
    for shape in [(2,), (1, 1), (3,), (2, 1), (2, 2), (3, 1)]:
        shape = Partition(shape)
        d = shape.size
        exps = specht_word_expansions(shape)
        module = get_specht_module(shape, tuple(range(1, d + 1)))
        gens = module.generator_matrices()
        for k in range(d - 1):
            swap = {x: x for x in range(1, d + 1)}
            swap[k + 1], swap[k + 2] = k + 2, k + 1
            for t in range(module.dim):
                lhs: dict = {}
                for ss in range(module.dim):
                    c = gens[k].data[ss][t]
                    if c == 0:
                        continue
                    for w, v in exps[ss].items():
                        lhs[w] = lhs.get(w, Fraction(0)) + c * v
                lhs = {w: c for w, c in lhs.items() if c != 0}
                rhs = {tuple(swap[x] for x in w): v for w, v in exps[t].items()}
                assert lhs == rhs
