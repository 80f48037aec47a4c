"""Defining relations, the polarization, and the tensor-square lowering
identities of the 8-dimensional module."""

from fractions import Fraction

import pytest

from d43crystal import fundrep as fr
from d43crystal.exactalg import QR_ONE, QR_ZERO, q_int, q_power


@pytest.fixture(scope="module")
def rep():
    return fr.build_v1()


@pytest.fixture(scope="module")
def gram(rep):
    return fr.build_polarization(rep)


def test_defining_relations(rep):
    rels = fr.check_defining_relations(rep)
    bad = [k for k, v in rels.items() if not v]
    assert not bad, bad
    # both Serre families are present in the report
    assert "serre_e(1,2)" in rels and "serre_f(2,1)" in rels


def test_weights_sum_to_zero(rep):
    # the module is self-dual: weights come in opposite pairs
    total = [0, 0, 0]
    for w in rep.weights:
        for i in range(3):
            total[i] += w[i]
    assert total == [0, 0, 0]
    ws = sorted(rep.weights)
    assert sorted(tuple(-v for v in w) for w in rep.weights) == ws


def test_polarization_unique(gram):
    g, free_dim = gram
    # the invariant form is unique up to scalar
    assert free_dim == 1


def test_polarization_identities(rep, gram):
    assert fr.check_polarization(rep, gram[0])


def test_polarization_values(gram):
    g = gram[0]
    assert g[0][0] == QR_ONE
    assert g[7][7] == q_power(1) * q_int(3) / q_int(2)
    # off-diagonal pairings against the lowest-weight line vanish
    assert all(g[u][7] == QR_ZERO for u in range(7))


def test_gram_entries_integral(gram):
    assert fr.gram_entries_integral(gram[0])


def test_highest_vectors(rep):
    assert fr.verify_highest(rep)
    hw = fr.highest_vectors()
    assert set(hw) == set(fr.HW_ORDER)
    assert len(hw["0_2"]) == 7


def test_lowering_identities(rep):
    results = fr.verify_lowering_identities(rep)
    assert len(results) == 14
    bad = [k for k, v in results.items() if not v]
    assert not bad, bad


def test_spectral_action_shapes(rep):
    hw = fr.highest_vectors()
    # Delta(f_0) of the vacuum-component vector stays weight homogeneous
    v = fr.act_f(rep, 0, hw["0_1"])
    wts = {fr.tensor_weight(k) for k in v}
    assert len(wts) == 1
    # e after f lands back in the original weight space
    w = fr.act_e(rep, 0, fr.act_f(rep, 0, hw["L1_1"]))
    assert {fr.tensor_weight(k) for k in w} <= {fr.tensor_weight((0, 7))}


def test_spectral_substitution(rep):
    # spectral exponents substitute consistently to exact rationals
    hw = fr.highest_vectors()
    v = fr.act_f(rep, 0, hw["2L1"])
    qv, xv, yv = Fraction(2), Fraction(3), Fraction(5, 2)
    for coeff in v.values():
        coeff.subst(qv, (xv, yv))
