"""Rank-two branching: the tableau crystal, the distinguished elements,
the decomposition, the closed-form tables and the operator lemmas."""

import pytest

from d43crystal import a2branch as a2
from d43crystal import affine as af


@pytest.mark.parametrize("j0,j1", [(j0, j1) for j0 in range(9) for j1 in range(9)])
def test_a2_size_formula(j0, j1):
    assert len(a2.a2_elements(j0, j1)) == a2.a2_dim(j0, j1)


@pytest.mark.parametrize("j0,j1", [(j0, j1) for j0 in range(6) for j1 in range(6)])
def test_a2_inverse_property(j0, j1):
    for t in a2.a2_elements(j0, j1):
        for f, e in ((a2.a2_f0, a2.a2_e0), (a2.a2_f1, a2.a2_e1)):
            nt = f(t)
            if nt is not None:
                assert e(nt) == t
            nt = e(t)
            if nt is not None:
                assert f(nt) == t


@pytest.mark.parametrize("j0,j1", [(2, 3), (3, 2), (4, 4), (1, 5)])
def test_a2_eps_phi_are_string_lengths(j0, j1):
    for t in a2.a2_elements(j0, j1):
        e0, e1, p0, p1 = a2.a2_eps_phi(t)
        for want, op in ((e0, a2.a2_e0), (e1, a2.a2_e1),
                         (p0, a2.a2_f0), (p1, a2.a2_f1)):
            k, cur = 0, t
            while True:
                cur = op(cur)
                if cur is None:
                    break
                k += 1
            assert k == want


def test_a2_examples():
    t = a2.A2Tab(1, 1, 0, 0, 1)
    assert a2.a2_f1(t) == a2.A2Tab(1, 1, 1, 1, 0)
    top = a2.A2Tab(2, 3, 0, 0, 0)
    assert a2.a2_e0(top) is None and a2.a2_e1(top) is None
    assert a2.a2_eps_phi(top) == (0, 0, 2, 3)
    low = a2.a2_lowest(2, 3)
    assert a2.a2_f0(low) is None and a2.a2_f1(low) is None
    assert a2.a2_eps_phi(low) == (3, 2, 0, 0)
    assert a2.a2_eps_phi(a2.A2Tab(2, 2, 1, 2, 0))[1] == 2


@pytest.mark.parametrize("j0,j1", [(1, 1), (2, 2), (2, 3), (3, 1)])
def test_a2_raise_from_lowest(j0, j1):
    low = a2.a2_lowest(j0, j1)
    for t in a2.a2_elements(j0, j1):
        pp, qq, rr = a2.a2_raise(t)
        cur = low
        for _ in range(pp):
            cur = a2.a2_e0(cur)
        for _ in range(qq):
            cur = a2.a2_e1(cur)
        for _ in range(rr):
            cur = a2.a2_e0(cur)
        assert cur == t
    assert a2.a2_raise(a2.a2_lowest(j0, j1)) == (0, 0, 0)
    assert a2.a2_raise(a2.A2Tab(j0, j1, 0, 0, 0)) == (j1, j0 + j1, j0)


def test_condition_C_enforced():
    with pytest.raises(ValueError):
        a2.A2Tab(1, 1, 2, 2, 0)
    with pytest.raises(ValueError):
        a2.A2Tab(1, 1, 0, 0, 2)


def test_bbar_values():
    assert a2.bbar(3, 0, 3, 3) == (0, 0, 0, 0, 3, 0)
    assert a2.bbar(1, 0, 1, 1) == (0, 0, 0, 0, 1, 0)
    # i=1 branch of the two-case formula with y0 = y1 = 0
    assert a2.bbar(2, 1, 1, 1) == (0, 0, 1, 1, 1, 0)
    with pytest.raises(ValueError):
        a2.bbar(2, 1, 2, 1)


@pytest.mark.parametrize("l", range(1, 5))
def test_bbar_is_zero_one_highest(l):
    ctx = af.LevelCtx.finite(l)
    for (i, j0, j1) in a2.component_indices(l):
        b = a2.bbar(l, i, j0, j1)
        assert ctx.admits(b)
        assert af.e0(b, ctx) is None
        assert af.apply_op("e", 1, b, ctx) is None
        assert af.eps0(b, ctx) == 0 and af.eps(1, b, ctx) == 0
        assert af.phi0(b, ctx) == j0 and af.phi(1, b, ctx) == j1


@pytest.mark.parametrize("l", range(1, 9))
def test_index_set_sizes_sum_to_cardinality(l):
    total = sum(a2.a2_dim(j0, j1) for (_, j0, j1) in a2.component_indices(l))
    assert total == af.bl_cardinality(l)


def test_decompose_level_1_and_2():
    rows = a2.decompose(1)
    assert [(r["i"], r["j0"], r["j1"], r["size"]) for r in rows] == \
        [(0, 1, 1, 8)]
    rows = a2.decompose(2)
    assert [(r["i"], r["j0"], r["j1"], r["size"]) for r in rows] == \
        [(0, 2, 2, 27), (1, 1, 1, 8)]


def test_decompose_level_3_total():
    rows = a2.decompose(3)
    assert sum(r["size"] for r in rows) == 112


def test_appendix_formula_dispatch():
    assert a2.appendix_formula("A", 3, 0, 3, 3, p=0, q=0) == (0, 0, 0, 0, 3, 0)
    # table C at q = r = 0 equals f0^{j0} applied to the base point
    want = a2.lower_pqr(a2.bbar(3, 0, 3, 3), 3, 0, 0, af.NONNEG)
    assert a2.appendix_formula("C", 3, 0, 3, 3, q=0, r=0) == want
    # table D boundary r = j0 + q - 2p = 0 against iterated lowering
    got = a2.appendix_formula("D", 2, 1, 1, 1, p=1, q=1)
    want = a2.lower_pqr(a2.bbar(2, 1, 1, 1), 1, 1, 0, af.NONNEG)
    assert got == want
    with pytest.raises(ValueError):
        a2.appendix_formula("A", 3, 0, 3, 3, p=9, q=0)
    with pytest.raises(ValueError):
        a2.appendix_formula("E", 3, 0, 3, 3, p=0, q=0)


def test_mutated_formula_is_detected():
    # a sign flip in one coordinate must trip the oracle comparison
    orig = a2.table_a

    def broken(l, i, j0, j1, p, q):
        forms = orig(l, i, j0, j1, p, q)
        return [tuple(v + (1 if k == 2 else 0) for k, v in enumerate(x))
                for x in forms]

    a2.table_a = broken
    try:
        with pytest.raises(AssertionError):
            a2.verify_appendix(2, tables="A")
    finally:
        a2.table_a = orig


@pytest.mark.parametrize("table", ["A", "B", "C", "D"])
def test_appendix_small(table):
    assert a2.verify_appendix(3, tables=table) > 0


def test_lemmas_small():
    counts = a2.verify_lemmas(3)
    assert all(v > 0 for v in counts.values())


def test_onion_example():
    lhs = a2.apply_word(a2.bbar(3, 0, 3, 3),
                        [("f", 0, 1), ("f", 1, 1), ("f", 0, 0)], af.NONNEG)
    rhs = a2.lower_pqr(a2.bbar(2, 0, 2, 2), 0, 0, 0, af.NONNEG)
    assert lhs == rhs


def test_comm_example():
    base = a2.bbar(4, 0, 4, 4)
    lhs = a2.apply_word(base, [("f", 0, 1), ("f", 1, 0), ("f", 0, 1)], af.NONNEG)
    rhs = a2.lower_pqr(base, 2, 0, 0, af.NONNEG)
    assert lhs == rhs
