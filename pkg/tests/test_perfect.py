import itertools

import pytest
from hypothesis import given, settings, strategies as st

from d43demazure import perfect as pc
from d43demazure.cartan import CLASSICAL_ROOTS, AffineWeight, level
from d43demazure.perfect import PCElement as E

BBAR = E(0, 1, 1, 1, 1, 0)


def brute_enumerate(L):
    """Direct filter of the defining inequalities over a box."""
    out = []
    for b in itertools.product(range(2 * L + 1), repeat=6):
        x1, x2, x3, xb3, xb2, xb1 = b
        if (x3 - xb3) % 2 == 0 and 2 * (x1 + x2 + xb2 + xb1) + x3 + xb3 <= 2 * L:
            out.append(b)
    return out


def string_length(op, i, b, L):
    n = 0
    while (b := op(i, b, L)) is not None:
        n += 1
    return n


@pytest.fixture(scope="module", params=[1, 2, 3])
def level_L(request):
    return request.param


def test_statistics_examples():
    assert pc.s_of(BBAR) == 3
    assert pc.t_of(BBAR) == 2
    assert pc.s_of(E(0, 0, 0, 0, 0, 0)) == 0
    assert pc.z_of(BBAR) == (0, 0, 0, 0)
    assert pc.z_of(E(0, 0, 0, 0, 0, 3)) == (3, 0, 0, 0)
    assert pc.script_a(E(3, 0, 0, 0, 0, 0)) == (0, -3, -3, -3, -3, -6)


def test_case_examples():
    assert pc.f_case(E(0, 0, 0, 0, 0, 3)) == 6
    assert pc.f_case(BBAR) == 1
    assert pc.f_case(E(3, 0, 0, 0, 0, 0)) == 1


def test_operator_examples():
    assert pc.f2(BBAR, 3) == E(0, 0, 3, 1, 1, 0)
    assert pc.f1(E(0, 0, 3, 1, 1, 0), 3) == E(0, 0, 2, 2, 1, 0)
    assert pc.f0(E(0, 0, 0, 0, 0, 3), 3) == E(0, 0, 0, 0, 0, 2)
    # boundary: f_1 would make x1 negative, f_0 would push s past L
    assert pc.f1(BBAR, 3) is None
    assert pc.f0(BBAR, 3) is None


def test_eps_phi_examples():
    assert (pc.eps(2, BBAR, 3), pc.phi(2, BBAR, 3)) == (1, 1)
    assert pc.phi(0, E(0, 0, 0, 0, 0, 3), 3) == 6
    assert pc.eps(0, E(0, 0, 0, 0, 0, 3), 3) == 0


def test_f_max_examples():
    assert pc.f_max(1, E(0, 0, 3, 1, 1, 0), 3) == E(0, 0, 0, 4, 1, 0)
    assert pc.f_max(0, E(0, 0, 0, 0, 0, 3), 3) == E(3, 0, 0, 0, 0, 0)
    b = E(0, 3, 0, 0, 0, 0)
    assert pc.phi(1, b, 3) == 0 and pc.f_max(1, b, 3) == b


def test_weight_examples():
    for L in (1, 2, 3, 5):
        assert pc.wt(E(L, 0, 0, 0, 0, 0), L) == AffineWeight(-2 * L, L, 0, 0)
    for l in (1, 2):
        g = pc.ground_element(l)
        assert pc.wt(g, 3 * l) == AffineWeight()
        assert pc.eps_vector(g, 3 * l) == pc.phi_vector(g, 3 * l) == (0, 0, l)


@pytest.mark.parametrize("L,count", [(1, 8), (2, 35), (3, 112)])
def test_enumeration_matches_brute_force(L, count):
    got = pc.enumerate_b1l(L)
    assert got == sorted(got)
    assert [tuple(b) for b in got] == brute_enumerate(L)
    assert len(got) == count
    assert E(0, 0, 0, 0, 0, 0) in got


def test_enumerate_rejects_zero_level():
    with pytest.raises(ValueError):
        pc.enumerate_b1l(0)


def test_case_tables_partition(level_L):
    for b in pc.enumerate_b1l(level_L):
        assert sum(pc.f_conditions(b)) == 1, b
        assert sum(pc.e_conditions(b)) == 1, b


def test_partition_violation_is_loud(monkeypatch):
    monkeypatch.setattr(pc, "f_conditions", lambda b: (True, True, False, False, False, False))
    with pytest.raises(pc.PartitionError, match=r"\[1, 2\]"):
        pc.f_case(BBAR)
    monkeypatch.setattr(pc, "e_conditions", lambda b: (False,) * 6)
    with pytest.raises(pc.PartitionError):
        pc.e(0, BBAR, 3)


def test_f_conditions_partition_integer_box():
    for b in itertools.product(range(-2, 3), repeat=6):
        if (b[2] - b[3]) % 2 == 0:
            assert sum(pc.f_conditions(b)) == 1 and sum(pc.e_conditions(b)) == 1


def test_formula_matches_iteration(level_L):
    L = level_L
    for b in pc.enumerate_b1l(L):
        for i in range(3):
            assert pc.eps(i, b, L) == string_length(pc.e, i, b, L), (i, b)
            assert pc.phi(i, b, L) == string_length(pc.f, i, b, L), (i, b)


def test_operators_invert_and_respect_axioms(level_L):
    L = level_L
    for b in pc.enumerate_b1l(L):
        for i in range(3):
            c = pc.f(i, b, L)
            if c is not None:
                assert pc.is_valid(c, L)
                assert pc.e(i, c, L) == b
                assert pc.wt(c, L) == pc.wt(b, L) - CLASSICAL_ROOTS[i]
                assert pc.eps(i, c, L) == pc.eps(i, b, L) + 1
                assert pc.phi(i, c, L) == pc.phi(i, b, L) - 1
            d = pc.e(i, b, L)
            if d is not None:
                assert pc.is_valid(d, L)
                assert pc.f(i, d, L) == b


def test_f0_level_changes_per_case():
    L = 3
    row_delta = [r[0] + r[1] + (r[2] + r[3]) // 2 + r[4] + r[5] for r in pc.F0_ROWS]
    assert row_delta[0] == 1 and row_delta[1] == 0
    for b in pc.enumerate_b1l(L):
        c = pc.f0(b, L)
        if c is not None:
            assert pc.s_of(c) - pc.s_of(b) == row_delta[pc.f_case(b) - 1]


def test_level_zero_weights():
    assert all(level(pc.wt(b, 3)) == 0 for b in pc.enumerate_b1l(3))


def test_minimal_elements_examples():
    assert pc.minimal_elements(3) == {E(0, 0, 0, 0, 0, 0), E(0, 1, 1, 1, 1, 0), E(1, 0, 0, 0, 0, 1)}
    assert pc.minimal_elements(1) == {E(0, 0, 0, 0, 0, 0)}


def test_dominant_weights_level_three():
    assert sorted(pc.dominant_weights(3)) == [(0, 0, 1), (1, 1, 0), (3, 0, 0)]
    assert len(pc.minimal_elements(3)) == len(pc.dominant_weights(3))


def test_perfect_axioms_level_two():
    rep = pc.perfect_axioms(2)
    assert rep.passed, rep.violations
    assert rep.tables["lambda0"] == [-4, 2, 0]


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6).flatmap(
    lambda L: st.tuples(st.just(L), st.sampled_from(pc.enumerate_b1l(L)), st.sampled_from([0, 1, 2]))))
def test_random_level_inverse_pairs(args):
    L, b, i = args
    c = pc.f(i, b, L)
    assert c is None or pc.e(i, c, L) == b
    assert pc.phi(i, b, L) - pc.eps(i, b, L) == pc.wt(b, L).classical[i]
