import pytest

from d43demazure import demazure as dz
from d43demazure import perfect as pc
from d43demazure.cartan import BLOCK_INDICES
from d43demazure.perfect import PCElement as E

BA_SIZES = {
    1: (1, 2, 5, 8, 13, 49, 112),
    2: (1, 3, 12, 27, 63, 399, 1386),
}


def test_f_closure_examples():
    bbar = E(0, 1, 1, 1, 1, 0)
    assert dz.f_closure(2, {bbar}, 3) == {bbar, E(0, 0, 3, 1, 1, 0)}
    assert dz.f_closure(0, {bbar}, 3) == {bbar}
    assert dz.f_closure(1, set(), 3) == set()


@pytest.mark.parametrize("l", [1, 2])
def test_ba_sizes_and_monotonicity(l):
    sets = [dz.ba_j(a, l) for a in range(7)]
    assert tuple(len(s) for s in sets) == BA_SIZES[l]
    for lo, hi in zip(sets, sets[1:]):
        assert lo.elements < hi.elements
    assert sets[6].elements == set(pc.enumerate_b1l(3 * l))


def test_ba_rejects_out_of_range():
    with pytest.raises(ValueError):
        dz.ba_j(7, 1)
    with pytest.raises(ValueError):
        dz.predicate_ba(-1, 1)


def test_ba_is_j_independent():
    assert dz.ba_j(4, 1, j=1).elements == dz.ba_j(4, 1, j=3).elements


@pytest.mark.parametrize("l", [1, 2, 3])
def test_chain(l):
    rep = dz.chain_check(l)
    assert rep.passed, rep.violations
    assert dz.chain(l)[5] == E(3 * l, 0, 0, 0, 0, 0)


def test_predicate_examples():
    bbar = E(0, 1, 1, 1, 1, 0)
    assert not dz.predicate("P", bbar, 1)
    assert not dz.predicate("Q1", bbar, 1)
    for b in pc.enumerate_b1l(3):
        if b[0] == 0:
            assert not dz.predicate("Q5", b, 1)
            assert not dz.predicate("Q6", b, 1)
    with pytest.raises(ValueError):
        dz.predicate("Q7", bbar, 1)


def test_predicate_ba_endpoints():
    assert dz.predicate_ba(0, 1) == {pc.ground_element(1)}
    assert dz.predicate_ba(6, 1) == set(pc.enumerate_b1l(3))


@pytest.mark.parametrize("l", [1, 2, 3])
def test_amended_predicates_match_closure(l):
    rep = dz.predicate_check(l, amended=True)
    assert rep.passed, rep.violations[:5]


def test_literal_predicates_overshoot_at_a5():
    # documents the literal reading: only a = 5 disagrees, every extra element
    # comes from a D-set and has xb1 > 0
    rep = dz.predicate_check(1, amended=False)
    assert {v["a"] for v in rep.violations} == {5}
    assert all(v["side"] == "predicate only" for v in rep.violations)
    assert len(rep.violations) == 13
    for v in rep.violations:
        assert v["element"][5] > 0
        assert v["from"] and all(src.startswith("D") for src in v["from"])


@pytest.mark.parametrize("l", [1, 2])
def test_conditions_one_and_two(l):
    assert dz.verify_condition1(l).passed
    rep = dz.verify_condition2(l)
    assert rep.passed, rep.violations[:3]
    assert rep.tables["xb2_equals_l"] == {0: True, 2: True}


def test_condition1_negative_control():
    rep = dz.verify_condition1(1, (2, 1, 2))
    assert not rep.passed


def test_condition3():
    rep = dz.verify_condition3(1, 60)
    assert rep.passed
    assert rep.tables["printed_fits"] == {"j": False, "j-1": True}
    row4 = rep.tables["rows"][4]
    assert (row4["next"], row4["pairing"]) == (0, 6)


def test_root_coordinate_values():
    rep = dz.lemma_weyl_check(2)
    rows = {r["k"]: r["computed"] for r in rep.tables["rows"]}
    assert rows[2] == [0, 3, 1]
    assert rows[6] == [6, 9, 3]
    assert rows[12] == [18, 30, 12]


def test_root_coordinate_conventions():
    one_block = dz.lemma_weyl_check(1)
    assert one_block.passed
    assert one_block.tables["conventions_fitting_all"] == ["j-1"]
    full = dz.lemma_weyl_check(6)
    assert full.tables["best_convention"] == "j-1"
    assert full.tables["formulas_fitting"] == {"j": 0, "j-1": 7}
    assert full.tables["verdicts"]["m1[a=6]"]["j-1"] == "fails at k=[12, 18, 24, 30, 36]"


def test_printed_pairing_shape():
    assert [dz.printed_pairing(1, a) for a in range(1, 7)] == [9, 5, 6, 12, 6, 7]
    with pytest.raises(KeyError):
        dz.printed_pairing(1, 0)


def test_verify_theorem_small():
    rep = dz.verify_theorem(1, 7)
    assert rep.passed, rep.violations
    assert [r["demazure"] for r in rep.tables["rows"]] == [1, 2, 5, 8, 13, 49, 112, 224]
    assert all(r["graphs_equal"] for r in rep.tables["rows"])


def test_verify_theorem_level_two_first_block():
    rep = dz.verify_theorem(2, 6, graphs=False)
    assert rep.passed
    assert [r["pk"] for r in rep.tables["rows"]] == [1, *BA_SIZES[2][1:]]


def test_block_indices():
    assert BLOCK_INDICES == (2, 1, 2, 1, 0, 1)
