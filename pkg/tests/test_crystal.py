import json

import pytest
from hypothesis import given, settings, strategies as st

from d43demazure import perfect as pc
from d43demazure.cartan import AffineWeight
from d43demazure.crystal import (
    BudgetExceeded, CrystalGraph, TensorCrystal, axiom_check, build_graph, export_dot,
    graph_to_json, graphs_equal, induced_graph, is_connected, parse_dot, signature_positions,
    tensor_e, tensor_eps_phi, tensor_f, wt_from_eps_phi,
)
from d43demazure.perfect import PCElement as E, PerfectCrystal

B3 = PerfectCrystal(3)
BB3 = TensorCrystal(B3, B3)
BBAR = E(0, 1, 1, 1, 1, 0)


def string_length(op, t):
    n = 0
    while (t := op(t)) is not None:
        n += 1
    return n


def test_tensor_f_examples():
    assert tensor_f(2, (BBAR, BBAR), B3, B3) == (BBAR, E(0, 0, 3, 1, 1, 0))
    assert tensor_f(1, (BBAR, BBAR), B3, B3) is None
    # phi_0 of the left factor is 0, so f_0 goes right, where it leaves B
    left = E(3, 0, 0, 0, 0, 0)
    assert B3.phi(0, left) == 0
    assert pc.f0(BBAR, 3) is None
    assert tensor_f(0, (left, BBAR), B3, B3) is None


def test_tensor_e_examples():
    assert tensor_e(2, (BBAR, E(0, 0, 3, 1, 1, 0)), B3, B3) == (BBAR, BBAR)
    assert tensor_e(0, (BBAR, BBAR), B3, B3) is None
    for t in BB3.elements()[::37]:
        for i in range(3):
            u = tensor_f(i, t, B3, B3)
            if u is not None:
                assert tensor_e(i, u, B3, B3) == t


def test_tensor_eps_phi_examples():
    assert tensor_eps_phi(2, (BBAR, BBAR), B3, B3) == (1, 1)
    t = (E(3, 0, 0, 0, 0, 0), E(0, 3, 0, 0, 0, 0))
    want = (string_length(lambda u: BB3.e(0, u), t), string_length(lambda u: BB3.f(0, u), t))
    assert tensor_eps_phi(0, t, B3, B3) == want


def test_tensor_eps_phi_matches_iteration_exhaustively_level_one():
    B = PerfectCrystal(1)
    BB = TensorCrystal(B, B)
    for t in BB.elements():
        for i in range(3):
            e, p = tensor_eps_phi(i, t, B, B)
            assert e == string_length(lambda u: BB.e(i, u), t)
            assert p == string_length(lambda u: BB.f(i, u), t)
            assert p == e + BB.wt(t).classical[i]


def test_wt_from_eps_phi_examples():
    assert wt_from_eps_phi(B3, BBAR) == AffineWeight()
    assert wt_from_eps_phi(B3, E(3, 0, 0, 0, 0, 0)) == AffineWeight(-6, 3, 0, 0)


def _signature_f(crystal, factors, i):
    prof = [(crystal.eps(i, b), crystal.phi(i, b)) for b in factors]
    f_at, e_at, eps, phi = signature_positions(prof)
    return f_at, e_at, eps, phi


@settings(max_examples=300, deadline=None)
@given(st.lists(st.sampled_from(pc.enumerate_b1l(2)), min_size=3, max_size=3),
       st.sampled_from([0, 1, 2]))
def test_signature_rule_agrees_with_nested_tensor(factors, i):
    B = PerfectCrystal(2)
    nested = TensorCrystal(TensorCrystal(B, B), B)
    t = ((factors[0], factors[1]), factors[2])
    f_at, e_at, eps, phi = _signature_f(B, factors, i)
    assert (eps, phi) == (nested.eps(i, t), nested.phi(i, t))
    ft = nested.f(i, t)
    if f_at is None:
        assert phi == 0
    else:
        flat = [*t[0], t[1]]
        moved = B.f(i, flat[f_at])
        expect = None if moved is None else flat[:f_at] + [moved] + flat[f_at + 1:]
        assert (None if ft is None else [*ft[0], ft[1]]) == expect
    et = nested.e(i, t)
    if e_at is None:
        assert eps == 0 and et is None


def test_axiom_check_small_levels():
    for L in (1, 2, 3):
        B = PerfectCrystal(L)
        assert axiom_check(induced_graph(B.elements(), B), B) == []


def test_axiom_check_catches_injected_loop():
    B = PerfectCrystal(1)
    g = induced_graph([E(0, 0, 0, 0, 0, 0)], B)
    g.edges.append((0, 1, 0))
    assert axiom_check(g)
    assert axiom_check(g, B)


def test_axiom_check_catches_double_edges():
    B = PerfectCrystal(1)
    g = induced_graph(B.elements(), B)
    u, i, v = g.edges[0]
    g.edges.append((u, i, v))
    assert any("(vi)" in m for m in axiom_check(g))


def test_build_graph_examples():
    assert len(build_graph([BBAR], B3).vertices) == 112
    assert build_graph([], B3).vertices == []
    g = build_graph([(BBAR, BBAR)], BB3)
    assert len(g.vertices) == 112 ** 2


def test_build_graph_budget():
    with pytest.raises(BudgetExceeded):
        build_graph([BBAR], B3, budget=50)


def test_is_connected():
    B1 = PerfectCrystal(1)
    assert is_connected(induced_graph(B3.elements(), B3))
    assert is_connected(induced_graph(B1.elements(), B1))
    two = induced_graph([E(0, 0, 0, 0, 0, 0), E(0, 0, 0, 0, 0, 1)], B1)
    two.edges.clear()
    assert not is_connected(two)


def test_graphs_equal():
    g = induced_graph(B3.elements(), B3)
    h = induced_graph(list(reversed(B3.elements())), B3)
    assert graphs_equal(g, g) and graphs_equal(g, h)
    cut = induced_graph(B3.elements(), B3)
    cut.edges.pop()
    assert not graphs_equal(g, cut)
    # same shape, different decorations
    other = induced_graph(B3.elements(), B3)
    other.decorations[0] = ((9, 9, 9, 9), (0, 0, 0), (0, 0, 0))
    assert not graphs_equal(g, other)


def test_export_dot_empty():
    assert export_dot(CrystalGraph([], [])) == "digraph crystal {\n}\n"


def test_export_dot_level_one():
    B = PerfectCrystal(1)
    text = export_dot(induced_graph(B.elements(), B))
    assert text.count("[label=\"[") == 8
    labels = {line.rsplit('"', 2)[1] for line in text.splitlines() if "->" in line}
    assert labels == {"0", "1", "2"}


def test_export_dot_round_trip():
    g = induced_graph(B3.elements(), B3)
    text = export_dot(g, name="B1_3")
    name, parsed = parse_dot(text)
    assert name == "B1_3"
    assert export_dot(parsed, name=name) == text
    assert [tuple(v) for v in g.vertices] == parsed.vertices


def test_graph_json_schema():
    B = PerfectCrystal(1)
    doc = json.loads(json.dumps(graph_to_json(induced_graph(B.elements(), B), L=1)))
    assert set(doc) == {"L", "vertices", "edges"}
    assert all(len(v) == 6 for v in doc["vertices"])
    assert doc["vertices"] == sorted(doc["vertices"])
    for src, i, dst in doc["edges"]:
        assert pc.f(i, doc["vertices"][src], 1) == tuple(doc["vertices"][dst])
