"""Generic crystal machinery: tensor products, crystal graphs, checks, export.

A *crystal* here is any object exposing ``index_set``, ``f(i, b)``,
``e(i, b)``, ``eps(i, b)``, ``phi(i, b)``, ``wt(b)`` and ``key(b)``
(a sort key used for canonical ordering). Operators return ``None`` for
the null element.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Sequence

from .cartan import CLASSICAL_ROOTS, INDICES, AffineWeight

DEFAULT_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    pass


# -- tensor product rule ----------------------------------------------------

def tensor_f(i: int, t, left, right):
    b1, b2 = t
    if left.phi(i, b1) > right.eps(i, b2):
        c = left.f(i, b1)
        return None if c is None else (c, b2)
    c = right.f(i, b2)
    return None if c is None else (b1, c)


def tensor_e(i: int, t, left, right):
    b1, b2 = t
    if left.phi(i, b1) >= right.eps(i, b2):
        c = left.e(i, b1)
        return None if c is None else (c, b2)
    c = right.e(i, b2)
    return None if c is None else (b1, c)


def tensor_eps_phi(i: int, t, left, right) -> tuple[int, int]:
    b1, b2 = t
    e1, p1 = left.eps(i, b1), left.phi(i, b1)
    e2, p2 = right.eps(i, b2), right.phi(i, b2)
    # <h_i, wt(b)> = phi_i(b) - eps_i(b)
    return max(e1, e2 - (p1 - e1)), max(p2, p1 + (p2 - e2))


class TensorCrystal:
    """left (x) right; elements are pairs (b1, b2)."""

    def __init__(self, left, right):
        self.left = left
        self.right = right
        self.index_set = tuple(left.index_set)

    def __repr__(self):
        return f"TensorCrystal({self.left!r}, {self.right!r})"

    def elements(self):
        return [(b1, b2) for b1 in self.left.elements() for b2 in self.right.elements()]

    def f(self, i, t):
        return tensor_f(i, t, self.left, self.right)

    def e(self, i, t):
        return tensor_e(i, t, self.left, self.right)

    def eps(self, i, t):
        return tensor_eps_phi(i, t, self.left, self.right)[0]

    def phi(self, i, t):
        return tensor_eps_phi(i, t, self.left, self.right)[1]

    def wt(self, t):
        return self.left.wt(t[0]) + self.right.wt(t[1])

    def key(self, t):
        return (self.left.key(t[0]), self.right.key(t[1]))


def signature_positions(profiles: Sequence[tuple[int, int]]) -> tuple[int | None, int | None, int, int]:
    """Signature rule on a multi-factor tensor b_0 (x) b_1 (x) ... (leftmost first).

    ``profiles`` lists (eps_i, phi_i) per factor. Returns the factor f_i
    acts on, the factor e_i acts on (None when no unmatched sign is left)
    and (eps_i, phi_i) of the whole product.
    """
    # stack of unmatched '+' (factor index, count); unmatched '-' tracked left of them
    plus: list[list[int]] = []
    minus_last = None
    minus_count = 0
    for n, (e, p) in enumerate(profiles):
        while e and plus:
            take = min(e, plus[-1][1])
            plus[-1][1] -= take
            e -= take
            if not plus[-1][1]:
                plus.pop()
        if e:
            minus_last = n
            minus_count += e
        if p:
            plus.append([n, p])
    f_at = plus[0][0] if plus else None
    return f_at, minus_last, minus_count, sum(c for _, c in plus)


# -- weights ------------------------------------------------------------------

def wt_from_eps_phi(crystal, b) -> AffineWeight:
    return AffineWeight(*(crystal.phi(i, b) - crystal.eps(i, b) for i in INDICES), 0)


# -- graphs ---------------------------------------------------------------------

@dataclass
class CrystalGraph:
    """Finite crystal graph with vertices in canonical order.

    ``edges`` holds (source index, label, target index) triples meaning
    f_label(source) = target. ``decorations`` maps vertex index to
    (wt, eps vector, phi vector); it may be empty for parsed graphs.
    """

    vertices: list
    edges: list[tuple[int, int, int]]
    decorations: list = field(default_factory=list)
    keys: list = field(default_factory=list)

    def __len__(self):
        return len(self.vertices)

    def index(self) -> dict:
        return {v: n for n, v in enumerate(self.vertices)}


def _decorate(crystal, v):
    return (crystal.wt(v).as_tuple(),
            tuple(crystal.eps(i, v) for i in crystal.index_set),
            tuple(crystal.phi(i, v) for i in crystal.index_set))


def induced_graph(vertices: Iterable, crystal) -> CrystalGraph:
    """Crystal graph on a given vertex set; f-edges leaving the set are dropped."""
    verts = sorted(set(vertices), key=crystal.key)
    idx = {v: n for n, v in enumerate(verts)}
    edges = []
    for n, v in enumerate(verts):
        for i in crystal.index_set:
            w = crystal.f(i, v)
            if w is not None and w in idx:
                edges.append((n, i, idx[w]))
    return CrystalGraph(verts, edges, [_decorate(crystal, v) for v in verts],
                        [crystal.key(v) for v in verts])


def closure(seeds: Iterable, step, budget: int = DEFAULT_BUDGET) -> set:
    """Smallest superset of seeds closed under ``step(v) -> iterable of neighbours``."""
    seen = set(seeds)
    if len(seen) > budget:
        raise BudgetExceeded(f"more than {budget} vertices")
    frontier = deque(seen)
    while frontier:
        v = frontier.popleft()
        for w in step(v):
            if w is not None and w not in seen:
                seen.add(w)
                if len(seen) > budget:
                    raise BudgetExceeded(f"more than {budget} vertices")
                frontier.append(w)
    return seen


def build_graph(seeds: Iterable, crystal, budget: int = DEFAULT_BUDGET) -> CrystalGraph:
    """BFS closure of seeds under every f_i and e_i."""
    def step(v):
        for i in crystal.index_set:
            yield crystal.f(i, v)
            yield crystal.e(i, v)
    return induced_graph(closure(seeds, step, budget), crystal)


def is_connected(graph: CrystalGraph) -> bool:
    n = len(graph.vertices)
    if n == 0:
        return True
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, _, v in graph.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def axiom_check(graph: CrystalGraph, crystal=None) -> list[str]:
    """Violations of the crystal axioms (i)-(vi) on a decorated graph.

    Edges are checked against the stored decorations. If ``crystal`` is
    given, every vertex is additionally checked against its operators:
    an f_i-edge exists iff f_i lands inside the graph, and e_i undoes f_i.
    """
    out = []
    if len(graph.decorations) != len(graph.vertices):
        return ["graph carries no decorations"]
    labels = sorted({i for _, i, _ in graph.edges} | set(crystal.index_set if crystal else ()))
    for n, (w, ev, pv) in enumerate(graph.decorations):
        v = graph.vertices[n]
        for i, (e, p) in enumerate(zip(ev, pv)):
            if e < 0 or p < 0:
                out.append(f"{v}: negative eps/phi for i={i}")
            if p != e + w[i]:
                out.append(f"(i) {v}: phi_{i}={p} != eps_{i}+<h_{i},wt>={e}+{w[i]}")
    out_deg: dict[tuple[int, int], int] = {}
    in_deg: dict[tuple[int, int], int] = {}
    for u, i, v in graph.edges:
        out_deg[u, i] = out_deg.get((u, i), 0) + 1
        in_deg[v, i] = in_deg.get((v, i), 0) + 1
        wu, eu, pu = graph.decorations[u]
        wv, ev, pv = graph.decorations[v]
        a = CLASSICAL_ROOTS[i].as_tuple()
        if tuple(x - y for x, y in zip(wu, a)) != wv:
            out.append(f"(ii/iii) wt of f_{i}({graph.vertices[u]}) is not wt - alpha_{i}")
        if ev[i] != eu[i] + 1 or pv[i] != pu[i] - 1:
            out.append(f"(iv/v) eps/phi_{i} do not shift by one along {graph.vertices[u]} -> {graph.vertices[v]}")
    for (u, i), c in out_deg.items():
        if c > 1:
            out.append(f"(vi) {graph.vertices[u]} has {c} outgoing {i}-edges")
    for (v, i), c in in_deg.items():
        if c > 1:
            out.append(f"(vi) {graph.vertices[v]} has {c} incoming {i}-edges")
    if crystal is not None:
        idx = graph.index()
        edge_set = set(graph.edges)
        for n, v in enumerate(graph.vertices):
            for i in labels:
                w = crystal.f(i, v)
                if w is not None:
                    if crystal.e(i, w) != v:
                        out.append(f"(vi) e_{i}(f_{i}({v})) != {v}")
                    if w in idx and (n, i, idx[w]) not in edge_set:
                        out.append(f"missing edge {v} -{i}-> {w}")
                u = crystal.e(i, v)
                if u is not None and crystal.f(i, u) != v:
                    out.append(f"(vi) f_{i}(e_{i}({v})) != {v}")
                if u is not None and u in idx and (idx[u], i, n) not in edge_set:
                    out.append(f"missing edge {u} -{i}-> {v}")
        for u, i, m in graph.edges:
            if crystal.f(i, graph.vertices[u]) != graph.vertices[m]:
                out.append(f"edge {graph.vertices[u]} -{i}-> {graph.vertices[m]} disagrees with f_{i}")
    return out


def _canonical(graph: CrystalGraph):
    keys = graph.keys or [encode(v) for v in graph.vertices]
    decs = graph.decorations or [None] * len(graph.vertices)
    order = sorted(range(len(graph.vertices)),
                   key=lambda n: (decs[n] or (), keys[n]))
    pos = {n: r for r, n in enumerate(order)}
    verts = [(decs[n], graph.vertices[n]) for n in order]
    edges = sorted((pos[u], i, pos[v]) for u, i, v in graph.edges)
    return verts, edges


def graphs_equal(g1: CrystalGraph, g2: CrystalGraph) -> bool:
    """Equality of decorated graphs after canonical sorting.

    Vertices are sorted by (wt, eps, phi, element key); graphs over the
    same element universe are isomorphic here exactly when they are equal.
    """
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return False
    return _canonical(g1) == _canonical(g2)


# -- export -------------------------------------------------------------------

def encode(v) -> Any:
    """JSON-ready encoding: tuples become lists, objects may supply ``encode()``."""
    if hasattr(v, "encode") and not isinstance(v, (str, bytes)):
        return v.encode()
    if isinstance(v, tuple):
        return [encode(x) for x in v]
    return v


def _label(v) -> str:
    return json.dumps(encode(v), separators=(",", ":"))


def export_dot(graph: CrystalGraph, name: str = "crystal") -> str:
    lines = [f"digraph {name} {{"]
    for n, v in enumerate(graph.vertices):
        lab = _label(v).replace('"', '\\"')
        lines.append(f'  n{n} [label="{lab}"];')
    for u, i, v in sorted(graph.edges):
        lines.append(f'  n{u} -> n{v} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


_NODE_RE = re.compile(r'^\s*n(\d+) \[label="(.*)"\];$')
_EDGE_RE = re.compile(r'^\s*n(\d+) -> n(\d+) \[label="(\d+)"\];$')


def _tupled(x):
    return tuple(_tupled(y) for y in x) if isinstance(x, list) else x


def parse_dot(text: str) -> tuple[str, CrystalGraph]:
    """Inverse of export_dot (undecorated); vertices become nested tuples."""
    lines = text.splitlines()
    m = re.match(r"^digraph (\w+) \{$", lines[0])
    if not m or lines[-1] != "}":
        raise ValueError("not a DOT digraph produced by export_dot")
    verts: dict[int, Hashable] = {}
    edges = []
    for line in lines[1:-1]:
        if mm := _NODE_RE.match(line):
            verts[int(mm[1])] = _tupled(json.loads(mm[2].replace('\\"', '"')))
        elif mm := _EDGE_RE.match(line):
            edges.append((int(mm[1]), int(mm[3]), int(mm[2])))
        else:
            raise ValueError(f"unrecognised DOT line: {line!r}")
    return m[1], CrystalGraph([verts[n] for n in range(len(verts))], edges)


def graph_to_json(graph: CrystalGraph, **envelope) -> dict:
    doc = dict(envelope)
    doc["vertices"] = [encode(v) for v in graph.vertices]
    doc["edges"] = [[u, i, v] for u, i, v in sorted(graph.edges)]
    return doc
