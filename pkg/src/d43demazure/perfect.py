"""The perfect crystal B^{1,L} for D_4^(3).

Elements are 6-tuples (x1, x2, x3, xb3, xb2, xb1) of nonnegative integers
with x3 = xb3 (mod 2) and s(b) <= L. The level L is a property of the
crystal, not of the element, so the operators take it as an argument.
Operators return None for the null element.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, NamedTuple

from .cartan import INDICES, LEVEL_COEFFS, AffineWeight, check_index

if TYPE_CHECKING:
    from .report import Report


class PCElement(NamedTuple):
    x1: int
    x2: int
    x3: int
    xb3: int
    xb2: int
    xb1: int

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


class ZVector(NamedTuple):
    z1: int
    z2: int
    z3: int
    z4: int


class PartitionError(RuntimeError):
    """A case table is not a partition at some element."""


def pos(a: int) -> int:
    return a if a > 0 else 0


def is_valid(b, L: int) -> bool:
    return (len(b) == 6 and min(b) >= 0 and (b[2] - b[3]) % 2 == 0
            and s_of(b) <= L)


def s_of(b) -> int:
    x1, x2, x3, xb3, xb2, xb1 = b
    return x1 + x2 + (x3 + xb3) // 2 + xb2 + xb1


def t_of(b) -> int:
    return b[1] + (b[2] + b[3]) // 2


def z_of(b) -> ZVector:
    x1, x2, x3, xb3, xb2, xb1 = b
    return ZVector(xb1 - x1, xb2 - xb3, x3 - x2, (xb3 - x3) // 2)


def script_a(b) -> tuple[int, int, int, int, int, int]:
    z1, z2, z3, z4 = z_of(b)
    return (0, z1, z1 + z2, z1 + z2 + 3 * z4, z1 + z2 + z3 + 3 * z4,
            2 * z1 + z2 + z3 + 3 * z4)


def f_conditions(b) -> tuple[bool, ...]:
    """Truth values of (F1)..(F6)."""
    z1, z2, z3, z4 = z_of(b)
    return (
        z1 + z2 + z3 + 3 * z4 <= 0 and z1 + z2 + 3 * z4 <= 0 and z1 + z2 <= 0 and z1 <= 0,
        z1 + z2 + z3 + 3 * z4 <= 0 and z2 + 3 * z4 <= 0 and z2 <= 0 and z1 > 0,
        z1 + z3 + 3 * z4 <= 0 and z3 + 3 * z4 <= 0 and z4 <= 0 and z2 > 0 and z1 + z2 > 0,
        z1 + z2 + 3 * z4 > 0 and z2 + 3 * z4 > 0 and z4 > 0 and z3 <= 0 and z1 + z3 <= 0,
        z1 + z2 + z3 + 3 * z4 > 0 and z3 + 3 * z4 > 0 and z3 > 0 and z1 <= 0,
        z1 + z2 + z3 + 3 * z4 > 0 and z1 + z3 + 3 * z4 > 0 and z1 + z3 > 0 and z1 > 0,
    )


def e_conditions(b) -> tuple[bool, ...]:
    """Truth values of (E1)..(E6): (F_i) with > -> >= and <= -> <."""
    z1, z2, z3, z4 = z_of(b)
    return (
        z1 + z2 + z3 + 3 * z4 < 0 and z1 + z2 + 3 * z4 < 0 and z1 + z2 < 0 and z1 < 0,
        z1 + z2 + z3 + 3 * z4 < 0 and z2 + 3 * z4 < 0 and z2 < 0 and z1 >= 0,
        z1 + z3 + 3 * z4 < 0 and z3 + 3 * z4 < 0 and z4 < 0 and z2 >= 0 and z1 + z2 >= 0,
        z1 + z2 + 3 * z4 >= 0 and z2 + 3 * z4 >= 0 and z4 >= 0 and z3 < 0 and z1 + z3 < 0,
        z1 + z2 + z3 + 3 * z4 >= 0 and z3 + 3 * z4 >= 0 and z3 >= 0 and z1 < 0,
        z1 + z2 + z3 + 3 * z4 >= 0 and z1 + z3 + 3 * z4 >= 0 and z1 + z3 >= 0 and z1 >= 0,
    )


def _unique_case(conds: tuple[bool, ...], b, kind: str) -> int:
    hits = [n + 1 for n, c in enumerate(conds) if c]
    if len(hits) != 1:
        raise PartitionError(f"{kind}-conditions at {tuple(b)} hold for cases {hits}")
    return hits[0]


def f_case(b) -> int:
    """Index n of the unique condition (F_n) satisfied by b."""
    return _unique_case(f_conditions(b), b, "F")


def e_case(b) -> int:
    return _unique_case(e_conditions(b), b, "E")


# coordinate changes per table row, in (x1, x2, x3, xb3, xb2, xb1) order
F0_ROWS = (
    (1, 0, 0, 0, 0, 0),
    (0, 0, 1, 1, 0, -1),
    (0, 0, 2, 0, -1, 0),
    (0, 1, 0, -2, 0, 0),
    (1, 0, -1, -1, 0, 0),
    (0, 0, 0, 0, 0, -1),
)
E0_ROWS = tuple(tuple(-d for d in row) for row in F0_ROWS)

F1_ROWS = ((-1, 1, 0, 0, 0, 0), (0, 0, -1, 1, 0, 0), (0, 0, 0, 0, -1, 1))
E1_ROWS = ((0, 0, 0, 0, 1, -1), (0, 0, 1, -1, 0, 0), (1, -1, 0, 0, 0, 0))
F2_ROWS = ((0, -1, 2, 0, 0, 0), (0, 0, 0, -2, 1, 0))
E2_ROWS = ((0, 0, 0, 2, -1, 0), (0, 1, -2, 0, 0, 0))


def _shift(b, delta, L: int) -> PCElement | None:
    r = PCElement(*(x + d for x, d in zip(b, delta)))
    if min(r) < 0 or s_of(r) > L:
        return None
    return r


def f_row(i: int, b) -> tuple[int, ...]:
    """The coordinate change that f_i would apply at b (before the boundary test)."""
    if i == 0:
        return F0_ROWS[f_case(b) - 1]
    _, z2, z3, z4 = z_of(b)
    if i == 1:
        if pos(z2) <= -z3:
            return F1_ROWS[0]
        if z2 <= 0 < z3:
            return F1_ROWS[1]
        return F1_ROWS[2]
    check_index(i)
    return F2_ROWS[0] if z4 <= 0 else F2_ROWS[1]


def e_row(i: int, b) -> tuple[int, ...]:
    if i == 0:
        return E0_ROWS[e_case(b) - 1]
    _, z2, z3, z4 = z_of(b)
    if i == 1:
        if z2 >= pos(-z3):
            return E1_ROWS[0]
        if z2 < 0 <= z3:
            return E1_ROWS[1]
        return E1_ROWS[2]
    check_index(i)
    return E2_ROWS[0] if z4 >= 0 else E2_ROWS[1]


def f(i: int, b, L: int) -> PCElement | None:
    return _shift(b, f_row(i, b), L)


def e(i: int, b, L: int) -> PCElement | None:
    return _shift(b, e_row(i, b), L)


def f0(b, L):
    return f(0, b, L)


def f1(b, L):
    return f(1, b, L)


def f2(b, L):
    return f(2, b, L)


def e0(b, L):
    return e(0, b, L)


def e1(b, L):
    return e(1, b, L)


def e2(b, L):
    return e(2, b, L)


def eps(i: int, b, L: int) -> int:
    x1, x2, x3, xb3, xb2, xb1 = b
    if i == 0:
        A = script_a(b)
        return L - s_of(b) + max(A) - A[-1]
    if i == 1:
        return xb1 + pos(xb3 - xb2 + pos(x2 - x3))
    check_index(i)
    return xb2 + pos(x3 - xb3) // 2


def phi(i: int, b, L: int) -> int:
    x1, x2, x3, xb3, xb2, xb1 = b
    if i == 0:
        return L - s_of(b) + max(script_a(b))
    if i == 1:
        return x1 + pos(x3 - x2 + pos(xb2 - xb3))
    check_index(i)
    return x2 + pos(xb3 - x3) // 2


def eps_vector(b, L: int) -> tuple[int, int, int]:
    return tuple(eps(i, b, L) for i in INDICES)


def phi_vector(b, L: int) -> tuple[int, int, int]:
    return tuple(phi(i, b, L) for i in INDICES)


def wt(b, L: int) -> AffineWeight:
    """Classical weight sum_i (phi_i - eps_i) Lambda_i."""
    return AffineWeight(*(phi(i, b, L) - eps(i, b, L) for i in INDICES), 0)


def f_max(i: int, b, L: int) -> PCElement:
    n = phi(i, b, L)
    for _ in range(n):
        nxt = f(i, b, L)
        assert nxt is not None, f"f_{i} vanished early at {b}"
        b = nxt
    assert f(i, b, L) is None and phi(i, b, L) == 0
    return PCElement(*b)


def enumerate_b1l(L: int) -> list[PCElement]:
    """All elements of B^{1,L} in lexicographic order."""
    if L < 1:
        raise ValueError("level must be positive")
    out = []
    # s(b) <= L  <=>  2(x1+x2+xb2+xb1) + x3 + xb3 <= 2L
    for x1 in range(L + 1):
        for x2 in range(L - x1 + 1):
            r2 = 2 * (L - x1 - x2)
            for x3 in range(r2 + 1):
                for xb3 in range(x3 % 2, r2 - x3 + 1, 2):
                    rest = L - x1 - x2 - (x3 + xb3) // 2
                    for xb2 in range(rest + 1):
                        for xb1 in range(rest - xb2 + 1):
                            out.append(PCElement(x1, x2, x3, xb3, xb2, xb1))
    return out


def minimal_parametrized(L: int) -> set[PCElement]:
    """{(a, b, b, b, b, a) : 2a + 3b <= L}."""
    return {PCElement(a, b, b, b, b, a)
            for a in range(L // 2 + 1) for b in range((L - 2 * a) // 3 + 1)}


def minimal_elements(L: int) -> set[PCElement]:
    """Elements whose eps has level exactly L, computed from the closed formulas."""
    return {b for b in enumerate_b1l(L)
            if sum(c * e_ for c, e_ in zip(LEVEL_COEFFS, eps_vector(b, L))) == L}


def ground_element(l: int) -> PCElement:
    """The l*Lambda_2-minimal element (0, l, l, l, l, 0) of B^{1,3l}."""
    return PCElement(0, l, l, l, l, 0)


class PerfectCrystal:
    """B^{1,L} packaged for the generic crystal machinery."""

    index_set = INDICES

    def __init__(self, L: int):
        if L < 1:
            raise ValueError("level must be positive")
        self.L = L

    def __repr__(self):
        return f"PerfectCrystal(L={self.L})"

    def elements(self) -> list[PCElement]:
        return enumerate_b1l(self.L)

    def f(self, i, b):
        return f(i, b, self.L)

    def e(self, i, b):
        return e(i, b, self.L)

    def eps(self, i, b):
        return eps(i, b, self.L)

    def phi(self, i, b):
        return phi(i, b, self.L)

    def wt(self, b):
        return wt(b, self.L)

    @staticmethod
    def key(b):
        return tuple(b)


def dominant_weights(L: int) -> list[tuple[int, int, int]]:
    """Classical dominant weights (k0, k1, k2) with k0 + 2 k1 + 3 k2 = L."""
    return [(L - 2 * k1 - 3 * k2, k1, k2)
            for k2 in range(L // 3 + 1) for k1 in range((L - 3 * k2) // 2 + 1)]


def _below(top, mu) -> bool:
    """True iff top - mu is a nonnegative integer combination of the classical a1, a2."""
    d0, d1, d2 = (x - y for x, y in zip(top, mu))
    n1 = -d0
    if n1 < 0 or (d2 + n1) % 2:
        return False
    n2 = (d2 + n1) // 2
    return n2 >= 0 and d1 == 2 * n1 - 3 * n2


def perfect_axioms(L: int) -> Report:
    """Perfectness conditions (2)-(5) for B^{1,L}, checked exhaustively."""
    from .crystal import TensorCrystal, induced_graph, is_connected
    from .report import Report

    rep = Report("perfect", {"L": L})
    B = PerfectCrystal(L)
    elems = B.elements()

    # (2)
    BB = TensorCrystal(B, B)
    g = induced_graph(BB.elements(), BB)
    connected = is_connected(g)
    if not connected:
        rep.violations.append("(2) B (x) B is not connected")

    # (3)
    weights = {b: wt(b, L).classical for b in elems}
    distinct = sorted(set(weights.values()))
    tops = [lam for lam in distinct if all(_below(lam, mu) for mu in distinct)]
    lam0 = None
    if len(tops) != 1:
        rep.violations.append(f"(3) expected one maximal weight, found {tops}")
    else:
        lam0 = tops[0]
        carriers = [b for b in elems if weights[b] == lam0]
        if len(carriers) != 1:
            rep.violations.append(f"(3) weight {lam0} carried by {len(carriers)} elements")

    # (4)
    low = [b for b in elems if sum(c * x for c, x in zip(LEVEL_COEFFS, eps_vector(b, L))) < L]
    rep.violations.extend(f"(4) level of eps{tuple(b)} is below {L}" for b in low)

    # (5)
    lam_table = {}
    for lam in dominant_weights(L):
        ups = [b for b in elems if eps_vector(b, L) == lam]
        downs = [b for b in elems if phi_vector(b, L) == lam]
        lam_table[str(lam)] = {"b^lambda": [list(b) for b in ups],
                               "b_lambda": [list(b) for b in downs]}
        if len(ups) != 1 or len(downs) != 1:
            rep.violations.append(f"(5) lambda={lam}: {len(ups)} b^lambda, {len(downs)} b_lambda")

    rep.tables = {"tensor_square_size": len(g.vertices), "connected": connected,
                  "lambda0": list(lam0) if lam0 else None,
                  "dominant_weights": lam_table}
    return rep


def _string_length(op, i, b, L) -> int:
    n = 0
    b = op(i, b, L)
    while b is not None:
        n += 1
        b = op(i, b, L)
    return n


def formula_check(L: int) -> Report:
    """Closed-form eps/phi against iteration counts, plus case-table partitions."""
    from .report import Report

    rep = Report("formulas", {"L": L})
    for b in enumerate_b1l(L):
        for kind, conds in (("F", f_conditions(b)), ("E", e_conditions(b))):
            if sum(conds) != 1:
                rep.violations.append({"element": list(b), "table": kind,
                                       "cases": [n + 1 for n, c in enumerate(conds) if c]})
        for i in INDICES:
            ne, nf = _string_length(e, i, b, L), _string_length(f, i, b, L)
            if (ne, nf) != (eps(i, b, L), phi(i, b, L)):
                rep.violations.append({"element": list(b), "i": i,
                                       "iterated": [ne, nf],
                                       "formula": [eps(i, b, L), phi(i, b, L)]})
    return rep


def axiom_report(L: int, tensor_square: bool = False) -> Report:
    """Crystal axioms on B^{1,L} (and optionally on B (x) B)."""
    from .crystal import TensorCrystal, axiom_check, induced_graph
    from .report import Report

    rep = Report("crystal", {"L": L, "tensor_square": tensor_square})
    B = PerfectCrystal(L)
    g = induced_graph(B.elements(), B)
    rep.violations.extend(axiom_check(g, B))
    sizes = {"B": len(g.vertices), "B_edges": len(g.edges)}
    if tensor_square:
        BB = TensorCrystal(B, B)
        gg = induced_graph(BB.elements(), BB)
        rep.violations.extend(axiom_check(gg, BB))
        sizes.update(BB=len(gg.vertices), BB_edges=len(gg.edges))
    rep.tables = sizes
    return rep


def minimal_check(L: int) -> Report:
    from .report import Report

    rep = Report("minimal", {"L": L})
    got, want = minimal_elements(L), minimal_parametrized(L)
    rep.violations.extend({"element": list(b), "side": "computed only"} for b in sorted(got - want))
    rep.violations.extend({"element": list(b), "side": "parametrized only"} for b in sorted(want - got))
    rep.tables = {"minimal": [list(b) for b in sorted(got)]}
    return rep
