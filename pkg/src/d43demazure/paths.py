"""Path realization of B(l Lambda_2) over B = B^{1,3l}.

A path is stored as a finite prefix (p(N-1), ..., p(0)); every p(k) with
k >= N is the ground element (0, l, l, l, l, 0). The semi-infinite tail is
replaced by a highest-weight cap u with eps_i(u) = 0 and
phi_i(u) = <l Lambda_2, h_i>, so a path is modelled as
u (x) p(N-1) (x) ... (x) p(0).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import perfect
from .cartan import INDICES, LAMBDA, AffineWeight, block_position, stream_index
from .crystal import DEFAULT_BUDGET, BudgetExceeded, closure, signature_positions
from .perfect import PCElement, ground_element

KAPPA = 1


@dataclass(frozen=True)
class LambdaPath:
    l: int
    prefix: tuple[PCElement, ...] = ()

    def __post_init__(self):
        g = ground_element(self.l)
        prefix = tuple(PCElement(*b) for b in self.prefix)
        n = 0
        while n < len(prefix) and prefix[n] == g:
            n += 1
        object.__setattr__(self, "prefix", prefix[n:])

    @property
    def L(self) -> int:
        return 3 * self.l

    def __len__(self):
        return len(self.prefix)

    def entry(self, k: int) -> PCElement:
        """p(k), the k-th factor counted from the right."""
        if k < len(self.prefix):
            return self.prefix[len(self.prefix) - 1 - k]
        return ground_element(self.l)

    def padded(self, width: int) -> tuple[PCElement, ...]:
        """Prefix padded on the left with ground elements to ``width`` factors."""
        g = ground_element(self.l)
        return (g,) * (width - len(self.prefix)) + self.prefix

    def encode(self) -> dict:
        return {"l": self.l, "prefix": [list(b) for b in self.prefix]}

    @classmethod
    def decode(cls, doc: dict) -> LambdaPath:
        return cls(doc["l"], tuple(PCElement(*b) for b in doc["prefix"]))

    def sort_key(self):
        return (len(self.prefix), self.prefix)

    def __str__(self):
        body = " x ".join(str(b) for b in self.prefix)
        return f"[... x {body}]" if body else "[ground]"


@dataclass(frozen=True)
class GroundStateInfo:
    l: int
    weight: AffineWeight
    element: PCElement


@lru_cache(maxsize=None)
def ground_state_info(l: int, steps: int = 3) -> GroundStateInfo:
    """Ground-state data for lambda = l Lambda_2, with stationarity asserted.

    Runs lambda_{k+1} = eps(b_{lambda_k}) for a few steps from the unique
    b with phi(b) = lambda and checks that nothing moves.
    """
    L = 3 * l
    lam = (0, 0, l)
    elems = perfect.enumerate_b1l(L)
    for _ in range(steps):
        hits = [b for b in elems if perfect.phi_vector(b, L) == lam]
        assert len(hits) == 1, f"b_lambda for {lam} is not unique: {hits}"
        nxt = perfect.eps_vector(hits[0], L)
        assert hits[0] == ground_element(l) and nxt == lam, (hits[0], nxt)
        lam = nxt
    return GroundStateInfo(l, l * LAMBDA[2], hits[0])


def ground_state(l: int) -> LambdaPath:
    if l < 1:
        raise ValueError("l must be positive")
    ground_state_info(l)
    return LambdaPath(l)


# -- crystal structure via the nested binary tensor rule -------------------------

def _profiles(i: int, p: LambdaPath, factors) -> list[tuple[int, int]]:
    """(eps_i, phi_i) of cap (x) factors[0] (x) ... (x) factors[m], for each m.

    Entry 0 is the cap alone.
    """
    L = p.L
    e, ph = 0, p.l * (1 if i == 2 else 0)
    out = [(e, ph)]
    for b in factors:
        e2, p2 = perfect.eps(i, b, L), perfect.phi(i, b, L)
        e, ph = max(e, e2 - (ph - e)), max(p2, ph + (p2 - e2))
        out.append((e, ph))
    return out


def _select(i: int, p: LambdaPath, factors, strict: bool) -> int:
    """Position acted on by f_i (strict) or e_i; -1 means the cap.

    Walks ((cap (x) f0) (x) f1) ... from the right, choosing the left
    block when phi(left) > eps(right) (f) or >= (e).
    """
    L = p.L
    prof = _profiles(i, p, factors)
    for m in range(len(factors) - 1, -1, -1):
        left_phi = prof[m][1]
        right_eps = perfect.eps(i, factors[m], L)
        if (left_phi > right_eps) if strict else (left_phi >= right_eps):
            continue
        return m
    return -1


def _replace(p: LambdaPath, factors, m: int, b) -> LambdaPath | None:
    if b is None:
        return None
    return LambdaPath(p.l, tuple(factors[:m]) + (b,) + tuple(factors[m + 1:]))


def path_f(i: int, p: LambdaPath) -> LambdaPath | None:
    factors = p.prefix
    m = _select(i, p, factors, strict=True)
    if m < 0:
        factors = (ground_element(p.l),) + factors
        m = _select(i, p, factors, strict=True)
        assert m >= 0, f"f_{i} selected the cap twice at {p}"
    return _replace(p, factors, m, perfect.f(i, factors[m], p.L))


def path_e(i: int, p: LambdaPath) -> LambdaPath | None:
    factors = p.prefix
    m = _select(i, p, factors, strict=False)
    if m < 0:
        return None
    return _replace(p, factors, m, perfect.e(i, factors[m], p.L))


def path_eps_phi(i: int, p: LambdaPath) -> tuple[int, int]:
    return _profiles(i, p, p.prefix)[-1]


def path_wt(p: LambdaPath) -> AffineWeight:
    """Classical weight l Lambda_2 + sum_k wt(p(k)) (the ground element has weight 0)."""
    w = p.l * LAMBDA[2]
    for b in p.prefix:
        w = w + perfect.wt(b, p.L)
    return w


class PathCrystal:
    """The lambda-paths for lambda = l Lambda_2 as a crystal."""

    index_set = INDICES

    def __init__(self, l: int):
        self.l = l

    def __repr__(self):
        return f"PathCrystal(l={self.l})"

    def f(self, i, p):
        return path_f(i, p)

    def e(self, i, p):
        return path_e(i, p)

    def eps(self, i, p):
        return path_eps_phi(i, p)[0]

    def phi(self, i, p):
        return path_eps_phi(i, p)[1]

    def wt(self, p):
        return path_wt(p)

    @staticmethod
    def key(p):
        return p.sort_key()


class SignatureTensorModel(PathCrystal):
    """Same paths, crystal structure from the multi-factor signature rule.

    Each path is written out as cap (x) g (x) p(N-1) (x) ... (x) p(0) with
    one explicit ground factor g; the cap must never be chosen by f.
    """

    def _factors(self, p):
        return p.padded(len(p.prefix) + 1)

    def _signature(self, i, p):
        factors = self._factors(p)
        L = p.L
        prof = [(0, p.l if i == 2 else 0)]
        prof += [(perfect.eps(i, b, L), perfect.phi(i, b, L)) for b in factors]
        return factors, signature_positions(prof)

    def f(self, i, p):
        factors, (f_at, _, _, _) = self._signature(i, p)
        if f_at is None:
            return None
        assert f_at > 0, f"cap selected by f_{i} at {p}"
        return _replace(p, factors, f_at - 1, perfect.f(i, factors[f_at - 1], p.L))

    def e(self, i, p):
        factors, (_, e_at, _, _) = self._signature(i, p)
        if e_at is None or e_at == 0:
            return None
        return _replace(p, factors, e_at - 1, perfect.e(i, factors[e_at - 1], p.L))

    def eps(self, i, p):
        return self._signature(i, p)[1][2]

    def phi(self, i, p):
        return self._signature(i, p)[1][3]


# -- Demazure path sets -------------------------------------------------------------

def pk_set(k: int, l: int, budget: int = DEFAULT_BUDGET) -> set[LambdaPath]:
    """P^(k)(l Lambda_2, B) for mixing index 1.

    With k = 6(j-1) + a: p(m) is the ground element for m >= j,
    p(j-1) ranges over B_a^(j) and p(0), ..., p(j-2) over all of B.
    """
    assert KAPPA == 1
    if k == 0:
        return {ground_state(l)}
    from .demazure import ba_j

    j, a = block_position(k)
    top = ba_j(a, l).elements
    full = perfect.enumerate_b1l(3 * l)
    size = len(top) * len(full) ** (j - 1)
    if size > budget:
        raise BudgetExceeded(f"P^({k}) has {size} paths, budget {budget}")
    return {LambdaPath(l, (t,) + rest)
            for t in top for rest in itertools.product(full, repeat=j - 1)}


def demazure_paths(k: int, l: int, budget: int = DEFAULT_BUDGET) -> set[LambdaPath]:
    """B_{w^(k)}(l Lambda_2) in the path model, by successive f_i-closures."""
    S = {ground_state(l)}
    for n in range(1, k + 1):
        i = stream_index(n)
        S = closure(S, lambda p, i=i: (path_f(i, p),), budget)
    return S
