"""Affine Cartan datum for D_4^(3).

Weights are stored in the basis (Lambda_0, Lambda_1, Lambda_2, delta).
The delta coefficient is kept so that r_0, whose root contains delta,
acts exactly. Classical consumers simply ignore ``cd``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import sympy

INDICES = (0, 1, 2)

CARTAN_MATRIX = (
    (2, -1, 0),
    (-1, 2, -3),
    (0, -1, 2),
)

# coefficient of h_i in the canonical central element c
LEVEL_COEFFS = (1, 2, 3)

# i_a for a = 1..6; the same for every block j
BLOCK_INDICES = (2, 1, 2, 1, 0, 1)


class InvalidIndexError(ValueError):
    pass


class RootLatticeError(ValueError):
    """Raised when a weight difference is not in the integer root lattice."""


class NotDominantError(ValueError):
    pass


def check_index(i: int) -> int:
    if i not in INDICES:
        raise InvalidIndexError(f"index must be one of 0, 1, 2 (got {i!r})")
    return i


@dataclass(frozen=True, order=True)
class AffineWeight:
    c0: int = 0
    c1: int = 0
    c2: int = 0
    cd: int = 0

    def __add__(self, other: AffineWeight) -> AffineWeight:
        return AffineWeight(self.c0 + other.c0, self.c1 + other.c1,
                            self.c2 + other.c2, self.cd + other.cd)

    def __sub__(self, other: AffineWeight) -> AffineWeight:
        return AffineWeight(self.c0 - other.c0, self.c1 - other.c1,
                            self.c2 - other.c2, self.cd - other.cd)

    def __neg__(self) -> AffineWeight:
        return AffineWeight(-self.c0, -self.c1, -self.c2, -self.cd)

    def __mul__(self, n: int) -> AffineWeight:
        return AffineWeight(n * self.c0, n * self.c1, n * self.c2, n * self.cd)

    __rmul__ = __mul__

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.c0, self.c1, self.c2, self.cd)

    @property
    def classical(self) -> tuple[int, int, int]:
        return (self.c0, self.c1, self.c2)

    def is_dominant(self) -> bool:
        return min(self.classical) >= 0

    def __str__(self) -> str:
        names = ("L0", "L1", "L2", "d")
        terms = [f"{c}{n}" for c, n in zip(self.as_tuple(), names) if c]
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


LAMBDA = (
    AffineWeight(1, 0, 0, 0),
    AffineWeight(0, 1, 0, 0),
    AffineWeight(0, 0, 1, 0),
)
DELTA = AffineWeight(0, 0, 0, 1)
ZERO = AffineWeight()

SIMPLE_ROOTS = (
    AffineWeight(2, -1, 0, 1),
    AffineWeight(-1, 2, -1, 0),
    AffineWeight(0, -3, 2, 0),
)

# classical projections (delta dropped)
CLASSICAL_ROOTS = tuple(AffineWeight(a.c0, a.c1, a.c2, 0) for a in SIMPLE_ROOTS)


def weight(c0: int = 0, c1: int = 0, c2: int = 0, cd: int = 0) -> AffineWeight:
    return AffineWeight(c0, c1, c2, cd)


def pair(mu: AffineWeight, i: int) -> int:
    """<mu, h_i>."""
    check_index(i)
    return mu.classical[i]


def level(mu: AffineWeight) -> int:
    return sum(k * c for k, c in zip(LEVEL_COEFFS, mu.classical))


def reflect(i: int, mu: AffineWeight) -> AffineWeight:
    return mu - pair(mu, i) * SIMPLE_ROOTS[i]


def apply_word(word: Sequence[int], mu: AffineWeight) -> AffineWeight:
    """Apply ``r_{w[0]} r_{w[1]} ... r_{w[-1]}`` to mu (rightmost first)."""
    for i in reversed(word):
        mu = reflect(i, mu)
    return mu


def block_position(k: int) -> tuple[int, int]:
    """Split k >= 1 as k = 6(j-1) + a with 1 <= a <= 6; returns (j, a)."""
    if k < 1:
        raise ValueError("k must be positive")
    j, a = divmod(k - 1, len(BLOCK_INDICES))
    return j + 1, a + 1


def stream_index(k: int) -> int:
    """The reflection index used at step k >= 1 of the w^(k) sequence."""
    return BLOCK_INDICES[block_position(k)[1] - 1]


def wk_word(k: int) -> tuple[int, ...]:
    """Word for w^(k), newest reflection leftmost."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return tuple(stream_index(n) for n in range(k, 0, -1))


def wk_weights(mu: AffineWeight, kmax: int) -> list[AffineWeight]:
    """[w^(0) mu, w^(1) mu, ..., w^(kmax) mu] by incremental reflection."""
    out = [mu]
    for k in range(1, kmax + 1):
        out.append(reflect(stream_index(k), out[-1]))
    return out


_ROOT_MATRIX = sympy.Matrix([list(a.as_tuple()) for a in SIMPLE_ROOTS]).T


def root_coefficients(mu: AffineWeight, base: AffineWeight) -> tuple[int, int, int]:
    """Integers (m0, m1, m2) with base - mu = m0 a0 + m1 a1 + m2 a2.

    The 4x3 system is solved exactly; the redundant equation must be
    consistent and the solution integral, otherwise RootLatticeError.
    """
    rhs = sympy.Matrix(list((base - mu).as_tuple()))
    try:
        sol, params = _ROOT_MATRIX.gauss_jordan_solve(rhs)
    except ValueError as exc:
        raise RootLatticeError(f"{base} - {mu} is not in the root span") from exc
    if params.shape[0]:
        raise RootLatticeError("simple roots are linearly dependent")
    if not all(v.is_integer for v in sol):
        raise RootLatticeError(f"{base} - {mu} has non-integral root coordinates {list(sol)}")
    return tuple(int(v) for v in sol)


def bruhat_increases(word: Sequence[int], j: int, mu: AffineWeight) -> bool:
    """Sufficient test for r_j w > w: <w mu, h_j> > 0 with mu dominant."""
    check_index(j)
    if not mu.is_dominant():
        raise NotDominantError(f"{mu} is not dominant")
    return pair(apply_word(word, mu), j) > 0
