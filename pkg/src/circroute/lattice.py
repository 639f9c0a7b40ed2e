"""Distances in C_n(1, s) through the integer lattice Z^2.

The point ``(x1, x2)`` is labelled by node ``x1 + x2*s mod n``; the points
labelled 0 form a sublattice ``X``.  For a packed basis ``{a, b}`` of ``X``,
the half-open parallelogram spanned by ``a`` and ``b`` holds exactly one
point per node, and the distance from 0 to that node is the L1 distance
from the point to the nearest of the four corners ``0, a, b, a+b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import NamedTuple

from .errors import ConsistencyError
from .graph import CirculantGraph

__all__ = [
    "LatticePoint",
    "PackedBasis",
    "basis_coordinates",
    "corner_distance",
    "distance_sum_lower_bound",
    "is_packed",
    "label",
    "packed_basis",
    "parallelogram",
    "sqrt_case_distance_sum",
]


class LatticePoint(NamedTuple):
    x1: int
    x2: int

    def __add__(self, other):  # type: ignore[override]
        return LatticePoint(self.x1 + other.x1, self.x2 + other.x2)

    def __sub__(self, other):
        return LatticePoint(self.x1 - other.x1, self.x2 - other.x2)

    @property
    def norm(self) -> int:
        return abs(self.x1) + abs(self.x2)


@dataclass(frozen=True)
class PackedBasis:
    a: LatticePoint
    b: LatticePoint
    case_tag: str  # "A", "B" or "C"

    @property
    def det(self) -> int:
        return self.a.x1 * self.b.x2 - self.a.x2 * self.b.x1

    @property
    def corners(self) -> tuple[LatticePoint, ...]:
        zero = LatticePoint(0, 0)
        return (zero, self.a, self.b, self.a + self.b)


def label(g: CirculantGraph, p: tuple[int, int]) -> int:
    return (p[0] + p[1] * g.s) % g.n


def is_packed(a: LatticePoint, b: LatticePoint) -> bool:
    return max(a.norm, b.norm) <= min((a - b).norm, (a + b).norm)


def packed_basis(g: CirculantGraph) -> PackedBasis | None:
    """A packed basis of the zero-label lattice, or ``None`` if none is known.

    No basis is given when ``r > q`` and ``r + q < s + 1``.  When two
    hypotheses hold at once the earlier case tag is used.
    """
    s, q, r = g.s, g.q, g.r
    a = LatticePoint(s, -1)
    if r <= q and 2 * r <= s + 1:
        return PackedBasis(a, LatticePoint(r, q), "A")
    if r <= q and 2 * r >= s + 1:
        return PackedBasis(a, LatticePoint(r - s, q + 1), "B")
    if r >= q and r + q >= s + 1:
        return PackedBasis(a, LatticePoint(r - s, q + 1), "C")
    return None


def basis_coordinates(basis: PackedBasis, v: tuple[int, int]) -> tuple[Fraction, Fraction]:
    """Exact ``(alpha, beta)`` with ``v = alpha*a + beta*b``."""
    a, b, det = basis.a, basis.b, basis.det
    alpha = Fraction(v[0] * b.x2 - v[1] * b.x1, det)
    beta = Fraction(a.x1 * v[1] - a.x2 * v[0], det)
    return alpha, beta


@lru_cache(maxsize=64)
def parallelogram(g: CirculantGraph, basis: PackedBasis) -> dict[int, LatticePoint]:
    """Map node -> the unique point of the half-open parallelogram with that label.

    Membership ``0 <= alpha, beta < 1`` is decided on integer numerators
    over the determinant, so no rounding is involved.
    """
    a, b, det = basis.a, basis.b, basis.det
    if abs(det) != g.n:
        raise ConsistencyError(f"basis {a}, {b} has determinant {det}, expected +-{g.n}")
    xs = (0, a.x1, b.x1, a.x1 + b.x1)
    ys = (0, a.x2, b.x2, a.x2 + b.x2)
    sign = 1 if det > 0 else -1
    span = abs(det)
    found: dict[int, LatticePoint] = {}
    for x1 in range(min(xs), max(xs) + 1):
        for x2 in range(min(ys), max(ys) + 1):
            num_alpha = sign * (x1 * b.x2 - x2 * b.x1)
            num_beta = sign * (a.x1 * x2 - a.x2 * x1)
            if 0 <= num_alpha < span and 0 <= num_beta < span:
                node = (x1 + x2 * g.s) % g.n
                if node in found:
                    raise ConsistencyError(
                        f"label {node} appears twice in the parallelogram of {g}: "
                        f"{found[node]} and {(x1, x2)}"
                    )
                found[node] = LatticePoint(x1, x2)
    if len(found) != g.n:
        missing = sorted(set(range(g.n)) - set(found))[:5]
        raise ConsistencyError(f"parallelogram of {g} misses labels {missing}")
    return found


def corner_distance(g: CirculantGraph, basis: PackedBasis, target: int) -> int:
    """Distance from node 0 to ``target`` via the nearest parallelogram corner."""
    v = parallelogram(g, basis)[target % g.n]
    return min((v - c).norm for c in basis.corners)


def distance_sum_lower_bound(g: CirculantGraph) -> int | None:
    """floor((s+1)^2 / 2) when ``r <= q`` or ``r + q >= s + 1``, else ``None``."""
    s, q, r = g.s, g.q, g.r
    if r <= q or r + q >= s + 1:
        return (s + 1) ** 2 // 2
    return None


def sqrt_case_distance_sum(g: CirculantGraph) -> int | None:
    """Exact sum of d(0, i) when ``s = sqrt(n)``, else ``None``."""
    root = isqrt(g.n)
    if root * root != g.n or g.s != root:
        return None
    return root * (g.n - 1) // 2
