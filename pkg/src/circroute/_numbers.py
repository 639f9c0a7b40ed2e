"""Small exact-arithmetic helpers used by several modules."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .graph import CirculantGraph


def epsilon(x: int) -> int:
    """1 if ``x`` is odd, 0 if even."""
    return x & 1


def is_square(m: int) -> bool:
    return m >= 0 and isqrt(m) ** 2 == m


def delta_term(g: CirculantGraph) -> Fraction:
    """The correction term used by the odd-q ring-load count."""
    s, r = g.s, g.r
    if s % 2 == 0:
        return Fraction(s, 4) + Fraction(1, 2) * (r // 2) * (s - (r + 2) // 2)
    return Fraction(1, 2) * ((r + 1) // 2) * (s - (r + 1) // 2)


def kappa(g: CirculantGraph, a: int) -> Fraction:
    return a + Fraction(epsilon(g.s) + epsilon(g.q), 2)


def as_int(value: Fraction, what: str) -> int:
    from .errors import ConsistencyError

    if value.denominator != 1:
        raise ConsistencyError(f"{what} = {value} is not an integer")
    return value.numerator
