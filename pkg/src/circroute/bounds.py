"""Closed-form bounds on the forwarding and optical indices of C_n(1, s).

Four targets are bracketed: ``pi`` (edge forwarding), ``pi_arc`` (arc
forwarding), ``w`` (edge-conflict-free colours) and ``w_arc`` (arc-conflict-free
colours).  Lower bounds come from counting arguments; upper bounds from the
routing and colouring constructions.  Everything rational is exact.  Only
the mean-distance bound involves ``sqrt(2n)``; it is evaluated in floating
point unless ``2n`` is a perfect square, and never drives case selection.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, sqrt
from typing import Literal, NamedTuple, Union

from ._numbers import delta_term, epsilon, is_square, kappa
from .errors import ConsistencyError, DomainError
from .graph import CirculantGraph, distance_sum_from_zero
from .lattice import distance_sum_lower_bound, sqrt_case_distance_sum
from .routing import DEFAULT_EXHAUSTIVE_CEILING, build_routing, lemma8_upper_bound, load_profile

__all__ = [
    "Bound",
    "BoundReport",
    "NOT_APPLICABLE",
    "RatioDiagnostics",
    "delta_term",
    "delta_threshold",
    "epsilon",
    "kappa",
    "lower_bounds",
    "lower_cut",
    "lower_distance_sum_exact",
    "lower_lemma9",
    "lower_mean_distance",
    "lower_mean_distance_raw",
    "lower_theorem2",
    "ratio_diagnostics",
    "theorem1_bracket",
    "theorem1_case",
    "theorem4_bracket",
    "theorem4_case",
    "theorem4_upper",
]

Number = Union[Fraction, float]
Target = Literal["pi", "pi_arc", "w", "w_arc"]


class _NotApplicable:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "NotApplicable"

    def __bool__(self) -> bool:
        return False


NOT_APPLICABLE = _NotApplicable()


def delta_threshold(n: int) -> float:
    """``3n(n^2 - eps(n)) / ((n-1)(sqrt(2n) - 7)^3) - 1``, defined for n >= 25."""
    if 2 * n <= 49:
        raise DomainError(f"delta threshold needs sqrt(2n) > 7, got n={n}")
    return 3 * n * (n * n - epsilon(n)) / ((n - 1) * (sqrt(2 * n) - 7) ** 3) - 1


def lower_cut(g: CirculantGraph) -> Fraction:
    n = g.n
    return Fraction(n * n - epsilon(n), 4 * (g.s + 1))


def lower_mean_distance_raw(g: CirculantGraph) -> Number:
    """``(n-1)(sqrt(2n)-7)^3 / (12n)``; exact when ``2n`` is a square."""
    n = g.n
    if is_square(2 * n):
        return Fraction((n - 1) * (isqrt(2 * n) - 7) ** 3, 12 * n)
    return (n - 1) * (sqrt(2 * n) - 7) ** 3 / (12 * n)


def lower_mean_distance(g: CirculantGraph) -> Number:
    raw = lower_mean_distance_raw(g)
    return raw if raw > 0 else Fraction(0)


def lower_distance_sum_exact(g: CirculantGraph) -> Fraction:
    """Half the BFS distance sum from one node: every path of length d
    loads d edges, spread over 2n edges."""
    return Fraction(distance_sum_from_zero(g), 2)


def lower_theorem2(g: CirculantGraph):
    value = distance_sum_lower_bound(g)
    return NOT_APPLICABLE if value is None else Fraction(value, 2)


def lower_lemma9(g: CirculantGraph):
    value = sqrt_case_distance_sum(g)
    return NOT_APPLICABLE if value is None else Fraction(isqrt(g.n) * (g.n - 1), 4)


class Bound(NamedTuple):
    value: Number
    tag: str


def lower_bounds(g: CirculantGraph, max_exhaustive: int = DEFAULT_EXHAUSTIVE_CEILING) -> list[Bound]:
    """Every applicable lower bound on ``pi``, closed forms first."""
    found = [Bound(lower_cut(g), "cut"), Bound(lower_mean_distance(g), "mean_distance")]
    for tag, fn in (("theorem2", lower_theorem2), ("lemma9", lower_lemma9)):
        value = fn(g)
        if value is not NOT_APPLICABLE:
            found.append(Bound(value, tag))
    if g.n <= max_exhaustive:
        found.append(Bound(lower_distance_sum_exact(g), "distance_sum"))
    return found


def _best(bounds: list[Bound]) -> Bound:
    # ties go to the earliest entry, so closed forms win over the BFS sum
    best = bounds[0]
    for b in bounds[1:]:
        if b.value > best.value:
            best = b
    return best


@dataclass(frozen=True)
class BoundReport:
    target: Target
    lower: Bound
    upper: Bound
    case: str
    achieved: int | None = None

    def __post_init__(self) -> None:
        if self.lower.value > self.upper.value:
            raise ConsistencyError(f"{self.target}: lower {self.lower} exceeds upper {self.upper}")

    @property
    def ratio(self) -> Number | None:
        if self.lower.value <= 0:
            return None
        return self.upper.value / self.lower.value

    @property
    def tight(self) -> bool:
        return self.lower.value == self.upper.value


def theorem1_case(g: CirculantGraph) -> str:
    n, s = g.n, g.s
    if (s + 1) ** 2 <= n:
        return "a"
    if s * s == n:
        return "b"
    if (s - 1) ** 2 >= n:
        return "c"
    return "none"


def _theorem1_upper(g: CirculantGraph, case: str) -> Fraction:
    n, s, r = g.n, g.s, g.r
    if case == "a":
        return Fraction((n - r) * (n + r + 2) + s * s, 8 * s)
    if case == "b":
        return Fraction(s * (n - epsilon(s)), 8)
    return Fraction(s * s * (n + r + 2) - epsilon(s) * (n - r), 8 * s)


def theorem1_bracket(
    g: CirculantGraph, max_exhaustive: int = DEFAULT_EXHAUSTIVE_CEILING
) -> tuple[BoundReport, BoundReport]:
    """Brackets for ``pi_arc`` and ``pi``.

    The arc lower bound is half the best edge lower bound.  Outside the three
    cases the arc upper bound falls back to the routing's case-wise bound,
    or to its exact load when none of those cases applies either.  The edge
    upper bound is the routing's maximum edge load.
    """
    case = theorem1_case(g)
    best = _best(lower_bounds(g, max_exhaustive))
    if case != "none":
        arc_upper = Bound(_theorem1_upper(g, case), f"theorem1({case})")
    else:
        l8 = lemma8_upper_bound(g)
        tag = "lemma7" if l8.case == "gap" else f"lemma8({l8.case})"
        arc_upper = Bound(l8.value, tag)
    profile = load_profile(build_routing(g), verify=g.n <= max_exhaustive)
    arc = BoundReport(
        "pi_arc", Bound(best.value / 2, best.tag), arc_upper, case, profile.max_arc_load
    )
    edge = BoundReport(
        "pi", best, Bound(Fraction(profile.max_edge_load), "routing"), case, profile.max_edge_load
    )
    return arc, edge


def _threshold_side(g: CirculantGraph, a: int) -> int:
    """Sign of ``s - (sqrt(n - r + k^2) + k)`` with ``k = kappa(a)``, exactly."""
    k = kappa(g, a)
    lhs = g.s - k
    if lhs < 0:
        return -1
    diff = lhs * lhs - (g.n - g.r + k * k)
    return (diff > 0) - (diff < 0)


def theorem4_case(g: CirculantGraph) -> str:
    if _threshold_side(g, -2) <= 0:
        return "a"
    if _threshold_side(g, -1) >= 0 and _threshold_side(g, 0) <= 0:
        return "b"
    if _threshold_side(g, 1) >= 0:
        return "c"
    return "none"


def theorem4_upper(g: CirculantGraph, case: str, verbatim: bool = False) -> Fraction:
    """Closed-form colour bound for ``w_arc`` in a given case.

    In case (a) the original odd-q term ``2q + 3s + 3`` undercounts the
    colouring; the default uses ``3s + 12q + 18``, which follows from the
    exact palette count with ``floor(s/2) <= s/2``.
    """
    q, s = g.q, g.s
    eq = epsilon(q)
    if case == "a":
        tail = 2 * q + 3 * s + 3 if verbatim else 3 * s + 12 * q + 18
        return Fraction(s + 2, 24) * (6 * q * q + 3 * q * (s + 4) + s * (4 * s + 10) + eq * tail)
    if case == "b":
        return (
            Fraction(q * (q + 2) * (5 * q + 2), 24)
            + Fraction(s * (s + 2) * (2 * s + 5), 6)
            + eq * Fraction(5 * q * q + 13 * q + 7, 8)
        )
    if case == "c":
        return (
            Fraction(q * (q + 2) * (q + 10), 24)
            + Fraction(s * (s + 2) * (q + 1), 2)
            + eq * Fraction((q + 5) ** 2 + 4 * (s + 1) ** 2, 8)
        )
    raise DomainError(f"no colour bound for case {case!r}")


def theorem4_bracket(
    g: CirculantGraph,
    max_exhaustive: int = DEFAULT_EXHAUSTIVE_CEILING,
    verbatim: bool = False,
    colour_counts: tuple[int, int] | None = None,
) -> tuple[BoundReport, BoundReport]:
    """Brackets for ``w_arc`` and ``w``.

    Lower bounds are the forwarding lower bounds, since colours on a link
    are at least its load.  The ``w`` upper bound is twice the ``w_arc``
    one.  ``colour_counts`` are the (arc, edge) colours of the constructive
    colouring when already known; they fill the ``achieved`` fields and
    stand in for the closed form if no case applies.
    """
    arc1, edge1 = theorem1_bracket(g, max_exhaustive)
    case = theorem4_case(g)
    achieved_arc, achieved_edge = colour_counts if colour_counts else (None, None)
    if case != "none":
        upper = Bound(theorem4_upper(g, case, verbatim), f"theorem4({case})")
    elif achieved_arc is not None:
        upper = Bound(Fraction(achieved_arc), "colouring")
    else:
        from .wavelength import palette_sum

        upper = Bound(Fraction(palette_sum(g)), "palette_sum")
    arc = BoundReport("w_arc", arc1.lower, upper, case, achieved_arc)
    edge = BoundReport("w", edge1.lower, Bound(2 * upper.value, upper.tag), case, achieved_edge)
    return arc, edge


class RatioDiagnostics(NamedTuple):
    forwarding_ratio: Number
    optical_ratio: Number | None
    corollary1_applicable: bool
    corollary2_applicable: bool


def ratio_diagnostics(
    g: CirculantGraph,
    max_exhaustive: int = DEFAULT_EXHAUSTIVE_CEILING,
    arc_colours: int | None = None,
) -> RatioDiagnostics:
    """Achieved-over-lower ratios for the routing and, if given, the colouring.

    ``s <= sqrt(3n/2)`` is tested as ``2 s^2 <= 3n`` and
    ``s <= 3 sqrt(n) / (2 sqrt 2) - 1`` as ``8 (s+1)^2 <= 9n``.
    """
    arc, edge = theorem1_bracket(g, max_exhaustive)
    forwarding = edge.achieved / edge.lower.value
    optical = None if arc_colours is None else arc_colours / arc.lower.value
    n, s = g.n, g.s
    return RatioDiagnostics(
        forwarding,
        optical,
        2 * s * s <= 3 * n,
        s >= 3 and 8 * (s + 1) ** 2 <= 9 * n,
    )
