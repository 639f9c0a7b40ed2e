"""Wavelength assignment for the symmetric routing.

Each routed path of class ``(i, j)`` leaving node ``x`` gets the colour
``(c1, i, j)``.  Only the first coordinate depends on ``x``; it is chosen so
that paths of one class that share a link get different values.  Paths with
``j < 0`` reuse the colour of class ``(-i, -j)`` at the same ``x``: in the
arc version the colour is identical (such paths never share a directed
link), in the edge version it is negated, which doubles the palette.

The rules as originally stated have a defect when ``q`` is odd: for the classes
``(-(q+1)/2, j)`` with ``1 < j < (q+1)/2`` the two ranges of nodes that get
first coordinates ``2|i| + 1 .. 2|i| + j - 1`` overlap on paths that share a
skip link.  By default the second of those ranges is shifted down by one
(into the unused value ``2|i|``), which removes every conflict without new
colours.  ``verbatim=True`` reproduces the original rules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Literal, NamedTuple

import numpy as np

from . import _kernels
from ._numbers import epsilon
from .errors import ConsistencyError, DomainError
from .graph import CirculantGraph
from .routing import OrientedPath, PathClass, Routing, build_routing

__all__ = [
    "Colour",
    "ColourCount",
    "ColouringResult",
    "Conflict",
    "alpha_beta",
    "colour_count_formula",
    "colour_of",
    "colour_routing",
    "first_coordinates",
    "palette_sum",
    "path_class",
    "regime",
    "regime_formula",
]

Variant = Literal["arc", "edge"]


class Colour(NamedTuple):
    c1: int
    c2: int
    c3: int
    sign: int = 1


def path_class(g: CirculantGraph, p: OrientedPath) -> PathClass:
    """Read the signed ``(skips, ring steps)`` off a skips-then-rings path."""
    i = j = 0
    in_ring = False
    for cls in p.classes:
        step = 1 if cls.is_clockwise else -1
        if cls.is_ring:
            if j and (j > 0) != (step > 0):
                raise DomainError(f"ring steps change direction in {p.nodes}")
            in_ring = True
            j += step
        else:
            if in_ring:
                raise DomainError(f"skip step after a ring step in {p.nodes}")
            if i and (i > 0) != (step > 0):
                raise DomainError(f"skip steps change direction in {p.nodes}")
            i += step
    return PathClass(i, j)


def alpha_beta(g: CirculantGraph, j: int) -> tuple[int, int]:
    """``alpha = |j|/gcd(s,|j|)``, ``beta = s/gcd(s,|j|)``; ``alpha*s == beta*|j|``."""
    if j == 0:
        raise DomainError("alpha/beta undefined for j = 0")
    d = gcd(g.s, abs(j))
    return abs(j) // d, g.s // d


def _step1(g: CirculantGraph, x: int, j: int) -> int:
    alpha, _ = alpha_beta(g, j)
    xa = x // (alpha * g.s)
    rest = (x + xa // 2) % j
    if 2 * x <= g.n:
        return epsilon(xa) * j + rest
    return (2 + epsilon(xa)) * j + rest


def _step2(g: CirculantGraph, x: int, i: int, j: int, verbatim: bool) -> int:
    n, s, q, r = g.n, g.s, g.q, g.r
    a = abs(i)
    x0 = x % s
    half = q // 2
    low = x0 <= s - j
    candidates = []
    if x < half * s and low:
        candidates.append((x0 + x // s) % a)
    if x < (half - 1) * s and not low:
        candidates.append(a + (x0 + x // s) % a)
    if (half - 1) * s <= x < half * s and not low:
        candidates.append(2 * a + x0 + j - s)
    if half * s <= x <= n - j and low:
        candidates.append(a + (x0 + x // s + s - q - r - 1) % a)
    if half * s <= x <= n - j and not low:
        candidates.append((x0 + x // s - q - r) % a)
    if x > n - j:
        shift = 0 if verbatim or a <= half else 1
        candidates.append(2 * a + x + j - n - shift)
    if len(candidates) != 1:
        raise ConsistencyError(
            f"{len(candidates)} colouring cases match x={x}, class ({i},{j}) in {g}"
        )
    return candidates[0]


def colour_of(
    g: CirculantGraph,
    x: int,
    cls: tuple[int, int],
    variant: Variant = "arc",
    verbatim: bool = False,
) -> Colour:
    """Colour of the routed path of class ``cls`` that starts at node ``x``."""
    i, j = cls
    if not 0 <= x < g.n:
        raise DomainError(f"node {x} outside [0, {g.n})")
    if (i, j) == (0, 0):
        raise DomainError("class (0, 0) is not a path")
    if j < 0:
        base = colour_of(g, x, (-i, -j), "arc", verbatim)
        return base._replace(sign=-1) if variant == "edge" else base
    if j > 0 and abs(i) <= j:
        return Colour(_step1(g, x, j), i, j)
    return Colour(_step2(g, x, i, j, verbatim), i, j)


def first_coordinates(g: CirculantGraph, cls: tuple[int, int], verbatim: bool = False) -> np.ndarray:
    """``c1`` for every start node at once (vectorised :func:`colour_of`)."""
    n, s, q, r = g.n, g.s, g.q, g.r
    i, j = cls
    if j < 0:
        i, j = -i, -j
    x = np.arange(n, dtype=np.int64)
    if j > 0 and abs(i) <= j:
        alpha = j // gcd(s, j)
        xa = x // (alpha * s)
        rest = (x + xa // 2) % j
        return np.where(2 * x <= n, (xa & 1) * j + rest, (2 + (xa & 1)) * j + rest)
    a = abs(i)
    x0 = x % s
    blk = x // s
    half = q // 2
    low = x0 <= s - j
    mid = (half * s <= x) & (x <= n - j)
    shift = 0 if verbatim or a <= half else 1
    conds = [
        (x < half * s) & low,
        (x < (half - 1) * s) & ~low,
        ((half - 1) * s <= x) & (x < half * s) & ~low,
        mid & low,
        mid & ~low,
        x > n - j,
    ]
    values = [
        (x0 + blk) % a,
        a + (x0 + blk) % a,
        2 * a + x0 + j - s,
        a + (x0 + blk + s - q - r - 1) % a,
        (x0 + blk - q - r) % a,
        2 * a + x + j - n - shift,
    ]
    matches = np.sum(conds, axis=0)
    if not np.all(matches == 1):
        bad = int(np.flatnonzero(matches != 1)[0])
        raise ConsistencyError(
            f"{int(matches[bad])} colouring cases match x={bad}, class {cls} in {g}"
        )
    return np.select(conds, values)


class Conflict(NamedTuple):
    """Two equally coloured paths sharing a link (arc or edge)."""

    link: tuple[int, int]
    first: tuple[int, int]  # (source, destination)
    second: tuple[int, int]
    colour: Colour


@dataclass(frozen=True)
class ColouringResult:
    graph: CirculantGraph
    variant: Variant
    verbatim: bool
    c1: np.ndarray = field(repr=False)  # (n-1, n): base index d-1, start node
    classes: np.ndarray = field(repr=False)  # (n-1, 2) signed classes
    distinct_count: int
    conflict: Conflict | None

    @property
    def conflict_free(self) -> bool:
        return self.conflict is None

    def colour(self, x: int, y: int) -> Colour:
        n = self.graph.n
        k = (y - x) % n - 1
        i, j = (int(v) for v in self.classes[k])
        c1 = int(self.c1[k, x % n])
        if j < 0:
            return Colour(c1, -i, -j, -1 if self.variant == "edge" else 1)
        return Colour(c1, i, j)

    def palette(self) -> set[Colour]:
        n = self.graph.n
        return {self.colour(x, (x + d) % n) for d in range(1, n) for x in range(n)}


def _groups(classes: np.ndarray, variant: Variant) -> np.ndarray:
    keys = {}
    out = np.empty(len(classes), dtype=np.int64)
    for k, (i, j) in enumerate(classes.tolist()):
        if j < 0:
            key = (-1 if variant == "edge" else 1, -i, -j)
        else:
            key = (1, i, j)
        out[k] = keys.setdefault(key, len(keys))
    return out


def colour_routing(
    g: CirculantGraph,
    rt: Routing | None = None,
    variant: Variant = "arc",
    verbatim: bool = False,
    strict: bool = True,
) -> ColouringResult:
    """Colour every path of the routing and check for conflicts exhaustively.

    The check walks all ``n(n-1)`` paths and fails on two equally coloured
    paths sharing a directed arc (``"arc"``) or an undirected edge
    (``"edge"``).  With ``strict`` a conflict raises
    :class:`ConsistencyError`; otherwise it is recorded on the result.
    """
    if variant not in ("arc", "edge"):
        raise DomainError(f"unknown variant {variant!r}")
    rt = rt or build_routing(g)
    classes = rt.classes
    n = g.n
    c1 = np.empty((n - 1, n), dtype=np.int64)
    memo: dict[tuple[int, int], np.ndarray] = {}
    for k, (i, j) in enumerate(classes.tolist()):
        key = (-i, -j) if j < 0 else (i, j)
        if key not in memo:
            memo[key] = first_coordinates(g, key, verbatim)
        c1[k] = memo[key]
    group = _groups(classes, variant)
    order = np.argsort(group, kind="stable")
    mat, lengths = rt.offsets
    unit, k1, x1, k2, x2 = _kernels.find_conflict(n, g.s, mat, lengths, order, group, c1, variant == "edge")
    distinct = int(np.unique(group[:, None] * (int(c1.max()) + 1) + c1).size)
    result = ColouringResult(g, variant, verbatim, c1, classes, distinct, None)
    if unit >= 0:
        if variant == "edge":
            link = (unit, (unit + 1) % n) if unit < n else (unit - n, (unit - n + g.s) % n)
        else:
            cls_idx, tail = divmod(unit, n)
            step = (1, n - 1, g.s, n - g.s)[cls_idx]
            link = (tail, (tail + step) % n)
        conflict = Conflict(
            link,
            (x1, (x1 + k1 + 1) % n),
            (x2, (x2 + k2 + 1) % n),
            result.colour(x2, (x2 + k2 + 1) % n),
        )
        result = ColouringResult(g, variant, verbatim, c1, classes, distinct, conflict)
        if strict:
            raise ConsistencyError(
                f"{variant} colouring of {g} has a conflict on link {link}: "
                f"paths {conflict.first} and {conflict.second} both get {conflict.colour}"
            )
    return result


# -- colour counts ---------------------------------------------------------


def palette_sum(g: CirculantGraph) -> int:
    """Size of the full palette over the class rectangle, summed term by term."""
    S = g.s // 2
    Q = (g.q + 1) // 2
    g1 = min(S, Q)
    g2 = min(S + 1, Q)
    total = sum((2 * j + 1) * 4 * j for j in range(1, g1 + 1))
    total += sum((2 * Q + 1) * 4 * j for j in range(g1 + 1, S + 1))
    total += sum(4 * i + 2 * j for i in range(1, g2 + 1) for j in range(i))
    total += sum(4 * i + 2 * j for i in range(g2 + 1, Q + 1) for j in range(S + 1))
    return total


def regime(g: CirculantGraph) -> str:
    """Which closed form applies: ``floor(s/2)`` against ``ceil(q/2)``."""
    S, Q = g.s // 2, (g.q + 1) // 2
    if S <= Q - 2:
        return "wb1"
    if S <= Q:
        return "wb2"
    return "wb3"


def regime_formula(g: CirculantGraph, verbatim: bool = False) -> Fraction:
    """Closed form of :func:`palette_sum` for the applicable regime.

    For ``wb1`` with odd ``q`` the original odd-q term,
    ``floor((s+2)/2) (3 floor(s/2) + q + 3/2) / 6``, does not match the sum;
    the default uses ``floor((s+2)/2) (floor(s/2) + 2q + 3) / 2``, which does.
    """
    q, s = g.q, g.s
    S, P = s // 2, (s + 2) // 2
    eq = epsilon(q)
    kind = regime(g)
    if kind == "wb1":
        main = Fraction(P, 6) * (3 * q * q + 6 * q + (3 * q + 10) * S + 8 * S * S)
        if verbatim:
            return main + Fraction(eq, 6) * P * (3 * S + q + Fraction(3, 2))
        return main + Fraction(eq, 2) * P * (S + 2 * q + 3)
    if kind == "wb2":
        return (
            Fraction(5 * q**3 + 12 * q * q + 4 * q, 24)
            + Fraction(2, 3) * S * P * (4 * S + 5)
            + eq * Fraction(5 * q * q + 13 * q + 7, 8)
        )
    return (
        Fraction(q**3 + 12 * q * q + 20 * q, 24)
        + (2 * q + 2) * S * P
        + eq * (Fraction(q * q + 9 * q + 11, 8) + 2 * P * S)
    )


class ColourCount(NamedTuple):
    sumf: int
    case_formula: Fraction
    regime: str


def colour_count_formula(g: CirculantGraph, verbatim: bool = False) -> ColourCount:
    """Palette size by direct summation and by the regime's closed form.

    Raises :class:`ConsistencyError` when the two disagree.
    """
    total = palette_sum(g)
    closed = regime_formula(g, verbatim)
    if closed != total:
        raise ConsistencyError(
            f"palette sum {total} != {regime(g)} closed form {closed} for {g}"
        )
    return ColourCount(total, closed, regime(g))
