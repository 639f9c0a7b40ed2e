"""The symmetric all-to-all routing of C_n(1, s) and its link loads.

Every path goes "skips first, then ring steps".  The path from 0 to ``d`` is
built once per ``d``; the path from ``x`` to ``y`` is the path from 0 to
``y - x`` shifted by ``x``.  Because of that translation symmetry every arc
of a given class carries the same load, and that load equals the number of
links of the class used by the ``n - 1`` base paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, NamedTuple

import numpy as np

from . import _kernels
from ._numbers import as_int, delta_term, epsilon
from .errors import ConsistencyError, DomainError
from .graph import Arc, ArcClass, CirculantGraph

__all__ = [
    "CLASS_ORDER",
    "Lemma8Bound",
    "LoadProfile",
    "OrientedPath",
    "PathClass",
    "Routing",
    "base_class",
    "base_path",
    "build_routing",
    "lemma7_formula",
    "lemma7_terms",
    "lemma8_upper_bound",
    "load_profile",
]

CLASS_ORDER = (ArcClass.RING_CW, ArcClass.RING_ACW, ArcClass.SKIP_CW, ArcClass.SKIP_ACW)

# brute-force load checks are skipped above this many nodes unless asked for
DEFAULT_EXHAUSTIVE_CEILING = 2000


class PathClass(NamedTuple):
    """Signed step counts: ``i`` skip steps then ``j`` ring steps."""

    i: int
    j: int


@dataclass(frozen=True)
class OrientedPath:
    graph: CirculantGraph
    nodes: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.nodes) < 2:
            raise DomainError("a path needs at least two nodes")
        if len(set(self.nodes)) != len(self.nodes):
            raise DomainError(f"path revisits a node: {self.nodes}")
        for u, v in zip(self.nodes, self.nodes[1:]):
            self.graph.arc_class(u, v)

    @property
    def source(self) -> int:
        return self.nodes[0]

    @property
    def destination(self) -> int:
        return self.nodes[-1]

    def __len__(self) -> int:
        return len(self.nodes) - 1

    @property
    def classes(self) -> tuple[ArcClass, ...]:
        g = self.graph
        return tuple(g.arc_class(u, v) for u, v in zip(self.nodes, self.nodes[1:]))

    @property
    def arcs(self) -> tuple[Arc, ...]:
        return tuple(Arc(u, v, c) for (u, v), c in zip(zip(self.nodes, self.nodes[1:]), self.classes))

    def translate(self, k: int) -> "OrientedPath":
        n = self.graph.n
        return OrientedPath(self.graph, tuple((v + k) % n for v in self.nodes))


def base_path(g: CirculantGraph, d: int) -> OrientedPath:
    """The routed path from node 0 to node ``d``."""
    n, s = g.n, g.s
    if not 1 <= d <= n - 1:
        raise DomainError(f"destination d={d} outside [1, {n - 1}]")
    if d <= n // 2:
        i, j = divmod(d, s)
        if j <= s // 2:
            nodes = [k * s for k in range(i + 1)] + [i * s + t for t in range(1, j + 1)]
        else:
            top = (i + 1) * s
            nodes = [k * s for k in range(i + 2)] + [top - t for t in range(1, s - j + 1)]
        return OrientedPath(g, tuple(nodes))
    mirror = base_path(g, n - d).nodes
    return OrientedPath(g, (mirror[0],) + tuple(n - v for v in mirror[1:]))


def base_class(g: CirculantGraph, d: int) -> PathClass:
    """Closed-form ``(i, j)`` of :func:`base_path` ``(g, d)``."""
    n, s = g.n, g.s
    if not 1 <= d <= n - 1:
        raise DomainError(f"destination d={d} outside [1, {n - 1}]")
    if d > n // 2:
        i, j = base_class(g, n - d)
        return PathClass(-i, -j)
    i, j = divmod(d, s)
    if j <= s // 2:
        return PathClass(i, j)
    return PathClass(i + 1, j - s)


def _base_classes(g: CirculantGraph) -> np.ndarray:
    """``(n - 1, 2)`` array of signed classes for d = 1 .. n-1."""
    n, s = g.n, g.s
    d = np.arange(1, n, dtype=np.int64)
    near = np.where(d <= n // 2, d, n - d)
    i, j = np.divmod(near, s)
    up = j > s // 2
    i = np.where(up, i + 1, i)
    j = np.where(up, j - s, j)
    sign = np.where(d <= n // 2, 1, -1)
    return np.stack([sign * i, sign * j], axis=1)


class Routing:
    """All ``n(n-1)`` paths, stored implicitly as base paths plus translation."""

    def __init__(self, graph: CirculantGraph):
        self.graph = graph

    def __repr__(self) -> str:
        return f"Routing({self.graph})"

    def __len__(self) -> int:
        return self.graph.n * (self.graph.n - 1)

    @cached_property
    def classes(self) -> np.ndarray:
        """Row ``d - 1`` is the class of the base path to ``d``."""
        return _base_classes(self.graph)

    @cached_property
    def base_paths(self) -> tuple[OrientedPath, ...]:
        return tuple(base_path(self.graph, d) for d in range(1, self.graph.n))

    @cached_property
    def offsets(self) -> tuple[np.ndarray, np.ndarray]:
        """Padded node matrix of the base paths and their link counts.

        Row ``d - 1`` walks ``|i|`` skips then ``|j|`` ring steps; the
        compiled load and conflict loops reject any step that is not a link.
        """
        n, s = self.graph.n, self.graph.s
        i, j = self.classes[:, 0:1], self.classes[:, 1:2]
        a = np.abs(i)
        lengths = (a + np.abs(j)).ravel()
        t = np.arange(int(lengths.max()) + 1, dtype=np.int64)[None, :]
        mat = np.sign(i) * np.minimum(t, a) * s + np.sign(j) * np.clip(t - a, 0, np.abs(j))
        return mat % n, lengths

    def path(self, x: int, y: int) -> OrientedPath:
        n = self.graph.n
        x, y = x % n, y % n
        if x == y:
            raise DomainError("a request needs two distinct nodes")
        return self.base_paths[(y - x) % n - 1].translate(x)

    def path_class(self, x: int, y: int) -> PathClass:
        i, j = self.classes[(y - x) % self.graph.n - 1]
        return PathClass(int(i), int(j))

    def __iter__(self) -> Iterator[OrientedPath]:
        n = self.graph.n
        for x in range(n):
            for y in range(n):
                if x != y:
                    yield self.path(x, y)


def build_routing(g: CirculantGraph) -> Routing:
    return Routing(g)


@dataclass(frozen=True)
class LoadProfile:
    ring_cw: int
    ring_acw: int
    skip_cw: int
    skip_acw: int
    brute_force_checked: bool = False

    @property
    def max_arc_load(self) -> int:
        return max(self.ring_cw, self.ring_acw, self.skip_cw, self.skip_acw)

    @property
    def max_edge_load(self) -> int:
        return max(self.ring_cw + self.ring_acw, self.skip_cw + self.skip_acw)

    def by_class(self) -> dict[ArcClass, int]:
        return dict(zip(CLASS_ORDER, (self.ring_cw, self.ring_acw, self.skip_cw, self.skip_acw)))


def class_totals(rt: Routing) -> tuple[int, int, int, int]:
    """Links of each class used by the base paths, in ``CLASS_ORDER``."""
    i, j = rt.classes[:, 0], rt.classes[:, 1]
    return (
        int(j[j > 0].sum()),
        int(-j[j < 0].sum()),
        int(i[i > 0].sum()),
        int(-i[i < 0].sum()),
    )


def brute_force_arc_loads(rt: Routing) -> np.ndarray:
    """Per-arc loads ``(4, n)`` counted over every one of the ``n(n-1)`` paths."""
    g = rt.graph
    mat, lengths = rt.offsets
    return _kernels.arc_loads(g.n, g.s, mat, lengths)


def load_profile(rt: Routing, verify: bool | None = None) -> LoadProfile:
    """Uniform per-class arc loads of the routing.

    Loads are read off the base paths.  With ``verify`` (default: when
    ``n`` is at most 2000) every path is also walked and the per-arc counts
    must be uniform within each class and equal to the base-path totals.
    """
    totals = class_totals(rt)
    if verify is None:
        verify = rt.graph.n <= DEFAULT_EXHAUSTIVE_CEILING
    if verify:
        loads = brute_force_arc_loads(rt)
        for c, cls in enumerate(CLASS_ORDER):
            row = loads[c]
            if row.min() != row.max():
                u = int(row.argmin())
                raise ConsistencyError(
                    f"{cls.value} loads not uniform in {rt.graph}: "
                    f"arc from {u} carries {row[u]}, max is {row.max()}"
                )
            if row[0] != totals[c]:
                raise ConsistencyError(
                    f"{cls.value}: brute-force load {row[0]} != base-path count {totals[c]}"
                )
    return LoadProfile(*totals, brute_force_checked=bool(verify))


def lemma7_terms(g: CirculantGraph) -> tuple[Fraction, Fraction]:
    """(max ring load, max skip load) of the routing in closed form."""
    q, r, s = g.q, g.r, g.s
    if q % 2 == 0:
        ring = Fraction(q, 4) * (s * s // 2) + Fraction(1, 2) * (r // 2) * ((r + 2) // 2)
        skip = Fraction(q * q * s, 8) + Fraction(q, 2) * ((r // 2) + Fraction(epsilon(s), 2))
    else:
        ring = Fraction(q, 4) * (s * s // 2) + delta_term(g)
        skip = Fraction((q * q - 1) * s, 8) + Fraction(q + 1, 2) * ((r + epsilon(s)) // 2)
    return ring, skip


def lemma7_formula(g: CirculantGraph) -> int:
    """Exact maximum arc load of the routing, from the closed forms."""
    ring, skip = lemma7_terms(g)
    return max(as_int(ring, f"ring term for {g}"), as_int(skip, f"skip term for {g}"))


class Lemma8Bound(NamedTuple):
    case: str  # "a".."e", or "gap" when no case condition holds
    value: Fraction


def lemma8_upper_bound(g: CirculantGraph) -> Lemma8Bound:
    """Case-wise closed-form upper bound on the maximum arc load.

    Square-root thresholds are tested on integers: ``s <= sqrt(n-1)`` as
    ``s*s <= n-1`` and so on.  Case (c) wins over (e) when both hold.
    """
    n, s, q, r = g.n, g.s, g.q, g.r
    es = epsilon(s)
    if q == s and s * s == n:
        return Lemma8Bound("c", Fraction(s * (n - es), 8))
    if q % 2 == 0:
        if s * s <= n - 1:
            return Lemma8Bound("a", Fraction(q * (n + r + 2 * es), 8))
        if (s - 1) ** 2 >= n:
            return Lemma8Bound("d", Fraction(s * n + r - es * q, 8))
    else:
        if (s + 1) ** 2 <= n:
            return Lemma8Bound("b", Fraction(q * (n + r + 2 * es) + s, 8))
        if s * s >= n:
            return Lemma8Bound("e", Fraction(s * (n + r + 2) - es * q, 8))
    return Lemma8Bound("gap", Fraction(lemma7_formula(g)))

