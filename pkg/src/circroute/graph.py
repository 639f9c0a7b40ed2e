"""The circulant graph C_n(1, s) and its brute-force distance oracle.

Nodes are the residues ``0 .. n-1``.  Every node ``x`` is joined to
``x+1``, ``x-1`` (ring links) and ``x+s``, ``x-s`` (skip links), all taken
modulo ``n``.  Distances are computed by breadth-first search only; the
lattice formulas in :mod:`circroute.lattice` are checked against this module,
never the other way round.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, NamedTuple

import numpy as np

from .errors import DomainError

__all__ = [
    "Arc",
    "ArcClass",
    "CirculantGraph",
    "build",
    "cut_size_halfline",
    "distance",
    "distance_sum_from_zero",
    "distances_from",
]


class ArcClass(enum.Enum):
    RING_CW = "ring_cw"
    RING_ACW = "ring_acw"
    SKIP_CW = "skip_cw"
    SKIP_ACW = "skip_acw"

    @property
    def is_ring(self) -> bool:
        return self in (ArcClass.RING_CW, ArcClass.RING_ACW)

    @property
    def is_clockwise(self) -> bool:
        return self in (ArcClass.RING_CW, ArcClass.SKIP_CW)


class Arc(NamedTuple):
    tail: int
    head: int
    cls: ArcClass


@dataclass(frozen=True)
class CirculantGraph:
    """Validated parameters of C_n(1, s) with ``n = q*s + r``, ``0 <= r < s``."""

    n: int
    s: int
    q: int = field(init=False)
    r: int = field(init=False)

    def __post_init__(self) -> None:
        n, s = self.n, self.s
        if isinstance(n, bool) or isinstance(s, bool) or not (
            isinstance(n, (int, np.integer)) and isinstance(s, (int, np.integer))
        ):
            raise DomainError(f"n and s must be integers, got n={n!r}, s={s!r}")
        if n < 5:
            raise DomainError(f"n >= 5 violated (n={n})")
        if s <= 1:
            raise DomainError(f"s > 1 violated (s={s})")
        if 2 * s >= n:
            raise DomainError(f"s < n/2 violated (n={n}, s={s})")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "s", int(s))
        q, r = divmod(int(n), int(s))
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)

    def __str__(self) -> str:
        return f"C_{self.n}(1,{self.s})"

    # steps of the four arc classes, as residues in [0, n)
    def step(self, cls: ArcClass) -> int:
        return {
            ArcClass.RING_CW: 1,
            ArcClass.RING_ACW: self.n - 1,
            ArcClass.SKIP_CW: self.s,
            ArcClass.SKIP_ACW: self.n - self.s,
        }[cls]

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.n

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.n

    def neighbours(self, x: int) -> tuple[int, int, int, int]:
        n, s = self.n, self.s
        return ((x + 1) % n, (x - 1) % n, (x + s) % n, (x - s) % n)

    def arc_class(self, tail: int, head: int) -> ArcClass:
        """Class of the arc ``tail -> head``; raises if they are not adjacent."""
        delta = (head - tail) % self.n
        for cls in ArcClass:
            if delta == self.step(cls):
                return cls
        raise DomainError(f"{tail} and {head} are not adjacent in {self}")

    def arcs(self) -> Iterator[Arc]:
        for cls in ArcClass:
            step = self.step(cls)
            for x in range(self.n):
                yield Arc(x, (x + step) % self.n, cls)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Undirected edges, each as its clockwise arc ``(x, x+1)`` or ``(x, x+s)``."""
        for x in range(self.n):
            yield (x, (x + 1) % self.n)
        for x in range(self.n):
            yield (x, (x + self.s) % self.n)


def build(n: int, s: int) -> CirculantGraph:
    return CirculantGraph(n, s)


@lru_cache(maxsize=256)
def _bfs(g: CirculantGraph, source: int) -> tuple[int, ...]:
    n = g.n
    dist = [-1] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.neighbours(u):
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return tuple(dist)


def distances_from(g: CirculantGraph, source: int = 0) -> tuple[int, ...]:
    """BFS distances from ``source`` to every node."""
    return _bfs(g, source % g.n)


def distance(g: CirculantGraph, x: int, y: int) -> int:
    return _bfs(g, x % g.n)[y % g.n]


def distance_sum_from_zero(g: CirculantGraph) -> int:
    """Sum of d(0, i) over all nodes.

    Multiplying by ``n`` gives the total over all ordered pairs, since the
    graph is vertex-transitive.
    """
    return sum(_bfs(g, 0))


def cut_size_halfline(g: CirculantGraph) -> int:
    """Number of edges leaving U = {0, ..., floor(n/2) - 1}."""
    half = g.n // 2
    return sum(1 for x, y in g.edges() if (x < half) != (y < half))
