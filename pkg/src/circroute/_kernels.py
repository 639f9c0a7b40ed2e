"""Compiled exhaustive loops over every path of an all-to-all routing.

Paths are passed as a padded matrix of base-path node offsets: row ``k``
holds the nodes of the base path from 0 to ``k + 1`` and ``lengths[k]`` is
its number of links.  The path from ``x`` is row ``k`` translated by ``x``.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# arc class indices, matching routing.CLASS_ORDER
RING_CW, RING_ACW, SKIP_CW, SKIP_ACW = 0, 1, 2, 3


@njit(cache=True)
def _arc_class(n, s, u, v):
    delta = (v - u) % n
    if delta == 1:
        return RING_CW
    if delta == n - 1:
        return RING_ACW
    if delta == s:
        return SKIP_CW
    if delta == n - s:
        return SKIP_ACW
    return -1


@njit(cache=True)
def arc_loads(n, s, offsets, lengths):
    """Per-arc loads, shape (4, n): ``loads[c, u]`` counts paths using the
    arc of class ``c`` leaving ``u``."""
    loads = np.zeros((4, n), dtype=np.int64)
    for k in range(offsets.shape[0]):
        for x in range(n):
            for t in range(lengths[k]):
                u = (x + offsets[k, t]) % n
                v = (x + offsets[k, t + 1]) % n
                c = _arc_class(n, s, u, v)
                if c < 0:
                    raise ValueError("path step between non-adjacent nodes")
                loads[c, u] += 1
    return loads


@njit(cache=True)
def _unit(n, s, u, v, edge_mode):
    c = _arc_class(n, s, u, v)
    if not edge_mode:
        return c * n + u
    # an undirected edge is named by the tail of its clockwise arc
    if c == RING_CW:
        return u
    if c == RING_ACW:
        return v
    if c == SKIP_CW:
        return n + u
    return n + v


@njit(cache=True)
def find_conflict(n, s, offsets, lengths, order, group, c1, edge_mode):
    """Search for two equally coloured paths sharing an arc (or edge).

    A colour is the pair ``(group[k], c1[k, x])``.  ``order`` must list the
    base-path indices sorted by group so each colour group is scanned in one
    contiguous run.  Returns ``(unit, k1, x1, k2, x2)`` for the first conflict
    found, or all ``-1`` when the colouring is conflict-free.
    """
    units = 2 * n if edge_mode else 4 * n
    cmax = 0
    for k in range(c1.shape[0]):
        for x in range(n):
            if c1[k, x] > cmax:
                cmax = c1[k, x]
    seen_group = np.full((cmax + 1, units), -1, dtype=np.int64)
    seen_path = np.zeros((cmax + 1, units), dtype=np.int64)
    for k in order:
        gk = group[k]
        for x in range(n):
            col = c1[k, x]
            for t in range(lengths[k]):
                u = (x + offsets[k, t]) % n
                v = (x + offsets[k, t + 1]) % n
                w = _unit(n, s, u, v, edge_mode)
                if seen_group[col, w] == gk:
                    p = seen_path[col, w]
                    return w, p // n, p % n, k, x
                seen_group[col, w] = gk
                seen_path[col, w] = k * n + x
    return -1, -1, -1, -1, -1
