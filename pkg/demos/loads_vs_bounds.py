"""
Routing loads against the lower bounds
======================================

Fix n and walk s from 2 up to n/2.  For each skip length print the
routing's maximum edge load, the best lower bound and which bound it was.
Small s is governed by the cut through the ring, large s by the distance
sum; the ratio column shows how far the construction is from the bound.
"""

import numpy as np

from circroute.graph import build
from circroute.bounds import lower_bounds, theorem1_bracket

n = 97
rows = []
for s in range(2, (n + 1) // 2):
    g = build(n, s)
    arc, edge = theorem1_bracket(g)
    rows.append((s, edge.achieved, float(edge.lower.value), edge.lower.tag, arc.case))

print(f"{'s':>3} {'load':>5} {'lower':>8} {'by':<14} case")
for s, load, low, tag, case in rows:
    print(f"{s:3d} {load:5d} {low:8.2f} {tag:<14} {case}")

ratios = np.array([load / low for _, load, low, _, _ in rows])
best = int(np.argmin(ratios))
print(f"\nratio range {ratios.min():.3f} .. {ratios.max():.3f}, best at s = {rows[best][0]}")

# the cut bound can beat the distance sum for small s
g = build(n, 2)
print({b.tag: float(b.value) for b in lower_bounds(g)})
