"""
A tight instance: C_25(1,5)
===========================

With n = 25 and s = 5 = sqrt(n) every link carries the same load under the
skips-then-rings routing, and that load meets the lower bound.  Nothing to
choose, nothing to improve.
"""

from circroute.graph import build, distance_sum_from_zero
from circroute.routing import build_routing, load_profile
from circroute.bounds import theorem1_bracket

g = build(25, 5)
print(g, "q =", g.q, "r =", g.r)

# every path is a few skips followed by a few ring steps
rt = build_routing(g)
for y in (1, 3, 7, 12, 13, 24):
    p = rt.path(0, y)
    print(f"0 -> {y:2d}: {p.nodes}  class {tuple(rt.path_class(0, y))}")

# translation symmetry means one load per link class
prof = load_profile(rt)
print(prof.by_class())

# distance sum from one node; half of it lower-bounds the edge load
print("sum of distances:", distance_sum_from_zero(g))

arc, edge = theorem1_bracket(g)
print(f"edge forwarding in [{edge.lower.value}, {edge.upper.value}]  tight: {edge.tight}")
print(f"arc forwarding  in [{arc.lower.value}, {arc.upper.value}]  tight: {arc.tight}")
