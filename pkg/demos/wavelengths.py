"""
Colouring the routes
====================

Paths of one class (same numbers of skips and ring steps) only collide with
each other, so each class gets its own block of colours.  Inside a block the
first colour coordinate is picked from the start node.

The rules as originally stated leave a clash for some odd q; C_26(1,5) is
the smallest case.  The default colouring shifts one range down by one.
"""

from circroute.graph import build
from circroute.routing import build_routing, load_profile
from circroute.wavelength import colour_count_formula, colour_routing

g = build(7, 2)
res = colour_routing(g)
print(g, "arc colours:", res.distinct_count)
for y in range(1, 7):
    print(f"  0 -> {y}: {res.colour(0, y)}")

# the palette over the whole class rectangle is an upper estimate
cnt = colour_count_formula(g)
print("palette:", cnt.sumf, "regime", cnt.regime)

# undirected links: paths going opposite ways must differ too
print("edge colours:", colour_routing(g, variant="edge").distinct_count)

# the unrepaired rules
g = build(26, 5)
bad = colour_routing(g, verbatim=True, strict=False)
c = bad.conflict
print(f"\n{g}: paths {c.first} and {c.second} both use link {c.link} with colour {tuple(c.colour)}")
good = colour_routing(g)
print("repaired:", "conflict-free" if good.conflict_free else "still clashing",
      "with", good.distinct_count, "colours; max arc load",
      load_profile(build_routing(g)).max_arc_load)
