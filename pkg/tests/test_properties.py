"""Randomised invariants over valid (n, s)."""

from hypothesis import assume, given
from hypothesis import strategies as st

from circroute.bounds import lower_bounds, theorem1_bracket, theorem4_case, theorem4_upper
from circroute.graph import build, distances_from
from circroute.lattice import corner_distance, packed_basis
from circroute.routing import (
    base_class,
    build_routing,
    lemma7_formula,
    lemma8_upper_bound,
    load_profile,
)
from circroute.wavelength import (
    colour_count_formula,
    colour_of,
    colour_routing,
    palette_sum,
    regime,
)


@st.composite
def graphs(draw, lo=5, hi=150):
    n = draw(st.integers(lo, hi))
    s = draw(st.integers(2, (n - 1) // 2))
    assume(2 * s < n)
    return build(n, s)


@given(graphs(hi=400))
def test_node_degree_and_symmetry(g):
    x = g.n // 3
    nb = g.neighbours(x)
    assert len(set(nb)) == 4
    for y in nb:
        assert x in g.neighbours(y)


@given(graphs(hi=300), st.data())
def test_translation_preserves_routes(g, data):
    rt = build_routing(g)
    x = data.draw(st.integers(0, g.n - 1))
    y = data.draw(st.integers(0, g.n - 1))
    assume(x != y)
    p = rt.path(x, y)
    assert p.source == x and p.destination == y
    k = data.draw(st.integers(0, g.n - 1))
    assert rt.path((x + k) % g.n, (y + k) % g.n).nodes == p.translate(k).nodes


@given(graphs(hi=300), st.data())
def test_reflected_class(g, data):
    d = data.draw(st.integers(1, g.n - 1))
    i, j = base_class(g, d)
    if 2 * d != g.n:
        assert base_class(g, g.n - d) == (-i, -j)
    assert abs(i) <= (g.q + 1) // 2 and abs(j) <= g.s // 2
    assert abs(i * g.s + j) <= g.n / 2


@given(graphs(hi=300))
def test_loads_uniform_and_closed_form(g):
    prof = load_profile(build_routing(g), verify=True)
    assert prof.max_arc_load == lemma7_formula(g) <= lemma8_upper_bound(g).value
    total_len = sum(abs(int(i)) + abs(int(j)) for i, j in build_routing(g).classes)
    assert prof.ring_cw + prof.ring_acw + prof.skip_cw + prof.skip_acw == total_len


@given(graphs(hi=250))
def test_corner_distance_is_bfs(g):
    basis = packed_basis(g)
    assume(basis is not None)
    bfs = distances_from(g)
    assert all(corner_distance(g, basis, t) == bfs[t] for t in range(g.n))


@given(graphs(hi=250))
def test_lower_bounds_below_routing_load(g):
    arc, edge = theorem1_bracket(g)
    for b in lower_bounds(g):
        assert b.value <= edge.achieved
    assert arc.lower.value <= arc.achieved <= arc.upper.value


@given(graphs(hi=100))
def test_colourings_conflict_free(g):
    rt = build_routing(g)
    arc = colour_routing(g, rt, "arc")
    edge = colour_routing(g, rt, "edge")
    assert arc.distinct_count <= palette_sum(g)
    assert edge.distinct_count <= 2 * arc.distinct_count


@given(graphs(hi=2000))
def test_palette_closed_form(g):
    cnt = colour_count_formula(g)
    assert cnt.case_formula.denominator == 1
    assert cnt.regime == regime(g)


@given(graphs(hi=2000))
def test_colour_bound_covers_palette(g):
    assert theorem4_upper(g, theorem4_case(g)) >= palette_sum(g)


@given(graphs(hi=300), st.data())
def test_edge_colour_negates(g, data):
    rt = build_routing(g)
    d = data.draw(st.integers(1, g.n - 1))
    x = data.draw(st.integers(0, g.n - 1))
    i, j = rt.path_class(x, x + d)
    c_arc = colour_of(g, x, (i, j), "arc")
    c_edge = colour_of(g, x, (i, j), "edge")
    assert c_arc.sign == 1
    assert c_edge.sign == (-1 if j < 0 else 1)
    assert c_edge[:3] == c_arc[:3]
