from fractions import Fraction

import pytest

from circroute.errors import ConsistencyError, DomainError
from circroute.graph import build
from circroute.routing import OrientedPath, build_routing, load_profile
from circroute.wavelength import (
    Colour,
    alpha_beta,
    colour_count_formula,
    colour_of,
    colour_routing,
    first_coordinates,
    palette_sum,
    path_class,
    regime,
    regime_formula,
)
from oracles import first_conflict, valid_pairs


@pytest.mark.parametrize(
    "n,s,nodes,cls",
    [(12, 3, (0, 3, 6, 5), (2, -1)), (7, 2, (0, 2, 3), (1, 1)), (7, 2, (0, 6), (0, -1))],
)
def test_path_class(n, s, nodes, cls):
    g = build(n, s)
    assert path_class(g, OrientedPath(g, nodes)) == cls


def test_path_class_rejects_rings_before_skips():
    g = build(12, 3)
    with pytest.raises(DomainError, match="skip step after"):
        path_class(g, OrientedPath(g, (0, 1, 4)))


@pytest.mark.parametrize("n,s,j,ab", [(12, 3, 1, (1, 3)), (20, 4, 2, (1, 2)), (25, 5, 2, (2, 5))])
def test_alpha_beta(n, s, j, ab):
    g = build(n, s)
    alpha, beta = alpha_beta(g, j)
    assert (alpha, beta) == ab
    assert alpha * s == beta * abs(j)


def test_alpha_beta_zero():
    with pytest.raises(DomainError):
        alpha_beta(build(12, 3), 0)


@pytest.mark.parametrize(
    "x,cls,colour",
    [(0, (0, 1), (0, 0, 1)), (4, (0, 1), (2, 0, 1)), (0, (1, 0), (0, 1, 0))],
)
def test_colour_of_pinned(x, cls, colour):
    assert colour_of(build(7, 2), x, cls)[:3] == colour


def test_negative_classes_share_or_negate():
    g = build(25, 5)
    for x in range(25):
        arc = colour_of(g, x, (1, -2))
        assert arc == colour_of(g, x, (-1, 2))
        edge = colour_of(g, x, (1, -2), "edge")
        assert edge.sign == -1 and edge[:3] == arc[:3]


@pytest.mark.parametrize(
    "x,expected",
    [
        (14, 3),  # x < (h-1)s, x0 > s-j
        (15, 0),  # x < hs, x0 <= s-j
        (19, 7),  # (h-1)s <= x < hs, x0 > s-j
        (20, 5),  # hs <= x, x0 <= s-j
        (24, 2),  # hs <= x <= n-j, x0 > s-j
        (39, 2),  # x = n-j
        (40, 7),  # x > n-j
    ],
)
def test_step2_boundaries(x, expected):
    # C_41(1,5): q=8, r=1, floor(q/2)=4; class (3,2) has |i| > j
    g = build(41, 5)
    assert colour_of(g, x, (3, 2)).c1 == expected


def test_bad_inputs():
    g = build(7, 2)
    with pytest.raises(DomainError):
        colour_of(g, 7, (0, 1))
    with pytest.raises(DomainError):
        colour_of(g, 0, (0, 0))


def test_vectorised_matches_scalar():
    for n, s in valid_pairs(5, 45):
        g = build(n, s)
        rt = build_routing(g)
        for i, j in {tuple(map(int, c)) for c in rt.classes}:
            for verbatim in (False, True):
                vec = first_coordinates(g, (i, j), verbatim)
                assert vec.tolist() == [colour_of(g, x, (i, j), verbatim=verbatim).c1 for x in range(n)]


def test_first_coordinate_ranges():
    for n, s in valid_pairs(5, 80):
        g = build(n, s)
        for i, j in {tuple(map(int, c)) for c in build_routing(g).classes}:
            if j < 0:
                i, j = -i, -j
            c1 = first_coordinates(g, (i, j))
            hi = 4 * j if j > 0 and abs(i) <= j else 2 * abs(i) + j
            assert c1.min() >= 0 and c1.max() < hi


def test_small_colourings_against_reference():
    for n, s in valid_pairs(5, 30):
        g = build(n, s)
        rt = build_routing(g)

        def col(x, y, variant):
            return tuple(colour_of(g, x, rt.path_class(x, y), variant))

        for variant in ("arc", "edge"):
            assert first_conflict(n, s, lambda x, y: col(x, y, variant), variant == "edge") is None
            res = colour_routing(g, rt, variant)
            ref = {col(x, y, variant) for x in range(n) for y in range(n) if x != y}
            assert res.distinct_count == len(ref) == len(res.palette())


def test_pinned_counts():
    assert colour_routing(build(7, 2)).distinct_count == 12
    assert colour_routing(build(7, 2), variant="edge").distinct_count <= 24
    assert colour_routing(build(12, 3)).distinct_count <= 34


def test_original_rules_conflict():
    g = build(26, 5)
    res = colour_routing(g, verbatim=True, strict=False)
    assert res.conflict is not None
    assert res.conflict.colour == Colour(7, -3, 2)
    with pytest.raises(ConsistencyError, match="conflict"):
        colour_routing(g, verbatim=True)
    # the reference checker sees the same clash
    rt = build_routing(g)
    clash = first_conflict(26, 5, lambda x, y: tuple(colour_of(g, x, rt.path_class(x, y), verbatim=True)))
    assert clash is not None
    assert colour_routing(g).conflict_free


def test_counts_bracket_the_load():
    for n, s in valid_pairs(5, 60):
        g = build(n, s)
        rt = build_routing(g)
        arc = colour_routing(g, rt, "arc").distinct_count
        edge = colour_routing(g, rt, "edge").distinct_count
        assert load_profile(rt, verify=False).max_arc_load <= arc <= palette_sum(g)
        assert edge <= 2 * arc


@pytest.mark.parametrize("n,s,sumf,kind", [(7, 2, 34, "wb2"), (12, 3, 34, "wb2"), (25, 5, 116, "wb2")])
def test_colour_count_pinned(n, s, sumf, kind):
    cnt = colour_count_formula(build(n, s))
    assert (cnt.sumf, cnt.case_formula, cnt.regime) == (sumf, sumf, kind)


def test_wb2_terms_for_7_2():
    g = build(7, 2)
    assert regime_formula(g) == Fraction(255, 24) + 12 + Fraction(91, 8)


def test_regimes():
    assert regime(build(100, 2)) == "wb1"
    assert regime(build(100, 30)) == "wb3"


def test_original_odd_q_formula_is_off():
    # q = 5 odd, floor(s/2) = 1 <= ceil(q/2) - 2
    g = build(10, 2)
    assert regime(g) == "wb1"
    assert palette_sum(g) == 60
    assert regime_formula(g) == 60
    assert regime_formula(g, verbatim=True) == Fraction(295, 6)
    with pytest.raises(ConsistencyError):
        colour_count_formula(g, verbatim=True)


def test_palette_sum_by_enumeration():
    # count colours class by class over the whole rectangle
    for n, s in valid_pairs(5, 80):
        g = build(n, s)
        Q, S = (g.q + 1) // 2, s // 2
        total = 0
        for i in range(-Q, Q + 1):
            for j in range(0, S + 1):
                if (i, j) == (0, 0):
                    continue
                total += 4 * j if j >= abs(i) else 2 * abs(i) + j
        assert palette_sum(g) == total
