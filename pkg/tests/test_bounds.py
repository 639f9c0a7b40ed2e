from fractions import Fraction
from math import sqrt

import pytest

from circroute.bounds import (
    NOT_APPLICABLE,
    delta_term,
    delta_threshold,
    epsilon,
    kappa,
    lower_bounds,
    lower_cut,
    lower_distance_sum_exact,
    lower_lemma9,
    lower_mean_distance,
    lower_mean_distance_raw,
    lower_theorem2,
    ratio_diagnostics,
    theorem1_bracket,
    theorem1_case,
    theorem4_bracket,
    theorem4_case,
    theorem4_upper,
)
from circroute.errors import DomainError
from circroute.graph import build
from circroute.wavelength import palette_sum, regime
from oracles import bfs, valid_pairs


def test_epsilon():
    assert (epsilon(7), epsilon(12), epsilon(0)) == (1, 0, 0)


@pytest.mark.parametrize("n,s,value", [(7, 2, Fraction(1, 2)), (25, 5, 0), (12, 3, 0)])
def test_delta_term(n, s, value):
    assert delta_term(build(n, s)) == value


@pytest.mark.parametrize("n,s,a,value", [(12, 3, 0, Fraction(1, 2)), (25, 5, -2, -1), (7, 2, 1, Fraction(3, 2))])
def test_kappa(n, s, a, value):
    assert kappa(build(n, s), a) == value


def test_delta_threshold_values():
    assert delta_threshold(25) == pytest.approx(5.4327e6, rel=1e-4)
    assert delta_threshold(1250) == pytest.approx(58.004, rel=1e-4)
    with pytest.raises(DomainError):
        delta_threshold(24)


@pytest.mark.parametrize("n", [25, 100, 1250, 10**5])
def test_delta_threshold_is_the_crossover(n):
    # at s = delta(n) the cut bound and the mean-distance bound coincide
    s = delta_threshold(n)
    cut = (n * n - epsilon(n)) / (4 * (s + 1))
    mean = (n - 1) * (sqrt(2 * n) - 7) ** 3 / (12 * n)
    assert cut == pytest.approx(mean, rel=1e-9)


@pytest.mark.parametrize("n,s,value", [(7, 2, 4), (12, 3, 9), (25, 5, 26)])
def test_lower_cut(n, s, value):
    g = build(n, s)
    assert lower_cut(g) == value
    assert lower_cut(g) == Fraction((n // 2) * ((n + 1) // 2), s + 1)


def test_lower_mean_distance():
    assert lower_mean_distance(build(12, 3)) == 0
    assert lower_mean_distance_raw(build(12, 3)) < 0
    assert lower_mean_distance(build(200, 14)) == Fraction(199 * 13**3, 2400)
    tiny = lower_mean_distance(build(25, 5))
    assert 0 < tiny < 1e-4


@pytest.mark.parametrize("n,s,value", [(12, 3, 10), (7, 2, 4), (25, 5, 30)])
def test_lower_distance_sum(n, s, value):
    assert lower_distance_sum_exact(build(n, s)) == value


def test_theorem2_and_lemma9():
    assert lower_theorem2(build(12, 3)) == 4
    assert lower_theorem2(build(7, 2)) == 2
    assert lower_theorem2(build(34, 10)) is NOT_APPLICABLE
    assert lower_lemma9(build(25, 5)) == 30
    assert lower_lemma9(build(36, 6)) == Fraction(105, 2)
    assert lower_lemma9(build(25, 6)) is NOT_APPLICABLE


def test_bracket_tight_instance():
    arc, edge = theorem1_bracket(build(25, 5))
    assert arc.case == "b"
    assert (arc.lower.value, arc.upper.value) == (15, 15)
    assert (edge.lower.value, edge.upper.value) == (30, 30)
    assert arc.ratio == 1 and edge.tight
    assert edge.lower.tag == "lemma9"


def test_bracket_between_cases():
    # (s+1)^2 = 9 > 7 and s^2 != 7: none of the three cases
    arc, edge = theorem1_bracket(build(7, 2))
    assert arc.case == "none"
    assert (arc.lower.value, arc.upper.value) == (2, 2)
    assert arc.upper.tag == "lemma7"
    arc, edge = theorem1_bracket(build(12, 3))
    assert arc.case == "none"
    assert (arc.lower.value, arc.upper.value) == (5, 7)
    assert arc.upper.tag == "lemma8(a)"
    assert (edge.lower.value, edge.upper.value) == (10, 12)


def test_theorem1_cases():
    assert theorem1_case(build(16, 3)) == "a"
    assert theorem1_case(build(36, 6)) == "b"
    assert theorem1_case(build(40, 8)) == "c"
    arc, _ = theorem1_bracket(build(16, 3))
    assert arc.upper.value == Fraction(15 * 19 + 9, 24)


def test_arc_lower_is_half_edge_lower():
    for n, s in valid_pairs(5, 60):
        arc, edge = theorem1_bracket(build(n, s))
        assert arc.lower.value * 2 == edge.lower.value


def test_formula_only_mode_drops_bfs():
    g = build(12, 3)
    tags = {b.tag for b in lower_bounds(g, max_exhaustive=10)}
    assert "distance_sum" not in tags
    arc, _ = theorem1_bracket(g, max_exhaustive=10)
    assert arc.lower.value == Fraction(9, 2)


def test_theorem4_pinned():
    arc, edge = theorem4_bracket(build(12, 3))
    assert arc.case == "b" and arc.upper.value == Fraction(99, 2)
    assert edge.upper.value == 99
    arc, edge = theorem4_bracket(build(7, 2))
    assert arc.case == "b" and arc.upper.value == 34
    for g in (build(7, 2), build(12, 3), build(25, 5)):
        assert theorem4_bracket(g)[0].lower == theorem1_bracket(g)[0].lower


def test_theorem4_case_matches_regime():
    names = {"a": "wb1", "b": "wb2", "c": "wb3"}
    for n, s in valid_pairs(5, 200):
        g = build(n, s)
        assert names[theorem4_case(g)] == regime(g)


def test_theorem4_original_case_a_below_palette():
    g = build(10, 2)
    assert theorem4_case(g) == "a"
    assert theorem4_upper(g, "a", verbatim=True) < palette_sum(g)
    assert theorem4_upper(g, "a") >= palette_sum(g)


def test_ratio_diagnostics():
    d = ratio_diagnostics(build(25, 5))
    assert d.forwarding_ratio == 1
    d = ratio_diagnostics(build(12, 3))
    assert d.forwarding_ratio == Fraction(6, 5)
    assert d.corollary1_applicable
    d = ratio_diagnostics(build(7, 2), arc_colours=12)
    assert d.optical_ratio == 6
    assert ratio_diagnostics(build(100, 9)).corollary2_applicable
    assert not ratio_diagnostics(build(100, 10)).corollary2_applicable
    assert not ratio_diagnostics(build(100, 13)).corollary1_applicable


def test_distance_sum_bound_from_reference_bfs():
    for n, s in valid_pairs(5, 50):
        assert lower_distance_sum_exact(build(n, s)) == Fraction(sum(bfs(n, s)), 2)
