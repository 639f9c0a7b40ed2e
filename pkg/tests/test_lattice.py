from fractions import Fraction

import pytest

from circroute.errors import ConsistencyError
from circroute.graph import build, distances_from
from circroute.lattice import (
    LatticePoint,
    PackedBasis,
    basis_coordinates,
    corner_distance,
    distance_sum_lower_bound,
    is_packed,
    label,
    packed_basis,
    parallelogram,
    sqrt_case_distance_sum,
)
from oracles import bfs, valid_pairs


def test_label_of_basis_vectors_is_zero():
    for n, s in valid_pairs(5, 60):
        g = build(n, s)
        b = packed_basis(g)
        if b is not None:
            assert label(g, b.a) == 0 and label(g, b.b) == 0
            assert abs(b.det) == n
            assert is_packed(b.a, b.b)


@pytest.mark.parametrize(
    "n,s,tag,b",
    [(7, 2, "A", (1, 3)), (12, 3, "A", (0, 4)), (25, 5, "A", (0, 5)), (17, 4, "A", (1, 4))],
)
def test_packed_basis_cases(n, s, tag, b):
    basis = packed_basis(build(n, s))
    assert basis.case_tag == tag
    assert basis.a == LatticePoint(s, -1)
    assert basis.b == LatticePoint(*b)


def test_case_b_and_c():
    # (24,5): q=4, r=4 <= q and 2r > s+1
    assert packed_basis(build(24, 5)).case_tag == "B"
    # (29,6): q=4, r=5 > q and r+q >= s+1
    assert packed_basis(build(29, 6)).case_tag == "C"


def test_no_basis():
    # (34,10): q=3, r=4 > q, r+q = 7 < 11
    assert packed_basis(build(34, 10)) is None
    assert distance_sum_lower_bound(build(34, 10)) is None


def test_basis_coordinates_exact():
    basis = packed_basis(build(12, 3))
    alpha, beta = basis_coordinates(basis, (3, 3))
    assert (alpha, beta) == (Fraction(1), Fraction(1))
    assert basis_coordinates(basis, (1, 0)) == (Fraction(1, 3), Fraction(1, 12))


def test_parallelogram_is_one_point_per_node():
    g = build(25, 5)
    cells = parallelogram(g, packed_basis(g))
    assert sorted(cells) == list(range(25))
    for node, p in cells.items():
        assert label(g, p) == node


def test_parallelogram_rejects_wrong_determinant():
    g = build(12, 3)
    bad = PackedBasis(LatticePoint(3, -1), LatticePoint(1, 3), "A")
    with pytest.raises(ConsistencyError, match="determinant"):
        parallelogram(g, bad)


def test_corner_distance_matches_bfs():
    for n, s in valid_pairs(5, 70):
        g = build(n, s)
        basis = packed_basis(g)
        if basis is None:
            continue
        ref = bfs(n, s)
        assert [corner_distance(g, basis, t) for t in range(n)] == ref


def test_distance_sum_floor():
    assert distance_sum_lower_bound(build(12, 3)) == 8
    assert distance_sum_lower_bound(build(7, 2)) == 4


def test_square_case():
    assert sqrt_case_distance_sum(build(25, 5)) == 60
    assert sqrt_case_distance_sum(build(36, 6)) == 105
    assert sqrt_case_distance_sum(build(25, 6)) is None
    assert sum(distances_from(build(36, 6))) == 105
