"""Tests for disks, point sets, half-plane tests and convex hulls."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geometry.norm_core import Vector, make_pnorm
from geometry.primitives import (Disk, PointSet, Side, convex_hull, diameter_pair, disk_contains,
                                 farthest_distance, half_plane_side, point_in_convex_hull,
                                 support_points, two_point_disk)
from utils.errors import DegenerateLine


def test_two_point_disk(l4):
    d = two_point_disk(l4, Vector(-1, 0), Vector(1, 0))
    assert tuple(d.center) == (0.0, 0.0)
    assert d.radius == pytest.approx(1.0)
    assert d.diameter == pytest.approx(2.0)


@pytest.mark.parametrize("p", [1.5, 3.0, 4.0])
def test_two_point_disk_touches_both_points(p):
    n = make_pnorm(p)
    rng = np.random.default_rng(7)
    for a, b in rng.uniform(-5, 5, size=(50, 2, 2)):
        pa, pb = Vector(*a), Vector(*b)
        d = two_point_disk(n, pa, pb)
        assert abs(n(pa - d.center) - d.radius) <= 1e-12 * max(1.0, d.radius)
        assert abs(n(pb - d.center) - d.radius) <= 1e-12 * max(1.0, d.radius)


def test_midpoint_is_the_only_center_at_half_distance(l4):
    """Moving the center off the midpoint loses one of the pair at radius ||p - q|| / 2."""
    p, q = Vector(-1, 0.3), Vector(2, -0.4)
    d = two_point_disk(l4, p, q)
    rng = np.random.default_rng(11)
    for shift in rng.normal(scale=0.05, size=(100, 2)):
        moved = Disk(d.center + Vector(*shift), d.radius, l4)
        assert not (moved.contains(p) and moved.contains(q))


def test_disk_contains(l2):
    d = Disk(Vector(0, 0), 1.0, l2)
    assert disk_contains(d, Vector(0.6, 0.8), tol=1e-12)
    assert not disk_contains(d, Vector(0.8, 0.8))
    assert disk_contains(d, Vector(1.0 + 1e-10, 0), tol=1e-9)
    with pytest.raises(ValueError):
        disk_contains(d, Vector(0, 0), tol=-1)


def test_disk_rejects_negative_radius(l2):
    with pytest.raises(ValueError):
        Disk(Vector(0, 0), -0.1, l2)


def test_disk_boundary_lies_on_circle(l4):
    d = Disk(Vector(1, 2), 3.0, l4)
    ring = d.boundary(256)
    assert ring.shape == (257, 2)
    assert np.allclose(l4.value(ring[:, 0] - 1, ring[:, 1] - 2), 3.0, atol=1e-12)


def test_point_set_deduplicates():
    ps = PointSet.from_points([(0, 0), (1, 1), (0, 0), (1.0, 1.0), (2, 0)])
    assert len(ps) == 3
    assert ps.array.shape == (3, 2)
    assert list(ps) == [Vector(0, 0), Vector(1, 1), Vector(2, 0)]


def test_farthest_and_support(l2):
    ps = PointSet.from_points([(-1, 0), (1, 0), (0, 0.5)])
    disk = Disk(Vector(0, 0), 1.0, l2)
    assert farthest_distance(l2, ps, Vector(0, 0)) == pytest.approx(1.0)
    assert support_points(l2, ps, disk, 1e-9) == [Vector(-1, 0), Vector(1, 0)]


def test_diameter_pair(l2):
    ps = PointSet.from_points([(0, 0), (3, 0), (1, 1), (0, -1)])
    i, j, d = diameter_pair(l2, ps)
    assert (i, j) == (1, 3)
    assert d == pytest.approx(np.hypot(3, 1))


@pytest.mark.parametrize("x,side", [((0, 1), Side.LEFT), ((2, 0), Side.ON), ((0, -1), Side.RIGHT)])
def test_half_plane_side(x, side):
    assert half_plane_side(Vector(0, 0), Vector(1, 0), Vector(*x)) is side


def test_half_plane_side_is_scale_free():
    a, b = Vector(0, 0), Vector(1e9, 1e9)
    assert half_plane_side(a, b, Vector(2e9, 2e9 + 1e-3)) is Side.ON
    a, b = Vector(0, 0), Vector(1e-9, 0)
    assert half_plane_side(a, b, Vector(0, 1e-9)) is Side.LEFT


def test_half_plane_side_degenerate_line():
    with pytest.raises(DegenerateLine):
        half_plane_side(Vector(1, 1), Vector(1, 1), Vector(0, 0))


def test_convex_hull_examples():
    assert convex_hull([(0, 0), (2, 0), (1, 1), (1, 0.2)]) == [Vector(0, 0), Vector(2, 0), Vector(1, 1)]
    assert convex_hull([(0, 0), (1, 0), (2, 0)]) == [Vector(0, 0), Vector(2, 0)]
    assert convex_hull([(3, 4)]) == [Vector(3, 4)]
    square = convex_hull([(1, 1), (-1, -1), (-1, 1), (1, -1)])
    assert square == [Vector(-1, -1), Vector(1, -1), Vector(1, 1), Vector(-1, 1)]


def test_point_in_convex_hull():
    tri = [Vector(0, 0), Vector(2, 0), Vector(0, 2)]
    assert point_in_convex_hull(Vector(0.5, 0.5), tri)
    assert point_in_convex_hull(Vector(1, 1), tri)
    assert not point_in_convex_hull(Vector(1.1, 1.1), tri)
    assert point_in_convex_hull(Vector(1, 0), [Vector(0, 0), Vector(2, 0)])
    assert not point_in_convex_hull(Vector(1, 0.1), [Vector(0, 0), Vector(2, 0)])


points = st.lists(st.tuples(st.integers(-100, 100), st.integers(-100, 100)), min_size=1, max_size=30)


@settings(max_examples=100, deadline=None)
@given(points)
def test_hull_idempotent(pts):
    hull = convex_hull(pts)
    assert convex_hull(hull) == hull
