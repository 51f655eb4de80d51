"""Tests for norm-acute / right / obtuse classification and circumcenters."""

import math

import numpy as np
import pytest
from scipy.optimize import brentq

from geometry.norm_core import Vector, make_custom_norm, make_pnorm
from geometry.primitives import barycentric
from geometry.triangle import (TriangleType, Verdict, circumcenter, circumcenters, circumdisk,
                               classify_triangle, classify_vertex)
from utils.errors import DegenerateTriangle, StrictConvexityViolation


def _linf():
    def parametrizer(t):
        c, s = np.cos(t), np.sin(t)
        m = np.maximum(np.abs(c), np.abs(s))
        return c / m, s / m

    return make_custom_norm(lambda x, y: np.maximum(np.abs(x), np.abs(y)), parametrizer,
                            label="linf", validate=False)


def _margins(n, tri):
    """(L - R) / R at every vertex."""
    out = []
    for k in range(3):
        i, j = [m for m in range(3) if m != k]
        lhs = n(tri[k] - tri[i].midpoint(tri[j]))
        rhs = 0.5 * n(tri[i] - tri[j])
        out.append((lhs - rhs) / rhs)
    return out


def _random_triangles(rng, count):
    for a, b, c in rng.uniform(-1, 1, size=(count, 3, 2)):
        tri = (Vector(*a), Vector(*b), Vector(*c))
        if abs((tri[1] - tri[0]).cross(tri[2] - tri[0])) > 1e-3:
            yield tri


def test_classify_vertex_examples(l4):
    assert classify_vertex(l4, [(-1, 0), (1, 0), (0.2, 0.5)], 2) is Verdict.OBTUSE
    assert classify_vertex(l4, [(7, 0), (9, 0), (8.2, 1.5)], 2) is Verdict.ACUTE
    on_circle = (1 - 0.2 ** 4) ** 0.25
    assert classify_vertex(l4, [(-1, 0), (1, 0), (0.2, on_circle)], 2) is Verdict.RIGHT


def test_classify_triangle_examples(l2, l4):
    right = classify_triangle(l2, [(0, 0), (2, 0), (0, 2)])
    assert right.per_vertex == (Verdict.RIGHT, Verdict.ACUTE, Verdict.ACUTE)
    assert right.aggregate is TriangleType.NORM_RIGHT
    assert right.vertex_to_drop() == 0

    obtuse = classify_triangle(l4, [(-1, 0), (1, 0), (0.2, 0.5)])
    assert obtuse.aggregate is TriangleType.NORM_OBTUSE
    assert obtuse.vertex_to_drop() == 2

    acute = classify_triangle(l2, [(0, 0), (2, 0), (1, 5)])
    assert acute.aggregate is TriangleType.NORM_ACUTE
    assert acute.vertex_to_drop() is None


@pytest.mark.parametrize("tri", [[(0, 0), (1, 0), (2, 0)], [(0, 0), (0, 0), (1, 1)]])
def test_degenerate_triangles(l2, tri):
    with pytest.raises(DegenerateTriangle):
        classify_triangle(l2, tri)
    with pytest.raises(DegenerateTriangle):
        circumcenter(l2, tri)


def test_two_right_vertices_signal_a_flat_norm():
    """Under l-infinity the triangle (0,0), (2,0), (0,1) is right at two vertices."""
    with pytest.raises(StrictConvexityViolation):
        classify_triangle(_linf(), [(0, 0), (2, 0), (0, 1)])


@pytest.mark.parametrize("p", [1.5, 3.0])
def test_classification_is_scale_and_translation_invariant(p):
    n = make_pnorm(p)
    rng = np.random.default_rng(5)
    for tri in _random_triangles(rng, 100):
        if min(abs(m) for m in _margins(n, tri)) < 1e-6:
            continue
        moved = [v * 3.7 + Vector(-12.0, 5.5) for v in tri]
        for k in range(3):
            assert classify_vertex(n, tri, k) is classify_vertex(n, moved, k)


def test_circumcenter_examples(l2, l4):
    x = circumcenter(l2, [(0, 0), (2, 0), (0, 2)])
    assert (x.x, x.y) == (pytest.approx(1.0, abs=1e-9), pytest.approx(1.0, abs=1e-9))

    c = brentq(lambda y: (1 + y ** 4) ** 0.25 - (2 - y), 0.0, 2.0, xtol=1e-15)
    x = circumcenter(l4, [(-1, 0), (1, 0), (0, 2)])
    assert x.x == pytest.approx(0.0, abs=1e-8)
    assert x.y == pytest.approx(c, abs=1e-8)


def test_circumcenter_absent_for_thin_obtuse_triple():
    """Under l^1.2 the equalizing point of this triple lies billions of units away."""
    assert circumcenter(make_pnorm(1.2), [(-1, 0), (1, 0), (0, 0.01)]) is None
    assert circumdisk(make_pnorm(1.2), [(-1, 0), (1, 0), (0, 0.01)]) is None


def test_circumdisk_examples(l2, l4):
    d = circumdisk(l2, [(0, 0), (2, 0), (0, 2)])
    assert d.radius == pytest.approx(math.sqrt(2), abs=1e-9)

    d = circumdisk(l2, [(0, 0), (2, 0), (1, math.sqrt(3))])
    assert d.center.x == pytest.approx(1.0, abs=1e-8)
    assert d.center.y == pytest.approx(1 / math.sqrt(3), abs=1e-8)
    assert d.radius == pytest.approx(2 / math.sqrt(3), abs=1e-8)

    c = brentq(lambda y: (1 + y ** 4) ** 0.25 - (2 - y), 0.0, 2.0, xtol=1e-15)
    d = circumdisk(l4, [(-1, 0), (1, 0), (0, 2)])
    assert d.radius == pytest.approx(2 - c, abs=1e-8)


@pytest.mark.parametrize("p", [1.5, 2.0, 3.0, 4.0])
def test_acute_circumcenters_are_interior_and_larger_than_two_point_disks(p):
    n = make_pnorm(p)
    rng = np.random.default_rng(int(p * 10))
    tested = 0
    for tri in _random_triangles(rng, 4000):
        if min(_margins(n, tri)) < 1e-3:
            continue
        x = circumcenter(n, tri)
        d = [n(x - v) for v in tri]
        assert max(d) - min(d) <= 2e-9 * max(1.0, max(d))
        assert min(barycentric(x, *tri)) > 1e-9
        half_diam = 0.5 * max(n(tri[0] - tri[1]), n(tri[0] - tri[2]), n(tri[1] - tri[2]))
        assert d[0] > half_diam
        tested += 1
        if tested == 200:
            break
    assert tested == 200


def test_batched_circumcenters_keep_order(l2):
    tris = [[(0, 0), (2, 0), (0, 2)], [(0, 0), (1, 0), (2, 0)], [(0, 0), (2, 0), (1, 5)]]
    out = circumcenters(l2, tris)
    assert out[0] == circumcenter(l2, tris[0])
    assert out[1] is None
    assert out[2].y == pytest.approx(2.4, abs=1e-8)
