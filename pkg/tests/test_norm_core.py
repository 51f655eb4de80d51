"""Unit tests for norms, unit-circle parametrizations and strict convexity checks."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geometry.norm_core import (NormKind, Vector, make_custom_norm, make_pnorm, norm_value,
                                parse_norm_spec, unit_circle_point, validate_strict_convexity)
from utils.errors import NotStrictlyConvex

coords = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
exponents = st.sampled_from([1.2, 1.5, 2.0, 3.0, 4.0, 7.5])


def test_pnorm_values():
    """l^4 and l^2 agree with hand-computed values."""
    assert norm_value(make_pnorm(4), Vector(0.2, 0.5)) == pytest.approx(0.0641 ** 0.25, rel=1e-12)
    assert make_pnorm(2)(Vector(3, 4)) == pytest.approx(5.0)
    assert make_pnorm(3)(Vector(0, 0)) == 0.0


def test_pnorm_large_exponent_does_not_overflow():
    n = make_pnorm(50)
    assert n(Vector(1e200, 1e200)) == pytest.approx(1e200 * 2 ** (1 / 50), rel=1e-12)
    assert n(Vector(1e-200, 0)) == pytest.approx(1e-200, rel=1e-12)


@pytest.mark.parametrize("p", [1.0, 0.5, math.inf])
def test_rejects_non_strictly_convex_exponents(p):
    with pytest.raises(NotStrictlyConvex):
        make_pnorm(p)


def test_rejects_nan_exponent():
    with pytest.raises(ValueError):
        make_pnorm(float("nan"))


def test_vector_rejects_non_finite():
    with pytest.raises(ValueError):
        Vector(float("inf"), 0)


def test_unit_circle_points():
    """Parametrized points have norm one and the axes are exact."""
    n = make_pnorm(4)
    u = unit_circle_point(n, math.pi / 4)
    assert u.x == pytest.approx(math.sqrt(math.sqrt(0.5)), rel=1e-12)
    assert n(u) == pytest.approx(1.0, abs=1e-12)
    assert tuple(unit_circle_point(n, math.pi / 2)) == (0.0, 1.0)
    assert tuple(unit_circle_point(n, 0.0)) == (1.0, 0.0)


@pytest.mark.parametrize("p", [1.5, 2.0, 4.0])
def test_unit_circle_is_counterclockwise(p):
    n = make_pnorm(p)
    thetas = np.linspace(0, 2 * np.pi, 200, endpoint=False)
    ux, uy = n.unit_point(thetas)
    angles = np.unwrap(np.arctan2(uy, ux))
    assert np.all(np.diff(angles) > 0)
    assert np.allclose(n.value(ux, uy), 1.0, atol=1e-12)


@pytest.mark.parametrize("theta", [0.3, 1.0, 2.5, 4.0, 6.0])
def test_parameter_of_inverts_unit_point(theta):
    n = make_pnorm(3)
    ux, uy = n.unit_point(theta)
    assert n.parameter_of(5 * ux, 5 * uy) == pytest.approx(theta, abs=1e-12)


def test_custom_norm_matches_euclidean():
    n = make_custom_norm(lambda x, y: np.hypot(x, y), lambda t: (np.cos(t), np.sin(t)), label="euclid")
    assert n.kind is NormKind.CUSTOM
    assert n(Vector(3, 4)) == pytest.approx(5.0)
    assert n.parameter_of(0.0, 2.0) == pytest.approx(math.pi / 2, abs=1e-9)


def test_custom_linf_is_rejected():
    """A square unit ball has flat sides."""
    def evaluator(x, y):
        return np.maximum(np.abs(x), np.abs(y))

    def parametrizer(t):
        c, s = np.cos(t), np.sin(t)
        m = np.maximum(np.abs(c), np.abs(s))
        return c / m, s / m

    with pytest.raises(NotStrictlyConvex):
        make_custom_norm(evaluator, parametrizer, label="linf")


@pytest.mark.parametrize("p", [1.2, 1.5, 2.0, 4.0, 10.0])
def test_pnorms_pass_convexity_sampling(p):
    assert validate_strict_convexity(make_pnorm(p)).ok


def test_gradient():
    gx, gy = make_pnorm(2).gradient(3.0, 4.0)
    assert (gx, gy) == (pytest.approx(0.6), pytest.approx(0.8))
    assert make_pnorm(3).gradient(0.0, 0.0) == (0.0, 0.0)


@pytest.mark.parametrize("spec,p", [("p:4", 4.0), (" p : 2.5 ", 2.5), ("P:1.5", 1.5)])
def test_parse_norm_spec(spec, p):
    assert parse_norm_spec(spec).p == p


@pytest.mark.parametrize("spec", ["p:1", "p:inf", "p:Infinity"])
def test_parse_norm_spec_rejects(spec):
    with pytest.raises(NotStrictlyConvex):
        parse_norm_spec(spec)


@pytest.mark.parametrize("spec", ["q:3", "p:", "p:abc", ""])
def test_parse_norm_spec_malformed(spec):
    with pytest.raises(ValueError):
        parse_norm_spec(spec)


@settings(max_examples=200, deadline=None)
@given(p=exponents, x=coords, y=coords, a=st.floats(min_value=-100, max_value=100))
def test_homogeneity(p, x, y, a):
    n = make_pnorm(p)
    assert n(Vector(a * x, a * y)) == pytest.approx(abs(a) * n(Vector(x, y)), rel=1e-12, abs=1e-9)


@settings(max_examples=200, deadline=None)
@given(p=exponents, x1=coords, y1=coords, x2=coords, y2=coords)
def test_triangle_inequality(p, x1, y1, x2, y2):
    n = make_pnorm(p)
    u, v = Vector(x1, y1), Vector(x2, y2)
    assert n(u + v) <= (n(u) + n(v)) * (1 + 1e-12) + 1e-12
