"""Seeded point sets for the CLI generator and the tests."""
from __future__ import annotations

import numpy as np

from geometry.primitives import PointSet


def uniform_instance(n: int, seed: int = 0, low: float = -1.0, high: float = 1.0) -> PointSet:
    """``n`` points uniform in [low, high]^2; the same seed gives the same set."""
    if n < 1:
        raise ValueError(f"Instance size must be positive, got {n}")
    rng = np.random.default_rng(seed)
    xy = rng.uniform(low, high, size=(n, 2))
    return PointSet.from_points(map(tuple, xy))


def figure_one_triangle() -> PointSet:
    """Triangle whose minimal enclosing l-infinity disk is not unique."""
    return PointSet.from_points([(-0.5, -1.0), (1.0, -1.0), (0.25, 1.0)])


def ring_instance(n: int, seed: int = 0, radius: float = 1.0, jitter: float = 0.01) -> PointSet:
    """``n`` points at random angles with radii uniform in radius * (1 +- jitter).

    Nearly cocircular sets put every point on the hull and pack the farthest-point
    Voronoi vertices close together.
    """
    if n < 1:
        raise ValueError(f"Instance size must be positive, got {n}")
    rng = np.random.default_rng(seed)
    theta = np.sort(rng.uniform(0.0, 2.0 * np.pi, size=n))
    r = radius * rng.uniform(1.0 - jitter, 1.0 + jitter, size=n)
    return PointSet.from_points(zip(r * np.cos(theta), r * np.sin(theta)))
