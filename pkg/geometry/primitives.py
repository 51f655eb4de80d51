"""Disks, point sets and the affine predicates shared by every solver.

Containment and distances depend on the norm; the half-plane test and the
convex hull are affine notions and use plain Euclidean arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from geometry.norm_core import TWO_PI, Norm, Vector
from utils.errors import DegenerateLine

PointsLike = Union["PointSet", Iterable]


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    ON = "on"


@dataclass(frozen=True)
class Disk:
    """The ball B(center, radius) of ``norm``."""

    center: Vector
    radius: float
    norm: Norm

    def __post_init__(self):
        if not self.radius >= 0.0:
            raise ValueError(f"Disk radius must be non-negative, got {self.radius}")

    @property
    def diameter(self) -> float:
        return 2.0 * self.radius

    def contains(self, x: Vector, tol: float = 0.0) -> bool:
        return self.norm(x - self.center) <= self.radius + tol

    def boundary(self, samples: int = 256) -> np.ndarray:
        """Closed polyline of the circle, shape (samples + 1, 2)."""
        thetas = np.linspace(0.0, TWO_PI, samples + 1)
        ux, uy = self.norm.unit_point(thetas)
        return np.column_stack([self.center.x + self.radius * ux,
                                self.center.y + self.radius * uy])


@dataclass(frozen=True)
class PointSet:
    points: Tuple[Vector, ...]
    deduplicated: bool = False

    @classmethod
    def from_points(cls, points: Iterable, deduplicate: bool = True) -> "PointSet":
        """Build from Vectors or (x, y) pairs; duplicates (exact equality) keep their first slot."""
        vectors = [Vector.of(p) for p in points]
        if deduplicate:
            vectors = list(dict.fromkeys(vectors))
        return cls(tuple(vectors), deduplicated=deduplicate)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i) -> Vector:
        return self.points[i]

    @cached_property
    def array(self) -> np.ndarray:
        return np.array([[p.x, p.y] for p in self.points], dtype=float).reshape(-1, 2)


def as_point_set(points: PointsLike) -> PointSet:
    if isinstance(points, PointSet):
        return points if points.deduplicated else PointSet.from_points(points.points)
    return PointSet.from_points(points)


# ─────────────────────────────────────────────────────────────────────────────
# Disks and distances
# ─────────────────────────────────────────────────────────────────────────────

def two_point_disk(n: Norm, p: Vector, q: Vector) -> Disk:
    return Disk(p.midpoint(q), 0.5 * n(p - q), n)


def disk_contains(d: Disk, x: Vector, tol: float = 0.0) -> bool:
    if tol < 0:
        raise ValueError("tol must be non-negative")
    return d.contains(x, tol)


def distances(n: Norm, points: np.ndarray, x: Vector) -> np.ndarray:
    """Norm distance from x to every row of ``points``."""
    if len(points) == 0:
        return np.zeros(0)
    return np.asarray(n.value(points[:, 0] - x.x, points[:, 1] - x.y), dtype=float).reshape(-1)


def farthest_distance(n: Norm, points: PointSet, x: Vector) -> float:
    return float(distances(n, points.array, x).max())


def support_points(n: Norm, points: PointSet, disk: Disk, tol: float) -> List[Vector]:
    """Points of P lying on the circle of ``disk`` within ``tol`` (relative to max(1, radius))."""
    d = distances(n, points.array, disk.center)
    band = tol * max(1.0, disk.radius)
    return [points[i] for i in np.flatnonzero(np.abs(d - disk.radius) <= band)]


def diameter_pair(n: Norm, points: PointSet, indices: Sequence[int] = None) -> Tuple[int, int, float]:
    """Pair of indices realising the largest distance (lowest indices on ties)."""
    idx = list(range(len(points))) if indices is None else sorted(indices)
    arr = points.array
    best = (idx[0], idx[0], -1.0)
    for a, i in enumerate(idx[:-1]):
        rest = np.array(idx[a + 1:])
        d = distances(n, arr[rest], points[i])
        k = int(np.argmax(d))
        if d[k] > best[2]:
            best = (i, int(rest[k]), float(d[k]))
    return best


# ─────────────────────────────────────────────────────────────────────────────
# Affine predicates
# ─────────────────────────────────────────────────────────────────────────────

def half_plane_side(a: Vector, b: Vector, x: Vector, tol: float = 1e-12) -> Side:
    """Side of x relative to the directed line a -> b.

    The "on" band is relative: |cross| <= tol * |b - a| * |x - a| (Euclidean).
    """
    if a == b:
        raise DegenerateLine(f"Line through ({a.x}, {a.y}) is undefined: both points coincide")
    ab, ax = b - a, x - a
    cross = ab.cross(ax)
    if abs(cross) <= tol * ab.euclidean() * ax.euclidean():
        return Side.ON
    return Side.LEFT if cross > 0 else Side.RIGHT


def convex_hull(points: PointsLike) -> List[Vector]:
    """Extreme points of co(P), counterclockwise from the lowest-leftmost point.

    Monotone chain; collinear points are dropped, so a collinear set gives its
    two endpoints and a single point gives itself.
    """
    pts = sorted(set(Vector.of(p) for p in points), key=lambda v: (v.x, v.y))
    if len(pts) <= 2:
        return pts

    def turn(o, a, b):
        return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)

    lower: List[Vector] = []
    for p in pts:
        while len(lower) > 1 and turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Vector] = []
    for p in reversed(pts):
        while len(upper) > 1 and turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def point_in_convex_hull(x: Vector, points: Sequence[Vector], tol: float = 1e-7) -> bool:
    """True if x lies in co(points) up to a distance of tol * max(1, extent)."""
    hull = convex_hull(points)
    if not hull:
        return False
    extent = max([1.0] + [(p - hull[0]).euclidean() for p in hull])
    slack = tol * extent
    if len(hull) == 1:
        return (x - hull[0]).euclidean() <= slack
    if len(hull) == 2:
        a, b = hull
        ab = b - a
        t = (x - a).dot(ab) / ab.dot(ab)
        t = min(1.0, max(0.0, t))
        return (x - (a + ab * t)).euclidean() <= slack
    for a, b in zip(hull, hull[1:] + hull[:1]):
        ab = b - a
        if ab.cross(x - a) / ab.euclidean() < -slack:
            return False
    return True


def barycentric(x: Vector, a: Vector, b: Vector, c: Vector) -> Tuple[float, float, float]:
    det = (b - a).cross(c - a)
    if det == 0.0:
        raise ValueError("Barycentric coordinates undefined for a collinear triple")
    la = (b - x).cross(c - x) / det
    lb = (c - x).cross(a - x) / det
    return la, lb, 1.0 - la - lb


def collinear_middle(a: Vector, b: Vector, c: Vector) -> int:
    """Index (0, 1, 2) of the point lying between the other two on their common line."""
    pts = (a, b, c)
    i, j, _ = max(((0, 1, 2), (0, 2, 1), (1, 2, 0)),
                  key=lambda t: (pts[t[0]] - pts[t[1]]).euclidean())
    return 3 - i - j
