"""Triangle types in normed planes and circumcenters of triples.

A triangle is norm-acute / norm-right / norm-obtuse at p_k when the distance
from p_k to the midpoint of the opposite side is greater than / equal to /
less than half the length of that side. Two right vertices cannot occur in a
strictly convex plane, so seeing them means the norm (or the tolerance) is off.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from multiprocessing import Pool
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import brentq

from geometry.bisector import BisectorQuery, BisectorSide, bisector_point, bisector_points
from geometry.norm_core import Norm, NormKind, Vector
from geometry.primitives import Disk, Side, half_plane_side
from utils.errors import ConvergenceFailure, DegenerateTriangle, StrictConvexityViolation
from utils.logging import logger

DEFAULT_EPS = 1e-9
DEFAULT_TOL = 1e-9
CAP_FACTOR = 64.0
GRID_START_EXP = -12
_OTHERS = {0: (1, 2), 1: (0, 2), 2: (0, 1)}


class Verdict(str, Enum):
    ACUTE = "acute"
    RIGHT = "right"
    OBTUSE = "obtuse"


class TriangleType(str, Enum):
    NORM_OBTUSE = "norm_obtuse"
    NORM_RIGHT = "norm_right"
    NORM_ACUTE = "norm_acute"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class TriangleClassification:
    per_vertex: Tuple[Verdict, Verdict, Verdict]
    aggregate: TriangleType

    def vertex_to_drop(self) -> Optional[int]:
        """Index of the obtuse or right vertex; None for norm-acute triangles."""
        for i, verdict in enumerate(self.per_vertex):
            if verdict is not Verdict.ACUTE:
                return i
        return None


def _vertices(tri: Sequence) -> Tuple[Vector, Vector, Vector]:
    if len(tri) != 3:
        raise DegenerateTriangle(f"A triangle needs 3 vertices, got {len(tri)}")
    a, b, c = (Vector.of(p) for p in tri)
    if a == b or b == c or a == c:
        raise DegenerateTriangle("Triangle has coincident vertices")
    if half_plane_side(a, b, c) is Side.ON:
        raise DegenerateTriangle("Triangle vertices are collinear")
    return a, b, c


def _thales_sides(n: Norm, pts, k: int) -> Tuple[float, float]:
    i, j = _OTHERS[k]
    lhs = n(pts[k] - pts[i].midpoint(pts[j]))
    rhs = 0.5 * n(pts[i] - pts[j])
    return lhs, rhs


def classify_vertex(n: Norm, tri: Sequence, k: int, eps: float = DEFAULT_EPS) -> Verdict:
    pts = _vertices(tri)
    if k not in _OTHERS:
        raise IndexError(f"Vertex index must be 0, 1 or 2, got {k}")
    lhs, rhs = _thales_sides(n, pts, k)
    band = eps * max(1.0, rhs)
    if abs(lhs - rhs) <= band:
        return Verdict.RIGHT
    return Verdict.ACUTE if lhs > rhs else Verdict.OBTUSE


def classify_triangle(n: Norm, tri: Sequence, eps: float = DEFAULT_EPS) -> TriangleClassification:
    pts = _vertices(tri)
    verdicts = tuple(classify_vertex(n, pts, k, eps) for k in range(3))
    rights = verdicts.count(Verdict.RIGHT)
    obtuse = verdicts.count(Verdict.OBTUSE)

    if rights >= 2:
        raise StrictConvexityViolation(
            f"Triangle {[tuple(p) for p in pts]} is right at two vertices; "
            f"impossible under a strictly convex norm"
        )
    if obtuse + rights > 1:
        raise StrictConvexityViolation(
            f"Inconsistent classification {[v.value for v in verdicts]} for {[tuple(p) for p in pts]}"
        )
    if obtuse == 1:
        aggregate = TriangleType.NORM_OBTUSE
    elif rights == 1:
        aggregate = TriangleType.NORM_RIGHT
    else:
        aggregate = TriangleType.NORM_ACUTE
    return TriangleClassification(verdicts, aggregate)


# ─────────────────────────────────────────────────────────────────────────────
# Circumcenters
# ─────────────────────────────────────────────────────────────────────────────

def _radius_grid(mu0: float, cap: float) -> np.ndarray:
    steps = max(1, int(math.ceil(math.log2(max(cap - mu0, mu0) / mu0))) + 1)
    deltas = mu0 * 2.0 ** np.arange(GRID_START_EXP, steps)
    return np.concatenate([[mu0], mu0 + deltas])


def _search_side(n: Norm, pi: Vector, pj: Vector, pk: Vector, side: BisectorSide,
                 grid: np.ndarray, tol: float) -> Optional[Vector]:
    pts = bisector_points(n, pi, pj, grid, side)
    g = np.asarray(n.value(pts[:, 0] - pk.x, pts[:, 1] - pk.y), dtype=float) - grid
    signs = np.sign(g)
    hits = np.flatnonzero((signs[1:] != signs[:-1]) | (signs[1:] == 0))
    if hits.size == 0:
        return None
    m = int(hits[0]) + 1

    def excess(mu):
        x = bisector_point(n, BisectorQuery(pi, pj, mu, side))
        return n(x - pk) - mu

    if g[m] == 0.0:
        mu_star = float(grid[m])
    else:
        try:
            mu_star = brentq(excess, float(grid[m - 1]), float(grid[m]),
                             xtol=1e-14 * max(1.0, grid[0]), maxiter=200)
        except (RuntimeError, ValueError) as exc:
            raise ConvergenceFailure(f"Circumradius refinement failed: {exc}")
    x = bisector_point(n, BisectorQuery(pi, pj, mu_star, side))

    d = (n(x - pi), n(x - pj), n(x - pk))
    if max(d) - min(d) > 2.0 * tol * max(1.0, mu_star):
        return None
    return x


def circumcenter(n: Norm, tri: Sequence, tol: float = DEFAULT_TOL) -> Optional[Vector]:
    """The point equidistant from the three vertices, or None if none was found.

    The base pair is the longest side; its bisector is walked by radius, first
    on the side of the third vertex and, for non-acute triples, on the other
    side too, up to 64 times the triangle diameter. Norm-acute triangles always
    have a circumcenter, so failing to find one for them is an error.
    """
    pts = _vertices(tri)
    i, j, k = max(((0, 1, 2), (0, 2, 1), (1, 2, 0)), key=lambda t: n(pts[t[0]] - pts[t[1]]))
    pi, pj, pk = pts[i], pts[j], pts[k]
    diam = n(pi - pj)
    mu0 = 0.5 * diam
    mid = pi.midpoint(pj)

    g0 = n(pk - mid) - mu0
    if abs(g0) <= tol * max(1.0, mu0):
        return mid

    home = BisectorSide.PLUS if half_plane_side(pi, pj, pk) is Side.LEFT else BisectorSide.MINUS
    grid = _radius_grid(mu0, CAP_FACTOR * diam)
    acute = g0 > 0

    x = _search_side(n, pi, pj, pk, home, grid, tol)
    if x is None and not acute:
        x = _search_side(n, pi, pj, pk, home.opposite, grid, tol)
    if x is None:
        if acute:
            raise ConvergenceFailure(
                f"No circumcenter found for norm-acute triangle {[tuple(p) for p in pts]}"
            )
        logger.debug("No circumcenter within %.3g x diameter for %s", CAP_FACTOR,
                     [tuple(p) for p in pts])
    return x


def circumdisk(n: Norm, tri: Sequence, tol: float = DEFAULT_TOL) -> Optional[Disk]:
    x = circumcenter(n, tri, tol)
    if x is None:
        return None
    return Disk(x, n(x - Vector.of(tri[0])), n)


def _circumcenter_task(args) -> Optional[Vector]:
    n, tri = args
    try:
        return circumcenter(n, tri)
    except DegenerateTriangle:
        return None


def circumcenters(n: Norm, triangles: Sequence[Sequence], workers: int = 1) -> List[Optional[Vector]]:
    """``circumcenter`` of each triangle, None for missing or degenerate ones.

    With ``workers > 1`` the triangles are spread over a process pool; the
    output order always matches the input. Custom norms wrap arbitrary
    callables, which may not pickle, so they always run serially.
    """
    tasks = [(n, tuple(tri)) for tri in triangles]
    if workers > 1 and n.kind is NormKind.CUSTOM:
        logger.debug("Computing %d circumcenters serially for custom norm %s", len(tasks), n)
        workers = 1
    if workers > 1 and len(tasks) > 1:
        with Pool(workers) as pool:
            return pool.map(_circumcenter_task, tasks, chunksize=max(1, len(tasks) // (4 * workers)))
    return [_circumcenter_task(t) for t in tasks]
