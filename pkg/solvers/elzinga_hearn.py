"""
elzinga_hearn.py
─────────────────────────────────────────────────────────────────────────────
Elzinga–Hearn iteration for the minimal enclosing disk in a strictly convex
normed plane.

The iteration only ever looks at two-point disks and circumdisks of norm-acute
triples, and each disk it looks at is strictly larger than the previous one,
so it terminates on the optimum. Steps:

    pair    two-point disk of {p1, p2}; done if it encloses P, otherwise add
            a violator p3.
    triple  if {p1, p2, p3} is norm-obtuse or norm-right at a vertex, drop that
            vertex and go back to "pair"; otherwise take the circumdisk. Done
            if it encloses P. Otherwise pick a violator p4, the active vertex
            p5 farthest from p4, and the vertex p6 on the other side of the
            line <p5, center> from p4; repeat "triple" with {p4, p5, p6}.

Selection rules (any valid choice gives the same disk, these make runs
reproducible): the largest violation wins, ties go to the lowest input index.

Dependencies: numpy
"""
from __future__ import annotations

from math import comb
from typing import List, Optional, Sequence, Tuple

import numpy as np

from geometry.norm_core import Norm
from geometry.primitives import (Disk, PointSet, Side, as_point_set, collinear_middle,
                                 diameter_pair, distances, half_plane_side,
                                 support_points, two_point_disk)
from geometry.triangle import circumdisk, classify_triangle
from solvers.report import Algorithm, Iteration, SolveReport, StepKind
from utils.config import SETTINGS
from utils.errors import ConvergenceFailure, EmptyInput, InternalInconsistency
from utils.logging import logger

SIDE_TOL = 1e-9
SAMPLE_SIZE = 16
FULL_SCAN_LIMIT = 64
START_POLICIES = ("diameter", "first")
VIOLATOR_POLICIES = ("max", "first")


def _initial_pair(n: Norm, points: PointSet, start: str, seed: int) -> Tuple[int, int]:
    if start == "first":
        return 0, 1
    if len(points) <= FULL_SCAN_LIMIT:
        i, j, _ = diameter_pair(n, points)
    else:
        sample = np.random.default_rng(seed).choice(len(points), SAMPLE_SIZE, replace=False)
        i, j, _ = diameter_pair(n, points, [int(s) for s in sample])
    return i, j


def _violator(d: np.ndarray, radius: float, tol: float, policy: str,
              active: Sequence[int] = ()) -> Optional[int]:
    excess = d - radius
    excess[list(active)] = -np.inf
    outside = np.flatnonzero(excess > tol * radius)
    if outside.size == 0:
        return None
    if policy == "first":
        return int(outside[0])
    return int(outside[np.argmax(excess[outside])])


def _vertex_to_drop(n: Norm, points: PointSet, triple: Sequence[int]) -> Optional[int]:
    """Input index of the vertex to discard, or None when the triple is norm-acute."""
    a, b, c = (points[t] for t in triple)
    if half_plane_side(a, b, c) is Side.ON:
        return triple[collinear_middle(a, b, c)]
    local = classify_triangle(n, (a, b, c)).vertex_to_drop()
    return None if local is None else triple[local]


def _farthest_of(n: Norm, points: PointSet, triple: Sequence[int], target: int) -> int:
    best, best_d = None, -1.0
    for t in sorted(triple):
        d = n(points[target] - points[t])
        if d > best_d:
            best, best_d = t, d
    return best


def _opposite_vertex(points: PointSet, center, p5: int, p4: int, others: List[int]) -> int:
    side4 = half_plane_side(points[p5], center, points[p4], SIDE_TOL)
    if side4 is Side.ON:
        return others[0]
    for t in others:
        side_t = half_plane_side(points[p5], center, points[t], SIDE_TOL)
        if side_t is not Side.ON and side_t is not side4:
            return t
    return others[0]


def solve_eh(n: Norm, points, tol: Optional[float] = None, start: str = "diameter",
             violator: str = "max", seed: int = 0) -> SolveReport:
    """Minimal enclosing disk of ``points`` under ``n``.

    Args:
        n: a strictly convex norm.
        points: PointSet or iterable of (x, y); duplicates are dropped.
        tol: feasibility tolerance relative to the current radius
            (default NORMDISK_TOL, 1e-9).
        start: "diameter" starts from a far pair (full scan up to 64 points,
            else a 16-point sample), "first" from the first two points.
        violator: "max" takes the largest violation, "first" the lowest index.
        seed: seed of the sample used by the "diameter" start on large inputs.

    Raises:
        EmptyInput: no points.
        ConvergenceFailure: a norm-acute triple had no circumcenter.
        InternalInconsistency: the iteration exceeded the number of candidate disks.
    """
    if start not in START_POLICIES or violator not in VIOLATOR_POLICIES:
        raise ValueError(f"Unknown policy start={start!r} violator={violator!r}")
    pset = as_point_set(points)
    if len(pset) == 0:
        raise EmptyInput("Cannot enclose an empty point set")
    tol = SETTINGS["TOL"] if tol is None else tol

    if len(pset) == 1:
        disk = Disk(pset[0], 0.0, n)
        return SolveReport(disk, [pset[0]], [], Algorithm.ELZINGA_HEARN)

    arr = pset.array
    iterations: List[Iteration] = []
    limit = comb(len(pset), 2) + comb(len(pset), 3) + 1

    def record(kind, active, disk):
        iterations.append(Iteration(kind, tuple(pset[t] for t in active), disk.radius))
        logger.debug("EH step %d: %s %s radius=%.12g", len(iterations), kind.value,
                     list(active), disk.radius)
        if len(iterations) > limit:
            raise InternalInconsistency(
                f"Elzinga-Hearn exceeded {limit} steps; radii are not increasing"
            )

    pair: Optional[Tuple[int, int]] = _initial_pair(n, pset, start, seed)
    triple: Optional[Tuple[int, int, int]] = None

    while True:
        if pair is not None:
            disk = two_point_disk(n, pset[pair[0]], pset[pair[1]])
            record(StepKind.TWO_POINT, pair, disk)
            k = _violator(distances(n, arr, disk.center), disk.radius, tol, violator, pair)
            if k is None:
                break
            triple, pair = (pair[0], pair[1], k), None

        drop = _vertex_to_drop(n, pset, triple)
        if drop is not None:
            pair = tuple(t for t in triple if t != drop)
            continue

        disk = circumdisk(n, [pset[t] for t in triple])
        if disk is None:
            raise ConvergenceFailure(f"Norm-acute triple {triple} has no circumcenter")
        record(StepKind.CIRCUMDISK, triple, disk)
        p4 = _violator(distances(n, arr, disk.center), disk.radius, tol, violator, triple)
        if p4 is None:
            break
        p5 = _farthest_of(n, pset, triple, p4)
        others = sorted(t for t in triple if t != p5)
        p6 = _opposite_vertex(pset, disk.center, p5, p4, others)
        triple = (p4, p5, p6)

    if len(iterations) > 10 * len(pset):
        logger.warning("Elzinga-Hearn took %d steps for %d points (soft bound %d)",
                       len(iterations), len(pset), 10 * len(pset))
    support = support_points(n, pset, disk, max(tol, 1e-9))
    logger.info("elzinga_hearn: radius=%.12g after %d steps", disk.radius, len(iterations))
    return SolveReport(disk, support, iterations, Algorithm.ELZINGA_HEARN)
