"""
oracle.py
─────────────────────────────────────────────────────────────────────────────
Reference solvers used to check the iterative ones.

solve_enumeration
    The optimal disk is either a two-point disk or the circumdisk of at least
    three points of P, so the smallest feasible candidate among all pair disks
    and triple circumdisks is the answer. Under a strictly convex norm only
    extreme points of co(P) can lie on the optimal circle, so by default the
    candidates come from the hull vertices alone.

solve_minimax_descent
    A numerical second opinion: minimizes f(x) = max_p ||x - p|| from the
    centroid with step halving along the negative minimum-norm element of the
    convex hull of the gradients of the nearly-farthest points.

Dependencies: numpy, scipy
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import nnls

from geometry.norm_core import Norm, Vector
from geometry.primitives import (Disk, PointSet, as_point_set, convex_hull, distances,
                                 support_points, two_point_disk)
from geometry.triangle import circumcenters
from solvers.report import Algorithm, Iteration, SolveReport, StepKind
from utils.config import SETTINGS
from utils.errors import EmptyInput, InternalInconsistency, SizeLimit
from utils.logging import logger

DESCENT_STEPS = 100_000
SIMPLEX_WEIGHT = 1e3


class CandidateKind(str, Enum):
    PAIR = "pair"
    TRIPLE = "triple"


@dataclass(frozen=True)
class CandidateDisk:
    kind: CandidateKind
    indices: Tuple[int, ...]
    disk: Disk
    feasible: bool

    @property
    def order_key(self):
        return self.disk.radius, 0 if self.kind is CandidateKind.PAIR else 1, self.indices


def _check_size(pset: PointSet, max_points: Optional[int]) -> None:
    if len(pset) == 0:
        raise EmptyInput("Cannot enclose an empty point set")
    limit = SETTINGS["MAX_ORACLE_POINTS"] if max_points is None else max_points
    if len(pset) > limit:
        raise SizeLimit(f"Enumeration is limited to {limit} points, got {len(pset)}")


def _candidate_indices(pset: PointSet, extreme_only: bool) -> List[int]:
    if not extreme_only:
        return list(range(len(pset)))
    slot = {p: k for k, p in enumerate(pset)}
    return sorted(slot[v] for v in convex_hull(pset))


def _feasible(n: Norm, arr: np.ndarray, disk: Disk, tol: float) -> bool:
    return bool(distances(n, arr, disk.center).max() <= disk.radius + tol * max(1.0, disk.radius))


def pair_candidates(n: Norm, pset: PointSet, indices: Sequence[int], tol: float) -> List[CandidateDisk]:
    arr = pset.array
    out = []
    for i, j in combinations(indices, 2):
        disk = two_point_disk(n, pset[i], pset[j])
        out.append(CandidateDisk(CandidateKind.PAIR, (i, j), disk, _feasible(n, arr, disk, tol)))
    return out


def triple_candidates(n: Norm, pset: PointSet, indices: Sequence[int], tol: float,
                      workers: int = 1) -> Tuple[List[CandidateDisk], int]:
    """Circumdisk candidates of every triple, plus the number of triples without one."""
    arr = pset.array
    triples = list(combinations(indices, 3))
    centers = circumcenters(n, [[pset[k] for k in t] for t in triples], workers)
    out, skipped = [], 0
    for t, x in zip(triples, centers):
        if x is None:
            skipped += 1
            continue
        disk = Disk(x, n(x - pset[t[0]]), n)
        out.append(CandidateDisk(CandidateKind.TRIPLE, t, disk, _feasible(n, arr, disk, tol)))
    return out, skipped


def enumerate_candidates(n: Norm, points, tol: Optional[float] = None, extreme_only: bool = True,
                         workers: int = 1) -> List[CandidateDisk]:
    """Every pair disk and triple circumdisk, sorted by (radius, kind, indices)."""
    pset = as_point_set(points)
    tol = SETTINGS["TOL"] if tol is None else tol
    indices = _candidate_indices(pset, extreme_only)
    triples, _ = triple_candidates(n, pset, indices, tol, workers)
    return sorted(pair_candidates(n, pset, indices, tol) + triples, key=lambda c: c.order_key)


def solve_enumeration(n: Norm, points, tol: Optional[float] = None, extreme_only: bool = True,
                      max_points: Optional[int] = None, workers: int = 1) -> SolveReport:
    """Smallest feasible candidate disk.

    A feasible pair disk is optimal outright (every enclosing disk contains that
    pair, so its radius is at least half their distance); triples are only
    enumerated when no pair disk encloses P.

    Raises:
        EmptyInput: no points.
        SizeLimit: more than NORMDISK_MAX_ORACLE_POINTS (400) points.
        InternalInconsistency: no candidate encloses P.
    """
    pset = as_point_set(points)
    _check_size(pset, max_points)
    tol = SETTINGS["TOL"] if tol is None else tol
    if len(pset) == 1:
        return SolveReport(Disk(pset[0], 0.0, n), [pset[0]], [], Algorithm.ENUMERATION)

    indices = _candidate_indices(pset, extreme_only)
    notes: List[str] = []
    feasible = [c for c in pair_candidates(n, pset, indices, tol) if c.feasible]
    if not feasible:
        triples, skipped = triple_candidates(n, pset, indices, tol, workers)
        feasible = [c for c in triples if c.feasible]
        if skipped:
            notes.append(f"{skipped} triple(s) without a circumcenter were skipped")
    if not feasible:
        raise InternalInconsistency("No pair or triple candidate encloses the point set")

    best = min(feasible, key=lambda c: c.order_key)
    kind = StepKind.TWO_POINT if best.kind is CandidateKind.PAIR else StepKind.CIRCUMDISK
    iterations = [Iteration(kind, tuple(pset[k] for k in best.indices), best.disk.radius)]
    support = support_points(n, pset, best.disk, max(tol, 1e-9))
    logger.info("enumeration: radius=%.12g from %s %s", best.disk.radius, best.kind.value,
                list(best.indices))
    return SolveReport(best.disk, support, iterations, Algorithm.ENUMERATION, notes=notes)


# ─────────────────────────────────────────────────────────────────────────────
# Minimax descent
# ─────────────────────────────────────────────────────────────────────────────

def _min_norm_combination(grads: np.ndarray) -> np.ndarray:
    """Minimum Euclidean-norm point of the convex hull of the rows of ``grads``."""
    if len(grads) == 1:
        return grads[0]
    k = len(grads)
    a = np.vstack([grads.T, SIMPLEX_WEIGHT * np.ones((1, k))])
    b = np.concatenate([np.zeros(grads.shape[1]), [SIMPLEX_WEIGHT]])
    w, _ = nnls(a, b)
    total = w.sum()
    if total <= 0.0:
        return grads[0]
    return (w / total) @ grads


def solve_minimax_descent(n: Norm, points, tol: Optional[float] = None,
                          max_steps: int = DESCENT_STEPS) -> Disk:
    """Approximate minimal enclosing disk by direct minimization of max_p ||x - p||.

    Stops when the step falls below ``tol`` (absolute, default NORMDISK_TOL).
    """
    pset = as_point_set(points)
    if len(pset) == 0:
        raise EmptyInput("Cannot enclose an empty point set")
    tol = SETTINGS["TOL"] if tol is None else tol
    arr = pset.array
    x = Vector(*arr.mean(axis=0))
    d = distances(n, arr, x)
    f = float(d.max())
    step = 0.5 * max(float(distances(n, arr, p).max()) for p in pset)

    steps = 0
    while step >= tol and steps < max_steps:
        steps += 1
        active = np.flatnonzero(d >= f - step)
        grads = np.array([n.gradient(x.x - arr[k, 0], x.y - arr[k, 1]) for k in active])
        g = _min_norm_combination(grads)
        length = n.value(float(g[0]), float(g[1]))
        if length <= 1e-15:
            step *= 0.5
            continue
        trial = Vector(x.x - step * g[0] / length, x.y - step * g[1] / length)
        d_trial = distances(n, arr, trial)
        f_trial = float(d_trial.max())
        if f_trial < f:
            x, d, f = trial, d_trial, f_trial
        else:
            step *= 0.5

    if steps >= max_steps:
        logger.warning("Minimax descent stopped after %d steps with step %.3g", steps, step)
    logger.debug("descent: radius=%.12g after %d steps", f, steps)
    return Disk(x, f, n)


def solve_descent(n: Norm, points, tol: Optional[float] = None) -> SolveReport:
    """``solve_minimax_descent`` wrapped as a report; support uses a 1e-6 band."""
    pset = as_point_set(points)
    disk = solve_minimax_descent(n, pset, tol)
    support = support_points(n, pset, disk, 1e-6)
    logger.info("descent: radius=%.12g", disk.radius)
    return SolveReport(disk, support, [], Algorithm.DESCENT)
