"""QC rules for minimal enclosing disk results.

Each check returns a list of human-readable issues; an empty list means the
check passed. ``check_report`` runs all of them. The checks restate the
optimality certificate of a minimal enclosing disk: the disk encloses P, at
least two points lie on its circle, and the center lies in the convex hull
of those points.
"""
from __future__ import annotations

from itertools import combinations
from typing import List, Optional, Sequence

import numpy as np
import pandas as pd

from geometry.norm_core import Norm, Vector
from geometry.primitives import as_point_set, distances, point_in_convex_hull
from solvers.report import SolveReport

HULL_TOL = 1e-7
MIDPOINT_TOL = 1e-8
MONOTONE_SLACK = 1e-12


def semicircle_condition(center: Vector, support: Sequence[Vector], tol: float = HULL_TOL) -> bool:
    """True if no open half-plane through ``center`` contains every support point."""
    return point_in_convex_hull(center, list(support), tol)


def check_feasibility(n: Norm, points, report: SolveReport, tol: float) -> List[str]:
    pset = as_point_set(points)
    if len(pset) == 0:
        return []
    d = distances(n, pset.array, report.center)
    slack = tol * max(1.0, report.radius)
    outside = np.flatnonzero(d > report.radius + slack)
    if outside.size:
        worst = int(outside[np.argmax(d[outside])])
        return [f"{outside.size} point(s) outside the disk; worst {tuple(pset[worst])} "
                f"at {d[worst]:.12g} > {report.radius:.12g}"]
    return []


def check_support(report: SolveReport, n_points: int) -> List[str]:
    issues = []
    if n_points >= 2 and len(report.support) < 2:
        issues.append(f"Support has {len(report.support)} point(s); at least 2 are required")
    if len(report.support) >= 2 and not semicircle_condition(report.center, report.support):
        issues.append("Center is not in the convex hull of the support points")
    if len(report.support) == 2:
        mid = report.support[0].midpoint(report.support[1])
        if (mid - report.center).euclidean() > MIDPOINT_TOL * max(1.0, report.radius):
            issues.append(f"Two-point support but center {tuple(report.center)} is not "
                          f"the midpoint {tuple(mid)}")
    return issues


def check_monotone_radii(report: SolveReport) -> List[str]:
    radii = report.radii
    return [f"Radius decreased at step {k + 1}: {a:.12g} -> {b:.12g}"
            for k, (a, b) in enumerate(zip(radii[:-1], radii[1:])) if b - a <= -MONOTONE_SLACK]


def check_report(n: Norm, points, report: SolveReport, tol: Optional[float] = None) -> List[str]:
    """Run every certificate check on a solver result."""
    tol = 1e-9 if tol is None else tol
    pset = as_point_set(points)
    issues = []
    issues += check_feasibility(n, pset, report, tol)
    issues += check_support(report, len(pset))
    issues += check_monotone_radii(report)
    return issues


def compare_reports(reports: Sequence[SolveReport]) -> pd.DataFrame:
    """Pairwise discrepancy table: relative radius error and absolute center error."""
    rows = []
    for a, b in combinations(reports, 2):
        rows.append({
            "first": a.algorithm.value,
            "second": b.algorithm.value,
            "radius_rel_error": abs(a.radius - b.radius) / max(1.0, abs(a.radius), abs(b.radius)),
            "center_abs_error": max(abs(a.center.x - b.center.x), abs(a.center.y - b.center.y)),
        })
    return pd.DataFrame(rows, columns=["first", "second", "radius_rel_error", "center_abs_error"])


def summary_table(reports: Sequence[SolveReport]) -> pd.DataFrame:
    return pd.DataFrame([{
        "algorithm": r.algorithm.value,
        "center_x": r.center.x,
        "center_y": r.center.y,
        "radius": r.radius,
        "support": len(r.support),
        "iterations": len(r.iterations),
    } for r in reports])
