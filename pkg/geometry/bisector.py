"""
bisector.py
─────────────────────────────────────────────────────────────────────────────
Points of bisec(p1, p2) at a prescribed distance mu, on a chosen side of the
line through p1 and p2.

In a strictly convex plane the circles S(p1, mu) and S(p2, mu) meet in exactly
one point of each closed half-plane bounded by the line <p1, p2>, and the
distance mu grows strictly along each half of the bisector. So mu is a
coordinate on each half, and "the bisector point at radius mu" is well defined.

Method: parametrize S(p1, mu) as x(t) = p1 + mu * u(t) with u the unit-circle
parametrization of the norm, restrict t to the half-arc lying in the requested
half-plane, and solve h(t) = ||x(t) - p2|| - mu = 0. h is negative where the
arc leaves the line towards p2 and positive where it meets the line on the far
side, so a coarse scan always finds a sign change; no monotonicity of h is
assumed.

Dependencies: numpy, scipy
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np
from scipy.optimize import brentq

from geometry.norm_core import TWO_PI, Norm, NormKind, Vector
from utils.errors import ConvergenceFailure, NoIntersection

SCAN_SAMPLES = 64
MAX_STEPS = 200
BATCH_STEPS = 56
BOUNDARY_BAND = 1e-12
DEFAULT_TOL = 1e-10


class BisectorSide(str, Enum):
    """PLUS is the closed half-plane to the left of the directed line p1 -> p2."""

    PLUS = "plus"
    MINUS = "minus"

    @property
    def opposite(self) -> "BisectorSide":
        return BisectorSide.MINUS if self is BisectorSide.PLUS else BisectorSide.PLUS


@dataclass(frozen=True)
class BisectorQuery:
    p1: Vector
    p2: Vector
    mu: float
    side: BisectorSide = BisectorSide.PLUS

    def __post_init__(self):
        if self.p1 == self.p2:
            raise ValueError("Bisector of a point with itself is the whole plane")


# ─────────────────────────────────────────────────────────────────────────────
# Helpers
# ─────────────────────────────────────────────────────────────────────────────

def _half_arc(n: Norm, p1: Vector, p2: Vector, side: BisectorSide) -> Tuple[float, float]:
    """Parameter interval of u(t) sweeping the requested side, from direction d to -d (or back)."""
    d = p2 - p1
    t_fwd = n.parameter_of(d.x, d.y)
    if n.kind is NormKind.P_NORM:
        t_back = t_fwd + math.pi
    else:
        t_back = n.parameter_of(-d.x, -d.y)
        while t_back <= t_fwd:
            t_back += TWO_PI
    if side is BisectorSide.PLUS:
        return t_fwd, t_back
    return t_back, t_fwd + TWO_PI


def _default_tol(mu) -> np.ndarray:
    return DEFAULT_TOL * np.maximum(1.0, mu)


# ─────────────────────────────────────────────────────────────────────────────
# Public API
# ─────────────────────────────────────────────────────────────────────────────

def bisector_point(n: Norm, q: BisectorQuery, tol: Optional[float] = None) -> Vector:
    """The unique point x of bisec(p1, p2) with ||x - p1|| = mu on ``q.side``.

    Raises:
        NoIntersection: mu is below half the distance of the pair (beyond tol).
        ConvergenceFailure: the root could not be refined within 200 steps or
            misses the residual tolerance.
    """
    p1, p2, mu = q.p1, q.p2, float(q.mu)
    half = 0.5 * n(p2 - p1)
    if tol is None:
        tol = float(_default_tol(mu))
    if mu < half - tol:
        raise NoIntersection(f"Radius {mu:.6g} is below half the pair distance {half:.6g}")
    if mu - half <= BOUNDARY_BAND * max(1.0, half):
        return p1.midpoint(p2)

    def h(t):
        ux, uy = n.unit_point(t)
        return n.value(p1.x + mu * ux - p2.x, p1.y + mu * uy - p2.y) - mu

    lo, hi = _half_arc(n, p1, p2, q.side)
    thetas = np.linspace(lo, hi, SCAN_SAMPLES + 1)
    values = np.asarray(h(thetas), dtype=float)
    signs = np.sign(values)
    changes = np.flatnonzero(signs[:-1] * signs[1:] <= 0)
    if changes.size == 0:
        raise ConvergenceFailure(f"No sign change on the half-arc for mu={mu:.6g}")

    k = int(changes[0])
    if values[k] == 0.0:
        theta = float(thetas[k])
    elif values[k + 1] == 0.0:
        theta = float(thetas[k + 1])
    else:
        try:
            theta = brentq(h, float(thetas[k]), float(thetas[k + 1]),
                           xtol=1e-15, maxiter=MAX_STEPS)
        except (RuntimeError, ValueError) as exc:
            raise ConvergenceFailure(f"Bisector root refinement failed for mu={mu:.6g}: {exc}")

    ux, uy = n.unit_point(theta)
    x = Vector(p1.x + mu * ux, p1.y + mu * uy)
    if abs(n(x - p2) - mu) > tol or abs(n(x - p1) - mu) > tol:
        raise ConvergenceFailure(f"Bisector point for mu={mu:.6g} misses the tolerance {tol:.3g}")
    return x


def bisector_points(n: Norm, p1: Vector, p2: Vector, mus, side: BisectorSide = BisectorSide.PLUS,
                    tol=None) -> np.ndarray:
    """Vectorised ``bisector_point`` for many radii on one side; returns shape (k, 2)."""
    if p1 == p2:
        raise ValueError("Bisector of a point with itself is the whole plane")
    mus = np.asarray(mus, dtype=float).reshape(-1)
    half = 0.5 * n(p2 - p1)
    tols = _default_tol(mus) if tol is None else np.broadcast_to(np.asarray(tol, dtype=float), mus.shape)
    if np.any(mus < half - tols):
        raise NoIntersection(f"Radius {mus.min():.6g} is below half the pair distance {half:.6g}")

    out = np.empty((mus.size, 2))
    on_line = mus - half <= BOUNDARY_BAND * max(1.0, half)
    mid = p1.midpoint(p2)
    out[on_line] = (mid.x, mid.y)
    rows = np.flatnonzero(~on_line)
    if rows.size == 0:
        return out

    mu = mus[rows][:, None]
    lo, hi = _half_arc(n, p1, p2, side)
    thetas = np.linspace(lo, hi, SCAN_SAMPLES + 1)
    ux, uy = n.unit_point(thetas)
    values = n.value(p1.x + mu * ux[None, :] - p2.x, p1.y + mu * uy[None, :] - p2.y) - mu
    signs = np.sign(values)
    change = signs[:, :-1] * signs[:, 1:] <= 0
    if not change.any(axis=1).all():
        raise ConvergenceFailure("No sign change on the half-arc for some radius")
    first = change.argmax(axis=1)

    mu = mu[:, 0]
    r = np.arange(rows.size)
    a, b = thetas[first], thetas[first + 1]
    fa = values[r, first]

    def h(t):
        vx, vy = n.unit_point(t)
        return n.value(p1.x + mu * vx - p2.x, p1.y + mu * vy - p2.y) - mu

    for _ in range(BATCH_STEPS):
        m = 0.5 * (a + b)
        fm = h(m)
        keep_left = np.sign(fm) == np.sign(fa)
        a = np.where(keep_left, m, a)
        fa = np.where(keep_left, fm, fa)
        b = np.where(keep_left, b, m)

    theta = 0.5 * (a + b)
    vx, vy = n.unit_point(theta)
    xs, ys = p1.x + mu * vx, p1.y + mu * vy
    residual = np.abs(n.value(xs - p2.x, ys - p2.y) - mu)
    if np.any(residual > tols[rows]):
        raise ConvergenceFailure("Batched bisector solve misses the residual tolerance")
    out[rows, 0] = xs
    out[rows, 1] = ys
    return out


def cone_coordinates(z: Vector, w: Vector, p: Vector, q: Vector) -> Tuple[float, float]:
    """(lam, nu) with w = z + lam * (z - p) + nu * (z - q)."""
    m = np.array([[z.x - p.x, z.x - q.x], [z.y - p.y, z.y - q.y]])
    lam, nu = np.linalg.solve(m, np.array([w.x - z.x, w.y - z.y]))
    return float(lam), float(nu)
