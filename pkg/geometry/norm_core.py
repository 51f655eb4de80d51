"""
norm_core.py
─────────────────────────────────────────────────────────────────────────────
Strictly convex planar norms.

Two kinds are supported:
    - the l^p family, 1 < p < inf, evaluated with a scale-out guard so large
      exponents or large coordinates do not overflow;
    - custom gauges, supplied as an evaluator together with a parametrization
      of their unit circle. The library never inverts an evaluator to find
      boundary points, so both callables are required.

Both callables of a custom norm take numpy arrays (or floats) and must be
symmetric about the origin. The parametrization must sweep the unit circle
once, counterclockwise, as theta runs over [0, 2*pi).

Usage:
    from geometry.norm_core import make_pnorm, Vector

    l4 = make_pnorm(4)
    l4(Vector(0.2, 0.5))          # 0.50317...
    l4.unit_point(math.pi / 4)    # (0.8409, 0.8409)
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional, Tuple

import numpy as np
from scipy.optimize import brentq

from utils.config import SETTINGS
from utils.errors import NotStrictlyConvex

TWO_PI = 2.0 * math.pi
CONVEXITY_MARGIN = 1e-9
_AXIS_SNAP = 1e-15


# ─────────────────────────────────────────────────────────────────────────────
# Vectors
# ─────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Vector:
    """A point or displacement of the plane. Coordinates must be finite."""

    x: float
    y: float

    def __post_init__(self):
        x, y = float(self.x), float(self.y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError(f"Non-finite coordinates: ({self.x}, {self.y})")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def of(cls, value) -> "Vector":
        if isinstance(value, Vector):
            return value
        x, y = value
        return cls(x, y)

    def __add__(self, other: "Vector") -> "Vector":
        return Vector(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vector") -> "Vector":
        return Vector(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> "Vector":
        return Vector(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k: float) -> "Vector":
        return Vector(self.x / k, self.y / k)

    def __neg__(self) -> "Vector":
        return Vector(-self.x, -self.y)

    def __iter__(self):
        yield self.x
        yield self.y

    def cross(self, other: "Vector") -> float:
        return self.x * other.y - self.y * other.x

    def dot(self, other: "Vector") -> float:
        return self.x * other.x + self.y * other.y

    def euclidean(self) -> float:
        return math.hypot(self.x, self.y)

    def midpoint(self, other: "Vector") -> "Vector":
        return Vector(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))


# ─────────────────────────────────────────────────────────────────────────────
# l^p kernels
# ─────────────────────────────────────────────────────────────────────────────

def _lp_scalar(x: float, y: float, p: float) -> float:
    ax, ay = abs(x), abs(y)
    m = ax if ax > ay else ay
    if m == 0.0:
        return 0.0
    return m * ((ax / m) ** p + (ay / m) ** p) ** (1.0 / p)


def _lp_array(x: np.ndarray, y: np.ndarray, p: float) -> np.ndarray:
    ax, ay = np.abs(x), np.abs(y)
    m = np.maximum(ax, ay)
    safe = np.where(m > 0, m, 1.0)
    return m * ((ax / safe) ** p + (ay / safe) ** p) ** (1.0 / p)


def _superellipse(theta, p: float):
    """(sgn(cos t)|cos t|^(2/p), sgn(sin t)|sin t|^(2/p)), axis noise snapped to 0."""
    e = 2.0 / p
    if isinstance(theta, (float, int)):
        c, s = math.cos(theta), math.sin(theta)
        ux = 0.0 if abs(c) <= _AXIS_SNAP else math.copysign(abs(c) ** e, c)
        uy = 0.0 if abs(s) <= _AXIS_SNAP else math.copysign(abs(s) ** e, s)
        return ux, uy
    c, s = np.cos(theta), np.sin(theta)
    c = np.where(np.abs(c) <= _AXIS_SNAP, 0.0, c)
    s = np.where(np.abs(s) <= _AXIS_SNAP, 0.0, s)
    ux = np.sign(c) * np.abs(c) ** e
    uy = np.sign(s) * np.abs(s) ** e
    if np.ndim(theta) == 0:
        return float(ux), float(uy)
    return ux, uy


def _is_scalar(*values) -> bool:
    return all(isinstance(v, (float, int)) for v in values)


# ─────────────────────────────────────────────────────────────────────────────
# Norm
# ─────────────────────────────────────────────────────────────────────────────

class NormKind(str, Enum):
    P_NORM = "p_norm"
    CUSTOM = "custom"


@dataclass(frozen=True)
class Norm:
    """An immutable strictly convex norm; call it on a Vector to get its length."""

    kind: NormKind
    p: Optional[float] = None
    evaluator: Optional[Callable] = field(default=None, compare=False, repr=False)
    parametrizer: Optional[Callable] = field(default=None, compare=False, repr=False)
    label: str = ""

    def __call__(self, v: Vector) -> float:
        return self.value(v.x, v.y)

    def __str__(self) -> str:
        return self.label

    def value(self, x, y):
        """Norm of (x, y); scalars give a float, arrays give an array."""
        if self.kind is NormKind.P_NORM:
            if _is_scalar(x, y):
                return _lp_scalar(float(x), float(y), self.p)
            return _lp_array(np.asarray(x, dtype=float), np.asarray(y, dtype=float), self.p)
        out = self.evaluator(x, y)
        return float(out) if np.ndim(out) == 0 else np.asarray(out, dtype=float)

    def unit_point(self, theta):
        """Point of the unit circle at parameter theta, as an (x, y) pair."""
        if self.kind is NormKind.P_NORM:
            return _superellipse(theta, self.p)
        ux, uy = self.parametrizer(theta)
        if np.ndim(theta) == 0:
            return float(ux), float(uy)
        return np.asarray(ux, dtype=float), np.asarray(uy, dtype=float)

    def parameter_of(self, dx: float, dy: float) -> float:
        """Parameter in [0, 2*pi) whose unit-circle point is parallel to (dx, dy)."""
        if dx == 0.0 and dy == 0.0:
            raise ValueError("Direction must be non-zero")
        if self.kind is NormKind.P_NORM:
            m = max(abs(dx), abs(dy))
            half = self.p / 2.0
            a = math.copysign((abs(dx) / m) ** half, dx)
            b = math.copysign((abs(dy) / m) ** half, dy)
            return math.atan2(b, a) % TWO_PI
        return _numeric_parameter_of(self, dx, dy)

    def gradient(self, x: float, y: float) -> Tuple[float, float]:
        """Gradient of the norm at (x, y); (0, 0) at the origin."""
        n = self.value(x, y)
        if n == 0.0:
            return 0.0, 0.0
        if self.kind is NormKind.P_NORM:
            q = self.p - 1.0
            return (math.copysign((abs(x) / n) ** q, x),
                    math.copysign((abs(y) / n) ** q, y))
        h = 1e-7 * max(1.0, abs(x), abs(y))
        gx = (self.value(x + h, y) - self.value(x - h, y)) / (2 * h)
        gy = (self.value(x, y + h) - self.value(x, y - h)) / (2 * h)
        return gx, gy


def _numeric_parameter_of(norm: Norm, dx: float, dy: float, samples: int = 720) -> float:
    thetas = np.linspace(0.0, TWO_PI, samples, endpoint=False)
    ux, uy = norm.unit_point(thetas)
    target = math.atan2(dy, dx)
    diff = (np.arctan2(uy, ux) - target + math.pi) % TWO_PI - math.pi
    i = int(np.argmin(np.abs(diff)))
    step = TWO_PI / samples

    def off_axis(t):
        u = norm.unit_point(t)
        return dx * u[1] - dy * u[0]

    lo, hi = thetas[i] - step, thetas[i] + step
    f_lo, f_hi = off_axis(lo), off_axis(hi)
    if f_lo == 0.0:
        return lo % TWO_PI
    if f_lo * f_hi < 0:
        return brentq(off_axis, lo, hi, xtol=1e-15) % TWO_PI
    return float(thetas[i])


# ─────────────────────────────────────────────────────────────────────────────
# Construction and validation
# ─────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class ConvexityCheck:
    """Result of the sampling test; ``u``/``v`` name the offending pair."""

    ok: bool
    u: Optional[Vector] = None
    v: Optional[Vector] = None


def make_pnorm(p: float) -> Norm:
    p = float(p)
    if math.isnan(p):
        raise ValueError("Exponent p must be a number")
    if p <= 1.0 or math.isinf(p):
        raise NotStrictlyConvex(
            f"l^{p:g} is not strictly convex: its unit circle contains segments "
            f"(need 1 < p < inf)"
        )
    return Norm(kind=NormKind.P_NORM, p=p, label=f"l^{p:g}")


def make_custom_norm(evaluator: Callable, parametrizer: Callable,
                     label: str = "custom", sample_count: Optional[int] = None,
                     validate: bool = True) -> Norm:
    """Wrap a user gauge. Raises NotStrictlyConvex if sampling finds a flat piece."""
    if evaluator is None or parametrizer is None:
        raise ValueError("Custom norms need both an evaluator and a unit-circle parametrization")
    norm = Norm(kind=NormKind.CUSTOM, evaluator=evaluator, parametrizer=parametrizer, label=label)
    if validate:
        check = validate_strict_convexity(norm, sample_count)
        if not check.ok:
            raise NotStrictlyConvex(
                f"Norm '{label}' is not strictly convex: ||u+v|| reaches 2 for "
                f"u=({check.u.x:.6g}, {check.u.y:.6g}), v=({check.v.x:.6g}, {check.v.y:.6g})"
            )
    return norm


def norm_value(n: Norm, v: Vector) -> float:
    return n(v)


def unit_circle_point(n: Norm, theta: float) -> Vector:
    return Vector(*n.unit_point(float(theta)))


def validate_strict_convexity(n: Norm, sample_count: Optional[int] = None) -> ConvexityCheck:
    """Heuristic check, not a proof.

    Samples ``sample_count`` parameters on a uniform grid and tests every pair of
    neighbouring unit vectors: a segment on the unit circle shows up as a pair
    whose sum has norm 2.
    """
    if sample_count is None:
        sample_count = SETTINGS["CONVEXITY_SAMPLES"]
    if sample_count < 2:
        raise ValueError("sample_count must be at least 2")

    thetas = np.linspace(0.0, TWO_PI, sample_count, endpoint=False)
    ux, uy = n.unit_point(thetas)
    vx, vy = np.roll(ux, -1), np.roll(uy, -1)
    sums = np.asarray(n.value(ux + vx, uy + vy), dtype=float)

    bad = np.flatnonzero(sums >= 2.0 - CONVEXITY_MARGIN)
    if bad.size:
        i = int(bad[0])
        return ConvexityCheck(False, Vector(ux[i], uy[i]), Vector(vx[i], vy[i]))
    return ConvexityCheck(True)


_SPEC_RE = re.compile(r"^\s*p\s*:\s*(\S+)\s*$", re.IGNORECASE)


def parse_norm_spec(spec: str) -> Norm:
    """Build a norm from a CLI spec such as ``p:4`` or ``p:2.5``."""
    m = _SPEC_RE.match(spec or "")
    if not m:
        raise ValueError(f"Malformed norm spec {spec!r}; expected 'p:<value>'")
    raw = m.group(1).lower()
    if raw in ("inf", "infinity", "oo"):
        return make_pnorm(math.inf)
    try:
        p = float(raw)
    except ValueError:
        raise ValueError(f"Malformed norm spec {spec!r}; exponent is not a number")
    return make_pnorm(p)
