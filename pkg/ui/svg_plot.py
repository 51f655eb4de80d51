"""SVG rendering of a minimal enclosing disk: points, disk boundary, unit ball for scale."""
from __future__ import annotations

from pathlib import Path
from typing import Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from geometry.primitives import Disk, as_point_set  # noqa: E402
from solvers.report import SolveReport  # noqa: E402

BOUNDARY_SAMPLES = 256
PADDING = 0.10


def plot_limits(*arrays: np.ndarray):
    """Bounding box of all rows, padded by 10% of its extent on each side."""
    stacked = np.vstack([a for a in arrays if len(a)])
    lo, hi = stacked.min(axis=0), stacked.max(axis=0)
    span = np.where(hi - lo > 0, hi - lo, 1.0)
    pad = PADDING * span
    return (lo[0] - pad[0], hi[0] + pad[0]), (lo[1] - pad[1], hi[1] + pad[1])


def render_svg(points, report: SolveReport, path: Union[str, Path]) -> Path:
    pset = as_point_set(points)
    disk = report.disk
    circle = disk.boundary(BOUNDARY_SAMPLES)
    unit = Disk(disk.center, 1.0, disk.norm).boundary(BOUNDARY_SAMPLES)
    xlim, ylim = plot_limits(pset.array, circle, unit)

    fig, ax = plt.subplots(figsize=(6, 6))
    ax.plot(unit[:, 0], unit[:, 1], color="grey", linestyle=":", linewidth=0.8,
            label=f"unit ball ({disk.norm})")
    ax.plot(circle[:, 0], circle[:, 1], color="#2196F3", linewidth=1.4,
            label=f"radius {disk.radius:.6g}")
    ax.scatter(pset.array[:, 0], pset.array[:, 1], s=14, color="black", zorder=3)
    if report.support:
        sup = np.array([[p.x, p.y] for p in report.support])
        ax.scatter(sup[:, 0], sup[:, 1], s=36, facecolors="none", edgecolors="#FF5722",
                   zorder=4, label="support")
    ax.plot([disk.center.x], [disk.center.y], marker="+", color="#FF5722", markersize=10)

    ax.set_xlim(*xlim)
    ax.set_ylim(*ylim)
    ax.set_aspect("equal")
    ax.set_title(f"Minimal enclosing disk ({report.algorithm.value})")
    ax.legend(fontsize=8, loc="upper right")

    path = Path(path)
    fig.savefig(path, format="svg", bbox_inches="tight")
    plt.close(fig)
    return path
