from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any, Dict, List, Union

from geometry.norm_core import Vector
from geometry.primitives import PointSet
from solvers.report import SolveReport
from utils.errors import PointParseError

"""
point_parser.py

Reading point files and writing solver results.

Point files hold one point per line: two decimal numbers separated by a comma
and/or whitespace. Blank lines and lines starting with '#' are skipped.

    # triangle
    -0.5, -1
    1 -1
    0.25,1

Results are written either as a one-line summary (plain) or as flat
``key=value`` lines (structured) with the frozen keys

    algorithm, center_x, center_y, radius, support_count,
    support_<i> (as "x,y", i from 0), iterations

Floats in the structured form are written with repr() so parse_structured
recovers them bit-for-bit.
"""

_SPLIT = re.compile(r"[,\s]+")
STRUCTURED_KEYS = ("algorithm", "center_x", "center_y", "radius", "support_count", "iterations")


def parse_points(text: str, deduplicate: bool = True) -> PointSet:
    """Parse point-file text. Raises PointParseError naming the offending line."""
    points: List[Vector] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f for f in _SPLIT.split(line) if f]
        if len(fields) != 2:
            raise PointParseError(f"expected two numbers, got {len(fields)} field(s): {raw!r}", line_no)
        try:
            points.append(Vector(float(fields[0]), float(fields[1])))
        except ValueError:
            raise PointParseError(f"not a finite pair of numbers: {raw!r}", line_no)
    return PointSet.from_points(points, deduplicate=deduplicate)


class PointFileParser:
    """Point file on disk; ``parse()`` returns the deduplicated PointSet."""

    def __init__(self, filepath: Union[str, Path]):
        self.path = Path(filepath)
        self.content = self.path.read_text(encoding="utf-8")

    def parse(self, deduplicate: bool = True) -> PointSet:
        return parse_points(self.content, deduplicate)

    def summary(self) -> Dict[str, int]:
        lines = self.content.splitlines()
        comments = sum(1 for ln in lines if ln.strip().startswith("#"))
        blank = sum(1 for ln in lines if not ln.strip())
        return {"lines": len(lines), "comments": comments, "blank": blank,
                "points": len(lines) - comments - blank}


def read_points(path: Union[str, Path], deduplicate: bool = True) -> PointSet:
    return PointFileParser(path).parse(deduplicate)


def write_points(points, path: Union[str, Path]) -> None:
    lines = [f"{p.x!r}, {p.y!r}" for p in points]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


# ─────────────────────────────────────────────────────────────────────────────
# Result documents
# ─────────────────────────────────────────────────────────────────────────────

def _num(v: float) -> str:
    text = f"{v:.12g}"
    return "0" if text == "-0" else text


def format_plain(report: SolveReport) -> str:
    lines = [f"center {_num(report.center.x)} {_num(report.center.y)} radius {_num(report.radius)}"]
    lines += [f"support {_num(p.x)} {_num(p.y)}" for p in report.support]
    lines.append(f"iterations {len(report.iterations)}")
    return "\n".join(lines)


def format_structured(report: SolveReport) -> str:
    lines = [
        f"algorithm={report.algorithm.value}",
        f"center_x={report.center.x!r}",
        f"center_y={report.center.y!r}",
        f"radius={report.radius!r}",
        f"support_count={len(report.support)}",
    ]
    lines += [f"support_{i}={p.x!r},{p.y!r}" for i, p in enumerate(report.support)]
    lines.append(f"iterations={len(report.iterations)}")
    return "\n".join(lines)


def parse_structured(text: str) -> Dict[str, Any]:
    """Inverse of ``format_structured``; support points come back as a list of Vectors."""
    fields: Dict[str, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        key, sep, value = raw.partition("=")
        if not sep:
            raise PointParseError(f"expected key=value: {raw!r}", line_no)
        fields[key.strip()] = value.strip()

    missing = [k for k in STRUCTURED_KEYS if k not in fields]
    if missing:
        raise PointParseError(f"missing keys {missing}")
    count = int(fields["support_count"])
    support = []
    for i in range(count):
        x, y = fields[f"support_{i}"].split(",")
        support.append(Vector(float(x), float(y)))
    return {
        "algorithm": fields["algorithm"],
        "center_x": float(fields["center_x"]),
        "center_y": float(fields["center_y"]),
        "radius": float(fields["radius"]),
        "support_count": count,
        "support": support,
        "iterations": int(fields["iterations"]),
    }


def diagram_to_dict(diagram) -> Dict[str, Any]:
    """JSON-ready view of a FarthestVoronoiDiagram."""
    return {
        "sites": [[s.x, s.y] for s in diagram.sites],
        "vertices": [{"location": [v.location.x, v.location.y],
                      "defining": list(v.defining),
                      "distance": v.distance} for v in diagram.vertices],
        "edges": [{"pair": list(e.pair), "endpoints": list(e.endpoints)} for e in diagram.edges],
    }


def write_diagram(diagram, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(diagram_to_dict(diagram), indent=2), encoding="utf-8")
