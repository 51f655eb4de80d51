"""Result types shared by all minimal-enclosing-disk solvers."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from geometry.norm_core import Vector
from geometry.primitives import Disk


class Algorithm(str, Enum):
    ELZINGA_HEARN = "elzinga_hearn"
    SHAMOS_HOEY = "shamos_hoey"
    ENUMERATION = "enumeration"
    DESCENT = "descent"


class StepKind(str, Enum):
    TWO_POINT = "two_point"
    CIRCUMDISK = "circumdisk"


@dataclass(frozen=True)
class Iteration:
    kind: StepKind
    active: Tuple[Vector, ...]
    radius: float


@dataclass
class SolveReport:
    """Optimal disk plus how it was reached.

    ``support`` lists the input points on the optimal circle; ``notes`` carries
    best-effort flags such as triples skipped for lack of a circumcenter.
    """

    disk: Disk
    support: List[Vector]
    iterations: List[Iteration]
    algorithm: Algorithm
    notes: List[str] = field(default_factory=list)
    diagram: Optional[Any] = None

    @property
    def center(self) -> Vector:
        return self.disk.center

    @property
    def radius(self) -> float:
        return self.disk.radius

    @property
    def radii(self) -> List[float]:
        return [it.radius for it in self.iterations]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "algorithm": self.algorithm.value,
            "center": (self.center.x, self.center.y),
            "radius": self.radius,
            "support": [(p.x, p.y) for p in self.support],
            "iterations": len(self.iterations),
            "notes": list(self.notes),
        }
