"""Triangle data shared by the relation evaluators and solvers."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curvature import Curvature, GeometryKind
from .errors import DomainError


@dataclass(frozen=True)
class TriangleData:
    """Sides a, b, c, opposite angles A, B, C, and the ambient geometry.

    Side a faces angle A, and so on. Lengths share units with the
    curvature scale k; angles are radians.
    """

    a: float
    b: float
    c: float
    A: float
    B: float
    C: float
    geometry: Curvature

    def sides(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)

    def angles(self) -> tuple[float, float, float]:
        return (self.A, self.B, self.C)

    def validate(self) -> TriangleData:
        """Check the invariants, returning self so calls can chain."""
        for s in self.sides():
            if not (math.isfinite(s) and s > 0.0):
                raise DomainError(f"sides must be positive and finite, got {self.sides()}")
        for ang in self.angles():
            if not (0.0 < ang < math.pi):
                raise DomainError(f"angles must lie strictly inside (0, pi), got {self.angles()}")
        a, b, c = self.sides()
        if b + c <= a or c + a <= b or a + b <= c:
            raise DomainError(f"triangle inequality fails for sides {self.sides()}")
        if self.geometry.kind is GeometryKind.SPHERICAL:
            bound = math.pi * self.geometry.k
            if max(a, b, c) >= bound:
                raise DomainError(f"spherical sides must stay below pi*k = {bound}")
            if a + b + c >= 2.0 * bound:
                raise DomainError("spherical perimeter must stay below 2*pi*k")
        return self


def angle_excess(t: TriangleData) -> float:
    """A + B + C - pi: positive spherical, zero flat, negative hyperbolic."""
    return (t.A + t.B + t.C) - math.pi
