"""Signed curvature carried as an explicit parameter.

The length scale k is a free positive constant. Every formula in the
kernel consumes sides in units of k, so rescaling (k, lengths) to
(lam*k, lam*lengths) leaves all angles unchanged; a verification suite
checks that invariance rather than assuming it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError


class GeometryKind(enum.Enum):
    SPHERICAL = "spherical"
    EUCLIDEAN = "euclidean"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class Curvature:
    """Geometry kind plus the length scale k (ignored when Euclidean)."""

    kind: GeometryKind
    k: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.k) and self.k > 0.0):
            raise DomainError(f"curvature scale must be positive and finite, got {self.k}")

    @property
    def K(self) -> float:
        """Sectional curvature: +1/k^2, 0, or -1/k^2."""
        if self.kind is GeometryKind.SPHERICAL:
            return 1.0 / (self.k * self.k)
        if self.kind is GeometryKind.HYPERBOLIC:
            return -1.0 / (self.k * self.k)
        return 0.0

    @staticmethod
    def spherical(k: float = 1.0) -> Curvature:
        return Curvature(GeometryKind.SPHERICAL, k)

    @staticmethod
    def euclidean() -> Curvature:
        return Curvature(GeometryKind.EUCLIDEAN, 1.0)

    @staticmethod
    def hyperbolic(k: float = 1.0) -> Curvature:
        return Curvature(GeometryKind.HYPERBOLIC, k)
