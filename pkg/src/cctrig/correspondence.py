"""Cross-geometry correspondences.

Three numerical experiments connect the spherical, Euclidean, and
hyperbolic triangle systems:

* imaginary-side substitution: evaluating the general spherical
  relations at sides i*a/k, i*b/k, i*c/k (with the angles kept real)
  must annihilate hyperbolic triangles, since sin(ix) = i sinh x and
  cos(ix) = cosh x turn each spherical relation into its hyperbolic
  counterpart. At the residual level the two systems agree up to a
  modest constant: a triangle's hyperbolic residuals stay below a
  tolerance tau exactly when its substitution residuals stay below
  C*tau with C <= 10. Measured over the triangle sampler's population
  (aggregate worst case, sides up to 3k), C is about 2.1; the bound 10
  leaves headroom because the floor-level rounding noise of individual
  nearly-exact samples makes per-sample ratios meaningless;
* the Euclidean limit: a fixed shape scaled by epsilon has angle excess
  O(epsilon^2), so curvature becomes invisible at small scales;
* curvature rescaling: angles depend only on sides measured in units of
  k, so (k, sides) -> (lambda k, lambda sides) changes nothing.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .curvature import Curvature, GeometryKind
from .errors import DomainError
from .solvers import solve_from_sss
from .triangle import TriangleData, angle_excess

#: The general spherical relations that admit the imaginary-side
#: substitution, keyed by the ids used by spherical_residuals.
SUBSTITUTION_RELATIONS = ("sph_sine_law", "sph_side_cosine",
                          "sph_cotangent", "sph_angle_cosine")


@dataclass(frozen=True)
class ComplexResidual:
    """A spherical relation evaluated at imaginary sides: the residual
    is a complex number whose real and imaginary parts must both vanish
    on a true hyperbolic triangle."""

    relation_id: str
    residual: complex

    def __post_init__(self) -> None:
        if not (math.isfinite(self.residual.real) and math.isfinite(self.residual.imag)):
            raise DomainError(f"non-finite complex residual for {self.relation_id}")

    @property
    def magnitude(self) -> float:
        return abs(self.residual)


@dataclass(frozen=True)
class LimitFit:
    """Log-log regression of angle excess against the scale factor.

    ``residual_norms`` holds |angle excess| per scale and drives the
    slope fit; ``lawcos_norms`` holds the flat law-of-cosines residual
    of the same triangles, a second witness that the geometry flattens.
    """

    scales: tuple[float, ...]
    residual_norms: tuple[float, ...]
    lawcos_norms: tuple[float, ...]
    slope: float

    def __post_init__(self) -> None:
        if any(s2 >= s1 for s1, s2 in zip(self.scales, self.scales[1:])):
            raise DomainError("scales must be strictly decreasing")
        if any(r < 0.0 for r in self.residual_norms):
            raise DomainError("residual norms must be nonnegative")


@dataclass(frozen=True)
class RescalingReport:
    """Angle deviations of solve_from_sss under (k, sides) ->
    (lambda k, lambda sides)."""

    scale: float
    deviations: tuple[float, float, float]
    max_deviation: float
    tolerance: float
    ok: bool


def imaginary_substitution_residual(relation_id: str, t: TriangleData) -> ComplexResidual:
    """Evaluate one general spherical relation at sides i*a/k, i*b/k,
    i*c/k with the triangle's real angles.

    The expressions mirror spherical_residuals term for term, with
    complex trigonometry supplying sin(ix) = i sinh x and
    cos(ix) = cosh x. On a hyperbolic triangle every relation collapses
    to a hyperbolic identity (for example the side-cosine relation
    becomes cos b = cosh a cosh c - sinh a sinh c cos B with an overall
    sign), so the residual sits at the rounding floor of the cosh-sized
    terms.
    """
    if relation_id not in SUBSTITUTION_RELATIONS:
        raise DomainError(
            f"unknown substitution relation {relation_id!r}; "
            f"expected one of {', '.join(SUBSTITUTION_RELATIONS)}")
    if t.geometry.kind is not GeometryKind.HYPERBOLIC:
        raise DomainError("imaginary-side substitution applies to hyperbolic triangles")
    t.validate()
    k = t.geometry.k
    za, zb, zc = (1j * (t.a / k), 1j * (t.b / k), 1j * (t.c / k))
    sinA, cosA = math.sin(t.A), math.cos(t.A)
    sinB, cosB = math.sin(t.B), math.cos(t.B)
    sinC, cosC = math.sin(t.C), math.cos(t.C)
    if relation_id == "sph_sine_law":
        value = cmath.sin(za) * sinB - cmath.sin(zb) * sinA
    elif relation_id == "sph_side_cosine":
        value = ((cmath.cos(zb) - cmath.cos(za) * cmath.cos(zc))
                 - cmath.sin(za) * cmath.sin(zc) * cosB)
    elif relation_id == "sph_cotangent":
        value = (cmath.cos(za) / cmath.sin(za) * cmath.sin(zb)
                 - (cosA / sinA * sinC + cmath.cos(zb) * cosC))
    else:  # sph_angle_cosine
        value = cmath.cos(za) * sinB * sinC - (cosB * cosC + cosA)
    return ComplexResidual(relation_id, value)


def imaginary_substitution_residuals(t: TriangleData) -> list[ComplexResidual]:
    """All four substitution residuals of a hyperbolic triangle."""
    return [imaginary_substitution_residual(rid, t) for rid in SUBSTITUTION_RELATIONS]


def euclidean_limit_slope(shape: TriangleData, scales) -> LimitFit:
    """Scale a fixed shape by each epsilon and fit |angle excess| vs
    epsilon on log-log axes.

    The shape contributes only its side proportions (normalized so the
    longest side is 1, in units of k); at each scale the triangle is
    rebuilt from sides alone via solve_from_sss in the shape's own
    curved geometry. Excess of a shape of diameter epsilon is
    K * area = O(epsilon^2), so the fitted slope must be 2.
    """
    if shape.geometry.kind is GeometryKind.EUCLIDEAN:
        raise DomainError("the flat-limit experiment needs a curved geometry")
    shape.validate()
    eps = sorted((float(s) for s in scales), reverse=True)
    if len(eps) < 2:
        raise DomainError("need at least two scales")
    if any(not (0.0 < s <= 1.0) or not math.isfinite(s) for s in eps):
        raise DomainError("scales must lie in (0, 1]")
    if any(s2 >= s1 for s1, s2 in zip(eps, eps[1:])):
        raise DomainError("scales must be distinct")
    if eps[0] / eps[-1] < 100.0:
        raise DomainError("scales must span at least two decades")
    geometry = shape.geometry
    k = geometry.k
    longest = max(shape.sides())
    if longest <= 0.0:
        raise DomainError("degenerate shape: nonpositive side")
    na, nb, nc = (s / longest for s in shape.sides())
    excesses: list[float] = []
    lawcos: list[float] = []
    for s in eps:
        t = solve_from_sss(geometry, s * na * k, s * nb * k, s * nc * k)
        excesses.append(abs(angle_excess(t)))
        a, b, c = t.sides()
        lawcos.append(abs(a * a - (b * b + c * c - 2.0 * b * c * math.cos(t.A))))
    slope = float(np.polyfit(np.log(eps), np.log(excesses), 1)[0])
    return LimitFit(tuple(eps), tuple(excesses), tuple(lawcos), slope)


def rescaling_check(t: TriangleData, scale: float, *,
                    tolerance: float = 1e-12) -> RescalingReport:
    """Verify solve_from_sss angles are invariant under
    (k, sides) -> (scale*k, scale*sides)."""
    if not (math.isfinite(scale) and scale > 0.0):
        raise DomainError(f"rescaling factor must be positive and finite, got {scale}")
    if t.geometry.kind is GeometryKind.EUCLIDEAN:
        raise DomainError("rescaling compares curvature radii; flat geometry has none")
    t.validate()
    geometry = t.geometry
    base = solve_from_sss(geometry, t.a, t.b, t.c)
    scaled_geometry = Curvature(geometry.kind, scale * geometry.k)
    scaled = solve_from_sss(scaled_geometry, scale * t.a, scale * t.b, scale * t.c)
    deviations = (abs(scaled.A - base.A), abs(scaled.B - base.B), abs(scaled.C - base.C))
    worst = max(deviations)
    return RescalingReport(scale, deviations, worst, tolerance, worst <= tolerance)
