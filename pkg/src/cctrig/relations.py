"""Residual evaluators for the triangle relation systems.

Each evaluator moves everything in an equation to one side and returns
the signed difference, one entry per relation, in the equation's own
units. A mathematically exact triangle gives zeros; triangles measured
off the concrete models give values at the rounding floor, and that
floor is what the verification suites pin down.

The hyperbolic system is the parallelism-angle form of the spherical
one: with sin PI(p) = 1/cosh(p/k), cos PI(p) = tanh(p/k) and
tan PI(p) = 1/sinh(p/k), the four relations below are

    sin A tan PI(a)                 = sin B tan PI(b)
    1 - cos PI(b) cos PI(c) cos A   = sin PI(b) sin PI(c) / sin PI(a)
    cos A + cos B cos C             = sin B sin C / sin PI(a)
    cot A sin C sin PI(b) + cos C   = cos PI(b) / cos PI(a)

The code evaluates the hyperbolic functions directly; a test pins that
against the literal parallelism-angle route at the 1e-12 level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curvature import GeometryKind
from .errors import DomainError
from .triangle import TriangleData

# |C - pi/2| allowed when a relation requires a right angle
RIGHT_ANGLE_TOL = 1e-9


@dataclass(frozen=True)
class RelationResidual:
    relation_id: str
    residual: float


def _check_kind(t: TriangleData, kind: GeometryKind, what: str) -> None:
    if t.geometry.kind is not kind:
        raise DomainError(f"{what} needs {kind.value} geometry, got {t.geometry.kind.value}")


def spherical_residuals(t: TriangleData) -> list[RelationResidual]:
    """Residuals of the general spherical system:

        sin a sin B = sin b sin A
        cos b       = cos a cos c + sin a sin c cos B
        cot a sin b = cot A sin C + cos b cos C
        cos a sin B sin C = cos B cos C + cos A
    """
    _check_kind(t, GeometryKind.SPHERICAL, "spherical_residuals")
    t.validate()
    k = t.geometry.k
    a, b, c = t.a / k, t.b / k, t.c / k
    sinA, cosA = math.sin(t.A), math.cos(t.A)
    sinB, cosB = math.sin(t.B), math.cos(t.B)
    sinC, cosC = math.sin(t.C), math.cos(t.C)
    return [
        RelationResidual("sph_sine_law", math.sin(a) * sinB - math.sin(b) * sinA),
        RelationResidual("sph_side_cosine",
                         (math.cos(b) - math.cos(a) * math.cos(c))
                         - math.sin(a) * math.sin(c) * cosB),
        RelationResidual("sph_cotangent",
                         math.cos(a) / math.sin(a) * math.sin(b)
                         - (cosA / sinA * sinC + math.cos(b) * cosC)),
        RelationResidual("sph_angle_cosine",
                         math.cos(a) * sinB * sinC - (cosB * cosC + cosA)),
    ]


def spherical_right_residuals(t: TriangleData,
                              right_angle_tol: float = RIGHT_ANGLE_TOL) -> list[RelationResidual]:
    """Residuals of the right-triangle specialization (right angle at C):

        sin a = sin A sin c,   cos B = cos b sin A,   cos c = cos a cos b.
    """
    _check_kind(t, GeometryKind.SPHERICAL, "spherical_right_residuals")
    t.validate()
    if abs(t.C - math.pi / 2.0) > right_angle_tol:
        raise DomainError(f"right angle at C required, got C = {t.C}")
    k = t.geometry.k
    a, b, c = t.a / k, t.b / k, t.c / k
    sinA = math.sin(t.A)
    return [
        RelationResidual("sphr_sine", sinA * math.sin(c) - math.sin(a)),
        RelationResidual("sphr_cos_angle", math.cos(b) * sinA - math.cos(t.B)),
        RelationResidual("sphr_pythagoras", math.cos(a) * math.cos(b) - math.cos(c)),
    ]


def hyperbolic_residuals(t: TriangleData) -> list[RelationResidual]:
    """Residuals of the hyperbolic system in the module docstring.

    Zero sides are rejected up front: the cotangent relation divides by
    cos PI(a) = tanh(a/k) and tan PI(p) = 1/sinh(p/k) diverges, so the
    system is undefined there rather than infinite.
    """
    _check_kind(t, GeometryKind.HYPERBOLIC, "hyperbolic_residuals")
    if min(t.a, t.b, t.c) <= 0.0:
        raise DomainError("hyperbolic relations need positive sides: "
                          "tan PI and 1/cos PI diverge at a zero side")
    t.validate()
    k = t.geometry.k
    a, b, c = t.a / k, t.b / k, t.c / k
    sinA, cosA = math.sin(t.A), math.cos(t.A)
    sinB, cosB = math.sin(t.B), math.cos(t.B)
    sinC, cosC = math.sin(t.C), math.cos(t.C)
    return [
        RelationResidual("hyp_sine_law", sinA / math.sinh(a) - sinB / math.sinh(b)),
        RelationResidual("hyp_side_cosine",
                         (1.0 - math.tanh(b) * math.tanh(c) * cosA)
                         - math.cosh(a) / (math.cosh(b) * math.cosh(c))),
        RelationResidual("hyp_angle_cosine",
                         (cosA + cosB * cosC) - sinB * sinC * math.cosh(a)),
        RelationResidual("hyp_cotangent",
                         (cosA / sinA * sinC / math.cosh(b) + cosC)
                         - math.tanh(b) / math.tanh(a)),
    ]


def euclidean_residuals(t: TriangleData) -> list[RelationResidual]:
    """Residuals of the flat system: the sine law, the law of cosines,
    and the angle sum."""
    _check_kind(t, GeometryKind.EUCLIDEAN, "euclidean_residuals")
    t.validate()
    a, b, c = t.sides()
    return [
        RelationResidual("euc_sine_law", a * math.sin(t.B) - b * math.sin(t.A)),
        RelationResidual("euc_side_cosine",
                         a * a - (b * b + c * c - 2.0 * b * c * math.cos(t.A))),
        RelationResidual("euc_angle_sum", (t.A + t.B + t.C) - math.pi),
    ]
