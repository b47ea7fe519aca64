"""Triangles on a horosphere, realized as a horizontal plane of the
upper half-space model.

The plane z = h carries the induced metric (k/h) |dx|, a flat metric:
intrinsic distances are the chart distances scaled by k/h and intrinsic
angles equal chart angles (the model is conformal). Horospherical
triangles therefore satisfy Euclidean trigonometry exactly, which is
what the verification suite checks, alongside an ambient polyline
cross-check that the scaled chart length really is the induced length.
"""

from __future__ import annotations

import math

from .curvature import Curvature
from .errors import DegenerateError, DomainError
from .models import ModelPoint, model_angle, model_distance
from .triangle import TriangleData


def _chart_point(p) -> ModelPoint:
    x, y = p
    return ModelPoint.plane(float(x), float(y))


def horosphere_triangle(height: float, p1, p2, p3, k: float = 1.0) -> TriangleData:
    """Triangle with vertices at chart points p1, p2, p3 (pairs) on the
    horosphere z = height. Angle slots follow vertex order: A at p1,
    B at p2, C at p3."""
    if not (math.isfinite(height) and height > 0.0):
        raise DomainError(f"horosphere height must be positive, got {height}")
    q1, q2, q3 = _chart_point(p1), _chart_point(p2), _chart_point(p3)
    scale = k / height
    a = scale * model_distance(q2, q3)
    b = scale * model_distance(q3, q1)
    c = scale * model_distance(q1, q2)
    if min(a, b, c) == 0.0:
        raise DegenerateError("coincident vertices on the horosphere")
    A = model_angle(q1, q2, q3)
    B = model_angle(q2, q3, q1)
    C = model_angle(q3, q1, q2)
    if min(A, B, C) == 0.0 or max(A, B, C) >= math.pi:
        raise DegenerateError("collinear vertices on the horosphere")
    return TriangleData(a, b, c, A, B, C, Curvature.euclidean()).validate()


def intrinsic_distance(height: float, p, q, k: float = 1.0) -> float:
    """Distance inside the horosphere between two of its points."""
    if not (math.isfinite(height) and height > 0.0):
        raise DomainError(f"horosphere height must be positive, got {height}")
    return (k / height) * model_distance(_chart_point(p), _chart_point(q))


def ambient_polyline_length(height: float, p, q, k: float = 1.0, *,
                            base_segments: int = 1024) -> float:
    """Length of the horosphere geodesic from p to q measured with the
    ambient hyperbolic metric: the straight chart segment is subdivided,
    consecutive points are joined by ambient distances, and three
    refinement levels are Richardson-extrapolated. Converges to
    intrinsic_distance(height, p, q, k); the suite checks that."""
    if not (math.isfinite(height) and height > 0.0):
        raise DomainError(f"horosphere height must be positive, got {height}")
    px, py = float(p[0]), float(p[1])
    dx, dy = float(q[0]) - px, float(q[1]) - py

    def polyline(n_seg: int) -> float:
        hops = []
        prev = (px, py)
        for i in range(1, n_seg + 1):
            t = i / n_seg
            cur = (px + t * dx, py + t * dy)
            step = math.hypot(cur[0] - prev[0], cur[1] - prev[1])
            hops.append(2.0 * k * math.asinh(0.5 * step / height))
            prev = cur
        return math.fsum(hops)

    l1 = polyline(base_segments)
    l2 = polyline(2 * base_segments)
    l3 = polyline(4 * base_segments)
    r12 = (4.0 * l2 - l1) / 3.0
    r23 = (4.0 * l3 - l2) / 3.0
    return (16.0 * r23 - r12) / 15.0
