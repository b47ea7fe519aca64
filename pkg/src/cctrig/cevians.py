"""Euler's concurrency relation for cevians, in all three geometries.

A cevian joins a vertex to a point of the opposite side. When the three
cevians of a triangle pass through one interior point O, the ratios

    r_X = f(dist(X, O)) / f(dist(O, foot_X))

satisfy the product-sum identity  r_a r_b r_c = r_a + r_b + r_c + 2,
where f is the identity on the plane and the tangent on the sphere
(tan of arc length over k). The analogous statement with f = tanh in
hyperbolic geometry is not a theorem; the evaluator for it is provided
as a measured conjecture and its residual is reported, never asserted
to vanish.

Feet are constructed, not tested: given O, each foot is the closed-form
intersection of the vertex-through-O geodesic with the opposite side
(line intersection on the plane, cross products of great-circle normals
on the sphere, and the signature-adjusted analogue on the hyperboloid).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curvature import Curvature, GeometryKind
from .errors import DegenerateError, DomainError, InfeasibleError
from .models import (Model, ModelPoint, geodesic_point, model_distance,
                     tangent_toward)
from .sampling import sample_stream

#: Relative floor below which O is considered to lie on a side or vertex.
DEGENERACY_TOL = 1e-12
#: Allowed violation of "foot lies between the side's endpoints",
#: relative to the side length.
BETWEENNESS_TOL = 1e-9

_MODEL_FOR_KIND = {
    GeometryKind.EUCLIDEAN: Model.PLANE,
    GeometryKind.SPHERICAL: Model.SPHERE,
    GeometryKind.HYPERBOLIC: Model.HYPERBOLOID,
}


@dataclass(frozen=True)
class CevianConfig:
    """Three concurrent cevians: vertices, the common interior point,
    the feet on the opposite sides, and the geometry's section ratios
    (plain on the plane, tan-of-arc on the sphere, tanh-of-arc on the
    hyperboloid)."""

    geometry: Curvature
    A: ModelPoint
    B: ModelPoint
    C: ModelPoint
    O: ModelPoint
    foot_a: ModelPoint
    foot_b: ModelPoint
    foot_c: ModelPoint
    ratio_a: float
    ratio_b: float
    ratio_c: float

    def ratios(self) -> tuple[float, float, float]:
        return (self.ratio_a, self.ratio_b, self.ratio_c)


def _euler_form(ratios: tuple[float, float, float]) -> float:
    ra, rb, rc = ratios
    return ra * rb * rc - (ra + rb + rc + 2.0)


def _cross(u, v) -> tuple[float, float, float]:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def _triple(u, v, w) -> float:
    return math.fsum((u[0] * (v[1] * w[2] - v[2] * w[1]),
                      -u[1] * (v[0] * w[2] - v[2] * w[0]),
                      u[2] * (v[0] * w[1] - v[1] * w[0])))


def _section_ratio(geometry: Curvature, vertex_arc: float, foot_arc: float) -> float:
    k = geometry.k
    if geometry.kind is GeometryKind.EUCLIDEAN:
        return vertex_arc / foot_arc
    if geometry.kind is GeometryKind.SPHERICAL:
        half_pi_k = 0.5 * math.pi * k
        if vertex_arc >= half_pi_k or foot_arc >= half_pi_k:
            raise DomainError("cevian arc reaches the tangent pole (pi/2) k")
        return math.tan(vertex_arc / k) / math.tan(foot_arc / k)
    return math.tanh(vertex_arc / k) / math.tanh(foot_arc / k)


def _check_points(geometry: Curvature, points: tuple[ModelPoint, ...]) -> None:
    expected = _MODEL_FOR_KIND[geometry.kind]
    dim = 2 if expected is Model.PLANE else 3
    for p in points:
        if p.model is not expected:
            raise DomainError(f"cevian points must live on the {expected.value} model")
        if len(p.coords) != dim:
            raise DomainError(f"cevian {expected.value} points need {dim} components")
        if expected is not Model.PLANE and p.k != geometry.k:
            raise DomainError("point radius k disagrees with the geometry")


def _plane_foot(vertex, through, seg_start, seg_end) -> tuple[float, float]:
    """Intersection of line vertex->through with segment seg_start->seg_end,
    returned as coordinates; the segment parameter is betweenness-checked
    by the caller via distances."""
    dx1 = (through[0] - vertex[0], through[1] - vertex[1])
    dx2 = (seg_end[0] - seg_start[0], seg_end[1] - seg_start[1])
    det = dx1[0] * dx2[1] - dx1[1] * dx2[0]
    scale = math.hypot(*dx1) * math.hypot(*dx2)
    if abs(det) <= DEGENERACY_TOL * scale:
        raise InfeasibleError("cevian is parallel to the opposite side")
    rhs = (seg_start[0] - vertex[0], seg_start[1] - vertex[1])
    u = (dx1[0] * rhs[1] - dx1[1] * rhs[0]) / -det
    return (seg_start[0] + u * dx2[0], seg_start[1] + u * dx2[1])


def _curved_foot(geometry: Curvature, vertex, through, seg_start, seg_end) -> ModelPoint:
    """Intersection of two geodesic planes through the model center.

    Both the sphere and the hyperboloid realize geodesics as central
    plane sections; with signature (+,-,-) the hyperboloid plane of p, q
    has Minkowski normal J(p x q), and lowering indices turns every side
    and intersection test into the same Euclidean cross/triple products
    used on the sphere. The direction common to both planes is the
    double cross product below; sheet (or hemisphere-arc) selection
    happens in the caller.
    """
    n1 = _cross(vertex, through)
    n2 = _cross(seg_start, seg_end)
    u = _cross(n1, n2)
    k = geometry.k
    if geometry.kind is GeometryKind.SPHERICAL:
        norm = math.sqrt(math.fsum(c * c for c in u))
        if norm <= DEGENERACY_TOL * k * k * k:
            raise InfeasibleError("cevian geodesic coincides with the opposite side")
        return ModelPoint(Model.SPHERE, tuple(c * (k / norm) for c in u), k)
    q = u[0] * u[0] - u[1] * u[1] - u[2] * u[2]
    if q <= 0.0:
        raise InfeasibleError("cevian and opposite side meet outside the hyperbolic plane")
    r = k / math.sqrt(q)
    if u[0] < 0.0:
        r = -r
    return ModelPoint(Model.HYPERBOLOID, tuple(c * r for c in u), k)


def _betweenness(geometry: Curvature, foot: ModelPoint, start: ModelPoint,
                 end: ModelPoint, side_len: float) -> None:
    gap = (model_distance(start, foot) + model_distance(foot, end)) - side_len
    if abs(gap) > BETWEENNESS_TOL * (side_len + geometry.k):
        raise InfeasibleError("cevian foot falls outside the opposite side")


def cevian_feet(geometry: Curvature, A: ModelPoint, B: ModelPoint,
                C: ModelPoint, O: ModelPoint) -> CevianConfig:
    """Drop the three cevians through O and return the full figure.

    O must be strictly interior (every vertex sees O on the inner side
    of the opposite edge's geodesic); on the sphere this simultaneously
    enforces containment in an open hemisphere. O on a side or at a
    vertex is degenerate rather than infeasible: the cevians exist but
    their ratios do not.
    """
    _check_points(geometry, (A, B, C, O))
    k = geometry.k
    if geometry.kind is GeometryKind.EUCLIDEAN:
        ab = (B.coords[0] - A.coords[0], B.coords[1] - A.coords[1])
        ac = (C.coords[0] - A.coords[0], C.coords[1] - A.coords[1])
        total = ab[0] * ac[1] - ab[1] * ac[0]
        ao = (O.coords[0] - A.coords[0], O.coords[1] - A.coords[1])
        w_c = ab[0] * ao[1] - ab[1] * ao[0]
        w_b = ao[0] * ac[1] - ao[1] * ac[0]
        w_a = total - w_b - w_c
        weights = (w_a, w_b, w_c)
        area_scale = math.hypot(*ab) * math.hypot(*ac)
    else:
        total = _triple(A.coords, B.coords, C.coords) / (k * k * k)
        weights = (_triple(O.coords, B.coords, C.coords) / (k * k * k),
                   _triple(A.coords, O.coords, C.coords) / (k * k * k),
                   _triple(A.coords, B.coords, O.coords) / (k * k * k))
        area_scale = 1.0
    if total == 0.0 or abs(total) <= DEGENERACY_TOL * area_scale:
        raise DegenerateError("triangle vertices are collinear")
    if any(w / total <= DEGENERACY_TOL for w in weights):
        raise DegenerateError("O must be strictly interior to the triangle")

    feet = []
    for vertex, start, end in ((A, B, C), (B, C, A), (C, A, B)):
        if geometry.kind is GeometryKind.EUCLIDEAN:
            foot = ModelPoint.plane(
                *_plane_foot(vertex.coords, O.coords, start.coords, end.coords))
        else:
            foot = _curved_foot(geometry, vertex.coords, O.coords,
                                start.coords, end.coords)
            if geometry.kind is GeometryKind.SPHERICAL:
                # of the two antipodal intersections, keep the one on the arc
                flipped = ModelPoint(Model.SPHERE,
                                     tuple(-c for c in foot.coords), k)
                if (model_distance(start, foot) + model_distance(foot, end)
                        > model_distance(start, flipped)
                        + model_distance(flipped, end)):
                    foot = flipped
        side_len = model_distance(start, end)
        _betweenness(geometry, foot, start, end, side_len)
        feet.append(foot)

    ratios = []
    for vertex, foot in zip((A, B, C), feet):
        vertex_arc = model_distance(vertex, O)
        foot_arc = model_distance(O, foot)
        if foot_arc <= DEGENERACY_TOL * k or vertex_arc <= DEGENERACY_TOL * k:
            raise DegenerateError("O coincides with a vertex or a foot")
        ratios.append(_section_ratio(geometry, vertex_arc, foot_arc))
    return CevianConfig(geometry, A, B, C, O, feet[0], feet[1], feet[2],
                        ratios[0], ratios[1], ratios[2])


def euclidean_cevian_residual(cfg: CevianConfig) -> float:
    """Product-sum residual r_a r_b r_c - (r_a + r_b + r_c + 2) for plain
    distance ratios; zero for concurrent Euclidean cevians."""
    if cfg.geometry.kind is not GeometryKind.EUCLIDEAN:
        raise DomainError("euclidean_cevian_residual needs a Euclidean configuration")
    return _euler_form(cfg.ratios())


def spherical_cevian_residual(cfg: CevianConfig) -> float:
    """Product-sum residual of the tan-of-arc ratios; zero for concurrent
    spherical cevians. Arcs at or beyond (pi/2) k are rejected when the
    configuration is built, so the stored ratios are finite and positive."""
    if cfg.geometry.kind is not GeometryKind.SPHERICAL:
        raise DomainError("spherical_cevian_residual needs a spherical configuration")
    return _euler_form(cfg.ratios())


def hyperbolic_cevian_conjecture_residual(cfg: CevianConfig) -> float:
    """Product-sum residual of the tanh-of-arc ratios.

    This mirrors the spherical identity with tan replaced by tanh, but
    no such theorem is claimed: the value is measured and reported.
    Finiteness is the only assertion; it does vanish quadratically as
    the configuration shrinks, since tanh and plain ratios then agree.
    """
    if cfg.geometry.kind is not GeometryKind.HYPERBOLIC:
        raise DomainError("hyperbolic_cevian_conjecture_residual needs a "
                          "hyperbolic configuration")
    value = _euler_form(cfg.ratios())
    if not math.isfinite(value):
        raise DomainError("conjecture residual is not finite")
    return value


def cevian_residual(cfg: CevianConfig) -> float:
    """The geometry-matching residual of the configuration."""
    if cfg.geometry.kind is GeometryKind.EUCLIDEAN:
        return euclidean_cevian_residual(cfg)
    if cfg.geometry.kind is GeometryKind.SPHERICAL:
        return spherical_cevian_residual(cfg)
    return hyperbolic_cevian_conjecture_residual(cfg)


def perturbed_residual(cfg: CevianConfig, delta: float) -> float:
    """Euler residual after sliding foot_a along side BC by delta of the
    side length (toward C), keeping O and the other feet fixed.

    The displaced foot breaks concurrency, and the relation must notice:
    the returned residual grows linearly in delta. Ratio r_a is
    re-measured as f(dist(A, O)) / f(dist(O, displaced foot)).
    """
    if not (math.isfinite(delta) and delta != 0.0):
        raise DomainError("perturbation delta must be finite and nonzero")
    side_len = model_distance(cfg.B, cfg.C)
    step = delta * side_len
    direction = tangent_toward(cfg.foot_a, cfg.C)
    moved = geodesic_point(cfg.foot_a, direction, step)
    _betweenness(cfg.geometry, moved, cfg.B, cfg.C, side_len)
    vertex_arc = model_distance(cfg.A, cfg.O)
    foot_arc = model_distance(cfg.O, moved)
    ratio_a = _section_ratio(cfg.geometry, vertex_arc, foot_arc)
    return _euler_form((ratio_a, cfg.ratio_b, cfg.ratio_c))


def sample_cevian_config(geometry: Curvature, seed: int, index: int = 0, *,
                         min_angle: float = 0.3, max_side: float = 2.0,
                         attempts: int = 128) -> CevianConfig:
    """Draw a well-conditioned triangle with a strictly interior O.

    Vertices are drawn directly on the model around its reference point;
    O is a convex model combination of the vertices with weights bounded
    away from the edges, so every configuration is concurrent by
    construction and non-degenerate. Deterministic per (seed, index).
    """
    g = sample_stream(seed, index)
    k = geometry.k
    kind = geometry.kind
    for _ in range(attempts):
        radii = g.uniform(0.15 * max_side, 0.5 * max_side, size=3)
        theta0 = g.uniform(0.0, 2.0 * math.pi)
        thirds = np.array([0.0, 2.0 * math.pi / 3.0, 4.0 * math.pi / 3.0])
        angles = theta0 + thirds + g.uniform(-0.5, 0.5, size=3)
        points = []
        for r, th in zip(radii, angles):
            x, y = r * math.cos(th), r * math.sin(th)
            if kind is GeometryKind.EUCLIDEAN:
                points.append(ModelPoint.plane(x, y))
            elif kind is GeometryKind.SPHERICAL:
                rho = math.hypot(x, y)
                s = math.sin(rho / k) * k / rho
                points.append(ModelPoint(Model.SPHERE,
                                         (k * math.cos(rho / k), s * x, s * y), k))
            else:
                rho = math.hypot(x, y)
                s = math.sinh(rho / k) * k / rho
                points.append(ModelPoint(Model.HYPERBOLOID,
                                         (k * math.cosh(rho / k), s * x, s * y), k))
        wts = g.uniform(0.15, 1.0, size=3)
        wts = wts / wts.sum()
        if kind is GeometryKind.EUCLIDEAN:
            ox = sum(w * p.coords[0] for w, p in zip(wts, points))
            oy = sum(w * p.coords[1] for w, p in zip(wts, points))
            interior = ModelPoint.plane(ox, oy)
        else:
            mix = [math.fsum(w * p.coords[i] for w, p in zip(wts, points))
                   for i in range(3)]
            if kind is GeometryKind.SPHERICAL:
                n = math.sqrt(math.fsum(c * c for c in mix))
            else:
                n = math.sqrt(mix[0] * mix[0] - mix[1] * mix[1] - mix[2] * mix[2])
            model = Model.SPHERE if kind is GeometryKind.SPHERICAL else Model.HYPERBOLOID
            interior = ModelPoint(model, tuple(c * (k / n) for c in mix), k)
        a_pt, b_pt, c_pt = points
        try:
            sides = (model_distance(b_pt, c_pt), model_distance(c_pt, a_pt),
                     model_distance(a_pt, b_pt))
            if max(sides) > max_side * k or min(sides) < 1e-3 * k:
                continue
            cfg = cevian_feet(geometry, a_pt, b_pt, c_pt, interior)
        except (DegenerateError, InfeasibleError, DomainError):
            continue
        return cfg
    raise DomainError(f"no acceptable cevian configuration after {attempts} attempts")
