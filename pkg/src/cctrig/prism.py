"""The prism figure over a right hyperbolic triangle.

Take a right triangle ABC (right angle at C) in a hyperbolic plane
inside hyperbolic 3-space, and erect through each vertex the ray
perpendicular to that plane, all on the same side. The three rays share
one ideal point, so the figure closes up at infinity: the horosphere
centered there through A cuts the prism in a triangle obeying flat
trigonometry, and the unit direction sphere at B cuts it in a spherical
triangle k m n whose sides and angles are parallelism angles of the
base triangle's sides. Reading those measurements back through the
inverse parallelism function reconstructs the base triangle, and the
reconstruction is what the verification suite scores against the
hyperbolic relation system.

Frames are chosen so every measured tangent is exact: the horospherical
triangle is measured in the frame centered at A (where the shared ideal
point is (1, 0, 0, 1) and the horosphere is the plane z = k of the
half-space chart), and the spherical triangle in the frame centered at
B (where the three unit tangents have closed-form components).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curvature import GeometryKind
from .errors import DomainError
from .geodesic_sphere import GeodesicSphere, geodesic_sphere_triangle
from .horosphere import horosphere_triangle
from .models import (Model, ModelPoint, Ray, asymptotic_ray, hyperboloid_to_half_space,
                     ideal_direction)
from .parallelism import inverse_parallelism
from .relations import RelationResidual, hyperbolic_residuals
from .triangle import TriangleData

RIGHT_ANGLE_TOL = 1e-9


@dataclass(frozen=True)
class PrismFigure:
    """The assembled figure: base triangle, its vertices and axis rays in
    the A-centered frame, the shared ideal point, and the two induced
    triangles.

    Spherical slots follow (k, n, m): the angle in slot C is the dihedral
    at m, which the construction forces to be right; slot-b and slot-c
    sides are the parallelism angles of base sides c and a; the slot-B
    angle is the parallelism angle of base side b. Horospherical slots
    follow the base vertices (A, B, C); the slot-C angle is right.
    """

    base: TriangleData
    vertices: tuple[ModelPoint, ModelPoint, ModelPoint]
    axes: tuple[Ray, Ray, Ray]
    ideal_point: tuple[float, ...]
    ideal_alignment_defect: float
    spherical: TriangleData
    horospherical: TriangleData

    @property
    def right_angle_defect_at_m(self) -> float:
        return abs(self.spherical.C - 0.5 * math.pi)

    @property
    def horospherical_right_angle_defect(self) -> float:
        return abs(self.horospherical.C - 0.5 * math.pi)


def build_prism(base: TriangleData) -> PrismFigure:
    """Erect the prism over a right hyperbolic triangle (right angle at C)."""
    if base.geometry.kind is not GeometryKind.HYPERBOLIC:
        raise DomainError("the prism construction needs a hyperbolic base triangle")
    base.validate()
    if abs(base.C - 0.5 * math.pi) > RIGHT_ANGLE_TOL:
        raise DomainError(f"right angle at C required, got C = {base.C}")
    k = base.geometry.k
    au, bu, cu = base.a / k, base.b / k, base.c / k

    # frame centered at A: base plane is x3 = 0, axis direction is e3
    pa = ModelPoint(Model.HYPERBOLOID, (k, 0.0, 0.0, 0.0), k)
    pb = ModelPoint(Model.HYPERBOLOID,
                    (k * math.cosh(cu), k * math.sinh(cu), 0.0, 0.0), k)
    pc = ModelPoint(Model.HYPERBOLOID,
                    (k * math.cosh(bu), k * math.sinh(bu) * math.cos(base.A),
                     k * math.sinh(bu) * math.sin(base.A), 0.0), k)
    axis_a = Ray.at(pa, (0.0, 0.0, 0.0, 1.0))
    axis_b = asymptotic_ray(pb, axis_a)
    axis_c = asymptotic_ray(pc, axis_a)
    omega = ideal_direction(axis_a)
    defect = max(abs(w - o)
                 for axis in (axis_a, axis_b, axis_c)
                 for w, o in zip(ideal_direction(axis), omega))

    # the horosphere through A centered at the ideal point is the plane
    # z = k of the half-space chart; the axes are its vertical lines, so
    # the prism cuts it in the chart shadows of the vertices
    charts = []
    for p in (pa, pb, pc):
        hs = hyperboloid_to_half_space(p)
        charts.append((hs.coords[0], hs.coords[1]))
    horospherical = horosphere_triangle(k, charts[0], charts[1], charts[2], k)

    # frame centered at B: measure the direction-sphere triangle k m n
    # (k up the axis, m toward A, n toward C) with exact unit tangents
    origin = ModelPoint(Model.HYPERBOLOID, (k, 0.0, 0.0, 0.0), k)
    a_in_b = ModelPoint(Model.HYPERBOLOID,
                        (k * math.cosh(cu), k * math.sinh(cu), 0.0, 0.0), k)
    axis_a_in_b = Ray.at(a_in_b, (0.0, 0.0, 0.0, 1.0))
    ray_k = asymptotic_ray(origin, axis_a_in_b)
    ray_m = Ray.at(origin, (0.0, 1.0, 0.0, 0.0))
    ray_n = Ray.at(origin, (0.0, math.cos(base.B), math.sin(base.B), 0.0))
    sphere = GeodesicSphere(origin, k)
    spherical = geodesic_sphere_triangle(sphere, (ray_k, ray_n, ray_m))

    return PrismFigure(base, (pa, pb, pc), (axis_a, axis_b, axis_c),
                       omega, defect, spherical, horospherical)


def replay_residuals(figure: PrismFigure) -> list[RelationResidual]:
    """Reconstruct the base triangle purely from the induced spherical and
    horospherical measurements and score it against the hyperbolic
    relation system. Nothing from the base triangle enters except the
    exactness of the right angle at C."""
    curv = figure.base.geometry
    sph = figure.spherical
    hor = figure.horospherical
    recovered = TriangleData(
        a=inverse_parallelism(sph.c, curv),
        b=inverse_parallelism(sph.B, curv),
        c=inverse_parallelism(sph.b, curv),
        A=0.5 * math.pi - hor.B,
        B=sph.a,
        C=0.5 * math.pi,
        geometry=curv,
    )
    return [RelationResidual("replay_" + r.relation_id, r.residual)
            for r in hyperbolic_residuals(recovered)]
