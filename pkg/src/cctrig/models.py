"""Concrete constant-curvature models used as measurement oracles.

Four models: the round sphere of radius k in E3, the hyperboloid sheet
in Minkowski space (3 or 4 components, for plane and space hyperbolic
geometry), the upper half-space with its conformal metric, and the flat
plane. Conventions:

  * Minkowski product <x, y> = x0 y0 - x1 y1 - ... (signature +--...).
    Hyperboloid points satisfy <x, x> = k^2 with x0 > 0; unit tangents
    satisfy <v, v> = -1 and <v, point> = 0.
  * Sphere points are 3-vectors with |x| = k.
  * Half-space points are (x, y, z) with z > 0 and metric (k/z) |dx|.
  * Plane points are (x, y).

Distances use chord-based forms (asinh/atan2 of a difference vector)
and angles use 2 atan2(|u - v|, |u + v|) on unit tangents; both keep
full relative accuracy where acos/acosh of inner products lose half the
digits.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError


class Model(enum.Enum):
    SPHERE = "sphere"
    HYPERBOLOID = "hyperboloid"
    HALF_SPACE = "half_space"
    PLANE = "plane"


def minkowski_dot(u, v) -> float:
    s = u[0] * v[0]
    for i in range(1, len(u)):
        s -= u[i] * v[i]
    return s


def _edot(u, v) -> float:
    return math.fsum(ui * vi for ui, vi in zip(u, v))


def _enorm(u) -> float:
    return math.sqrt(_edot(u, u))


def _cross3(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def _sub(u, v):
    return tuple(ui - vi for ui, vi in zip(u, v))


def _add(u, v):
    return tuple(ui + vi for ui, vi in zip(u, v))


def _scale(u, t):
    return tuple(ui * t for ui in u)


def _spacelike_norm(w) -> float:
    """Length of a spacelike Minkowski vector, clipped at 0 for rounding."""
    return math.sqrt(max(-minkowski_dot(w, w), 0.0))


@dataclass(frozen=True)
class ModelPoint:
    """A point of one concrete model.

    The named constructors renormalize onto the constraint surface and
    are the right entry for external coordinates. Direct instantiation
    skips that and is reserved for coordinates synthesized on-surface:
    far hyperboloid points have |<x, x>| dwarfed by the rounding of the
    squares themselves, so renormalizing them would inject error rather
    than remove it.
    """

    model: Model
    coords: tuple[float, ...]
    k: float = 1.0

    @staticmethod
    def sphere(coords, k: float = 1.0) -> ModelPoint:
        if len(coords) != 3:
            raise DomainError("sphere points take 3 components")
        r = _enorm(coords)
        if r == 0.0 or not math.isfinite(r):
            raise DomainError(f"cannot project {coords} onto the sphere")
        return ModelPoint(Model.SPHERE, _scale(tuple(coords), k / r), k)

    @staticmethod
    def hyperboloid(coords, k: float = 1.0) -> ModelPoint:
        if len(coords) not in (3, 4):
            raise DomainError("hyperboloid points take 3 or 4 components")
        q = minkowski_dot(coords, coords)
        if not (q > 0.0 and math.isfinite(q)):
            raise DomainError(f"{coords} is not timelike; cannot normalize onto the sheet")
        if coords[0] <= 0.0:
            raise DomainError(f"{coords} sits on the lower sheet")
        return ModelPoint(Model.HYPERBOLOID, _scale(tuple(coords), k / math.sqrt(q)), k)

    @staticmethod
    def half_space(x: float, y: float, z: float, k: float = 1.0) -> ModelPoint:
        if not (z > 0.0 and math.isfinite(z)):
            raise DomainError(f"half-space height must be positive, got {z}")
        return ModelPoint(Model.HALF_SPACE, (x, y, z), k)

    @staticmethod
    def plane(x: float, y: float) -> ModelPoint:
        return ModelPoint(Model.PLANE, (x, y), 1.0)

    def constraint_defect(self) -> float:
        """Relative defect of the model constraint; 0 for unconstrained models."""
        if self.model is Model.SPHERE:
            return abs(_enorm(self.coords) / self.k - 1.0)
        if self.model is Model.HYPERBOLOID:
            return abs(minkowski_dot(self.coords, self.coords) / (self.k * self.k) - 1.0)
        return 0.0


def _same_chart(p: ModelPoint, q: ModelPoint, what: str) -> None:
    if p.model is not q.model or p.k != q.k or len(p.coords) != len(q.coords):
        raise DomainError(f"{what} needs points of the same model and scale")


def model_distance(p: ModelPoint, q: ModelPoint) -> float:
    """Geodesic distance between two points of the same model."""
    _same_chart(p, q, "model_distance")
    k = p.k
    if p.model is Model.PLANE:
        return math.hypot(p.coords[0] - q.coords[0], p.coords[1] - q.coords[1])
    if p.model is Model.SPHERE:
        return k * math.atan2(_enorm(_cross3(p.coords, q.coords)), _edot(p.coords, q.coords))
    if p.model is Model.HYPERBOLOID:
        # chordal form: exact cancellation happens in the subtraction,
        # after which the Minkowski square of the difference is benign
        m = _spacelike_norm(_sub(p.coords, q.coords))
        return 2.0 * k * math.asinh(0.5 * m / k)
    dx = _sub(p.coords, q.coords)
    chord = _enorm(dx)
    return 2.0 * k * math.asinh(0.5 * chord / math.sqrt(p.coords[2] * q.coords[2]))


def tangent_toward(p: ModelPoint, q: ModelPoint) -> tuple[float, ...]:
    """Unit initial tangent at p of the geodesic running to q."""
    _same_chart(p, q, "tangent_toward")
    k = p.k
    if p.model is Model.PLANE:
        w = _sub(q.coords, p.coords)
        n = _enorm(w)
        if n == 0.0:
            raise DomainError("tangent_toward needs distinct points")
        return _scale(w, 1.0 / n)
    if p.model is Model.SPHERE:
        w = _sub(q.coords, _scale(p.coords, _edot(p.coords, q.coords) / (k * k)))
        n = _enorm(w)
        if n == 0.0:
            raise DomainError("tangent_toward is undefined for equal or antipodal points")
        return _scale(w, 1.0 / n)
    if p.model is Model.HYPERBOLOID:
        w = _sub(q.coords, _scale(p.coords, minkowski_dot(p.coords, q.coords) / (k * k)))
        n = _spacelike_norm(w)
        if n == 0.0:
            raise DomainError("tangent_toward needs distinct points")
        return _scale(w, 1.0 / n)
    return _half_space_tangent(p, q)


def _half_space_tangent(p: ModelPoint, q: ModelPoint) -> tuple[float, float, float]:
    # geodesics are vertical lines or circles centered on the boundary;
    # reduce to the vertical plane through both points
    px, py, pz = p.coords
    qx, qy, qz = q.coords
    hx, hy = qx - px, qy - py
    h = math.hypot(hx, hy)
    if h == 0.0:
        if qz == pz:
            raise DomainError("tangent_toward needs distinct points")
        s = 1.0 if qz > pz else -1.0
        return (0.0, 0.0, s * pz / p.k)
    ux, uy = hx / h, hy / h
    uc = 0.5 * (h * h + qz * qz - pz * pz) / h  # circle center along the u-axis
    tu, tz = pz, uc  # perpendicular to the radius (-uc, pz)
    if tu * h + tz * (qz - pz) < 0.0:
        tu, tz = -tu, -tz
    n = math.hypot(tu, tz)
    # hyperbolic-unit tangent has Euclidean length z/k in this chart
    s = pz / (p.k * n)
    return (tu * s * ux, tu * s * uy, tz * s)


def tangent_angle(p: ModelPoint, u, v) -> float:
    """Angle between two tangent vectors at p, in the model metric."""
    if p.model in (Model.PLANE, Model.SPHERE, Model.HALF_SPACE):
        # Euclidean tangent metric (the half-space chart is conformal)
        nu, nv = _enorm(u), _enorm(v)
        if nu == 0.0 or nv == 0.0:
            raise DomainError("tangent_angle needs nonzero tangents")
        uu = _scale(u, 1.0 / nu)
        vv = _scale(v, 1.0 / nv)
        return 2.0 * math.atan2(_enorm(_sub(uu, vv)), _enorm(_add(uu, vv)))
    nu, nv = _spacelike_norm(u), _spacelike_norm(v)
    if nu == 0.0 or nv == 0.0:
        raise DomainError("tangent_angle needs nonzero spacelike tangents")
    uu = _scale(u, 1.0 / nu)
    vv = _scale(v, 1.0 / nv)
    return 2.0 * math.atan2(_spacelike_norm(_sub(uu, vv)), _spacelike_norm(_add(uu, vv)))


def model_angle(at: ModelPoint, toward1: ModelPoint, toward2: ModelPoint) -> float:
    """Vertex angle at `at` between the geodesics to the two other points."""
    return tangent_angle(at, tangent_toward(at, toward1), tangent_toward(at, toward2))


def geodesic_point(p: ModelPoint, direction, t: float) -> ModelPoint:
    """Point at arc length t along the geodesic from p with unit tangent
    `direction`. Not offered for the half-space chart; map through the
    hyperboloid instead."""
    k = p.k
    if p.model is Model.PLANE:
        return ModelPoint.plane(*_add(p.coords, _scale(direction, t)))
    if p.model is Model.SPHERE:
        c, s = math.cos(t / k), math.sin(t / k)
        return ModelPoint.sphere(_add(_scale(p.coords, c), _scale(direction, k * s)), k)
    if p.model is Model.HYPERBOLOID:
        c, s = math.cosh(t / k), math.sinh(t / k)
        # on-sheet by construction; renormalizing would add noise, not remove it
        return ModelPoint(Model.HYPERBOLOID, _add(_scale(p.coords, c), _scale(direction, k * s)), k)
    raise DomainError("geodesic flow is not offered in the half-space chart")


@dataclass(frozen=True)
class Ray:
    """A geodesic ray: base point plus unit tangent (model metric)."""

    base: ModelPoint
    direction: tuple[float, ...]

    @staticmethod
    def at(base: ModelPoint, direction) -> Ray:
        """Build a ray, projecting the direction into the tangent space at
        the base and normalizing it."""
        k = base.k
        if base.model is Model.PLANE:
            n = _enorm(direction)
            if n == 0.0:
                raise DomainError("ray direction must be nonzero")
            return Ray(base, _scale(tuple(direction), 1.0 / n))
        if base.model is Model.SPHERE:
            w = _sub(direction, _scale(base.coords, _edot(base.coords, direction) / (k * k)))
            n = _enorm(w)
            if n == 0.0:
                raise DomainError("ray direction is radial; no tangent component")
            return Ray(base, _scale(w, 1.0 / n))
        if base.model is Model.HYPERBOLOID:
            w = _sub(direction,
                     _scale(base.coords, minkowski_dot(base.coords, direction) / (k * k)))
            n = _spacelike_norm(w)
            if n == 0.0:
                raise DomainError("ray direction has no spacelike tangent component")
            return Ray(base, _scale(w, 1.0 / n))
        n = _enorm(direction)
        if n == 0.0:
            raise DomainError("ray direction must be nonzero")
        return Ray(base, _scale(tuple(direction), base.coords[2] / (k * n)))

    def point_at(self, t: float) -> ModelPoint:
        return geodesic_point(self.base, self.direction, t)


def ideal_direction(ray: Ray) -> tuple[float, ...]:
    """The ideal endpoint of a hyperboloid ray, as the lightlike vector
    base/k + direction normalized so its first component is 1. Two rays
    are asymptotic exactly when these agree."""
    if ray.base.model is not Model.HYPERBOLOID:
        raise DomainError("ideal points belong to the hyperboloid model")
    w = _add(_scale(ray.base.coords, 1.0 / ray.base.k), ray.direction)
    return _scale(w, 1.0 / w[0])


def asymptotic_ray(p: ModelPoint, ray: Ray) -> Ray:
    """The ray from p sharing the ideal endpoint of `ray`.

    Closed form: for the lightlike representative w of the ideal point,
    u = (k^2 / <p, w>) w - p is exactly tangent at p with Minkowski norm
    k and points at the same ideal point; <p, w> > 0 always holds between
    a sheet point and a future lightlike vector. The ray is assembled
    directly from u/k rather than re-projected through Ray.at: the
    projection would subtract two nearly equal large vectors and its
    renormalization factor carries the squared rounding of the big
    components, which is what dominates the ideal-endpoint defect for
    distant base points. A point already on the given ray gets the ray's
    own direction back.
    """
    if p.model is not Model.HYPERBOLOID:
        raise DomainError("asymptotic rays belong to the hyperboloid model")
    w = ideal_direction(ray)
    k = p.k
    denom = minkowski_dot(p.coords, w)
    u = _sub(_scale(w, k * k / denom), p.coords)
    return Ray(p, _scale(u, 1.0 / k))


def hyperboloid_to_half_space(p: ModelPoint) -> ModelPoint:
    """Isometry from the 4-component hyperboloid sheet to the upper
    half-space, sending the ideal point along (1,0,0,1) to infinity and
    the origin (k,0,0,0) to (0,0,k)."""
    if p.model is not Model.HYPERBOLOID or len(p.coords) != 4:
        raise DomainError("hyperboloid_to_half_space needs 4-component hyperboloid points")
    x0, x1, x2, x3 = p.coords
    k = p.k
    denom = x0 - x3
    if denom <= 0.0:
        raise DomainError("point maps to infinity in this chart")
    return ModelPoint.half_space(k * x1 / denom, k * x2 / denom, k * k / denom, k)


def half_space_to_hyperboloid(q: ModelPoint) -> ModelPoint:
    """Inverse of hyperboloid_to_half_space."""
    if q.model is not Model.HALF_SPACE:
        raise DomainError("half_space_to_hyperboloid needs half-space points")
    x, y, z = q.coords
    k = q.k
    s = x * x + y * y + z * z
    return ModelPoint.hyperboloid(
        (0.5 * (s + k * k) / z, k * x / z, k * y / z, 0.5 * (s - k * k) / z), k)
