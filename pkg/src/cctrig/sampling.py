"""Deterministic triangle sampling measured off the concrete models.

Every sample index owns a counter-based random stream, so suites can be
evaluated in any order (or split across processes) and still reproduce
bit-identical triangles for a fixed seed.

Accuracy note. Each sampled triangle is synthesized three times from
the same exact parameters (b, c, A), once per vertex, and every angle
is measured at the origin of its own frame, where tangent projection is
exact. Measuring the far angles in a single frame instead would cost a
factor e^(2 max_side) of rounding amplification and cannot reach the
residual floors the verification suites assert. The far-vertex
coordinates use two-term rearrangements (difference angle plus a
half-angle square) so nearly-degenerate draws lose nothing to
cancellation.
"""

from __future__ import annotations

import math

import numpy as np

from .curvature import Curvature, GeometryKind
from .errors import DomainError, SamplingError
from .models import Model, ModelPoint, model_angle, model_distance
from .triangle import TriangleData

DEFAULT_MIN_ANGLE = 1e-3
DEFAULT_MAX_SIDE = 10.0  # units of k
DEFAULT_MIN_SIDE = 0.05  # units of k
DEFAULT_ATTEMPTS = 128
# spherical side cap (units of k), just under the quarter circumference;
# a geodesic ball of this radius is convex and inside an open hemisphere
SPHERE_SIDE_CAP = 0.49 * math.pi


def sample_stream(seed: int, index: int) -> np.random.Generator:
    """Independent counter-based stream for one sample index."""
    if index < 0 or seed < 0:
        raise DomainError("seed and index must be nonnegative")
    return np.random.Generator(np.random.Philox(key=seed + (index << 64)))


def _draw(g: np.random.Generator, lo: float, hi: float) -> float:
    return float(g.uniform(lo, hi))


def sample_triangle(geometry: Curvature, seed: int, index: int = 0, *,
                    min_angle: float = DEFAULT_MIN_ANGLE,
                    max_side: float = DEFAULT_MAX_SIDE,
                    min_side: float = DEFAULT_MIN_SIDE,
                    attempts: int = DEFAULT_ATTEMPTS) -> TriangleData:
    """Draw one triangle against the model for `geometry` and return it
    with all six elements measured off model points.

    Side bounds are in units of the curvature scale. Draws whose third
    side leaves [~0, max_side] or whose angles fall under min_angle are
    rejected; the attempt budget bounds the rejection loop.
    """
    if not (0.0 < min_angle < math.pi / 2.0):
        raise DomainError(f"min_angle must lie in (0, pi/2), got {min_angle}")
    if not (0.0 < min_side < max_side):
        raise DomainError(f"need 0 < min_side < max_side, got ({min_side}, {max_side})")
    g = sample_stream(seed, index)
    kind = geometry.kind
    if kind is GeometryKind.EUCLIDEAN:
        t = _sample_flat(g, geometry, min_angle, max_side, min_side, attempts)
    elif kind is GeometryKind.HYPERBOLIC:
        t = _sample_hyperbolic(g, geometry, min_angle, max_side, min_side, attempts)
    else:
        t = _sample_spherical(g, geometry, min_angle, max_side, min_side, attempts)
    return t.validate()


def _sample_flat(g, geometry, min_angle, max_side, min_side, attempts):
    for _ in range(attempts):
        b = _draw(g, min_side, max_side)
        c = _draw(g, min_side, max_side)
        A = _draw(g, min_angle, math.pi - min_angle)
        pa = ModelPoint.plane(0.0, 0.0)
        pb = ModelPoint.plane(c, 0.0)
        pc = ModelPoint.plane(b * math.cos(A), b * math.sin(A))
        a_m = model_distance(pb, pc)
        if a_m > max_side or a_m < 1e-12:
            continue
        angA = model_angle(pa, pb, pc)
        angB = model_angle(pb, pc, pa)
        angC = model_angle(pc, pa, pb)
        if min(angA, angB, angC) < min_angle:
            continue
        return TriangleData(a_m, model_distance(pc, pa), model_distance(pa, pb),
                            angA, angB, angC, geometry)
    raise SamplingError(f"no flat triangle accepted in {attempts} attempts")


def _sample_hyperbolic(g, geometry, min_angle, max_side, min_side, attempts):
    k = geometry.k
    sh, ch = math.sinh, math.cosh
    for _ in range(attempts):
        b = _draw(g, min_side, max_side)
        c = _draw(g, min_side, max_side)
        A = _draw(g, min_angle, math.pi - min_angle)
        s2 = math.sin(0.5 * A) ** 2
        sinA = math.sin(A)

        # every frame puts its own vertex at this origin
        origin = ModelPoint(Model.HYPERBOLOID, (k, 0.0, 0.0), k)

        # B and C as seen from A (B down the x-axis, C at angle A)
        pb = ModelPoint(Model.HYPERBOLOID, (k * ch(c), k * sh(c), 0.0), k)
        pc = ModelPoint(Model.HYPERBOLOID,
                        (k * ch(b), k * sh(b) * math.cos(A), k * sh(b) * math.sin(A)), k)

        # A and B as seen from C (A down the x-axis); the far vertex B
        # lands on two-term coordinates free of cancellation
        qa = ModelPoint(Model.HYPERBOLOID, (k * ch(b), k * sh(b), 0.0), k)
        qb = ModelPoint(Model.HYPERBOLOID,
                        (k * (ch(b - c) + 2.0 * sh(b) * sh(c) * s2),
                         k * (sh(b - c) + 2.0 * ch(b) * sh(c) * s2),
                         k * sh(c) * sinA), k)

        # A and C as seen from B (A down the x-axis)
        ra = ModelPoint(Model.HYPERBOLOID, (k * ch(c), k * sh(c), 0.0), k)
        rc = ModelPoint(Model.HYPERBOLOID,
                        (k * (ch(c - b) + 2.0 * sh(c) * sh(b) * s2),
                         k * (sh(c - b) + 2.0 * ch(c) * sh(b) * s2),
                         k * sh(b) * sinA), k)

        a_m = model_distance(origin, qb)
        if a_m > max_side * k or a_m < 1e-12 * k:
            continue
        angA = model_angle(origin, pb, pc)
        angB = model_angle(origin, ra, rc)
        angC = model_angle(origin, qa, qb)
        if min(angA, angB, angC) < min_angle:
            continue
        return TriangleData(a_m, model_distance(origin, pc), model_distance(origin, pb),
                            angA, angB, angC, geometry)
    raise SamplingError(f"no hyperbolic triangle accepted in {attempts} attempts")


def _sample_spherical(g, geometry, min_angle, max_side, min_side, attempts):
    k = geometry.k
    cap = min(max_side, SPHERE_SIDE_CAP)
    if min_side >= cap:
        raise DomainError(f"min_side {min_side} leaves no room under the spherical cap {cap}")
    sn, cs = math.sin, math.cos
    for _ in range(attempts):
        b = _draw(g, min_side, cap)
        c = _draw(g, min_side, cap)
        A = _draw(g, min_angle, math.pi - min_angle)
        s2 = math.sin(0.5 * A) ** 2
        sinA = math.sin(A)

        # same per-frame synthesis as the hyperbolic sampler, circular form
        origin = ModelPoint.sphere((k, 0.0, 0.0), k)
        pb = ModelPoint.sphere((k * cs(c), k * sn(c), 0.0), k)
        pc = ModelPoint.sphere((k * cs(b), k * sn(b) * cs(A), k * sn(b) * sn(A)), k)

        qa = ModelPoint.sphere((k * cs(b), k * sn(b), 0.0), k)
        qb = ModelPoint.sphere((k * (cs(b - c) - 2.0 * sn(b) * sn(c) * s2),
                                k * (sn(b - c) + 2.0 * cs(b) * sn(c) * s2),
                                k * sn(c) * sinA), k)

        ra = ModelPoint.sphere((k * cs(c), k * sn(c), 0.0), k)
        rc = ModelPoint.sphere((k * (cs(c - b) - 2.0 * sn(c) * sn(b) * s2),
                                k * (sn(c - b) + 2.0 * cs(c) * sn(b) * s2),
                                k * sn(b) * sinA), k)

        a_m = model_distance(origin, qb)
        if a_m > cap * k or a_m < 1e-12 * k:
            continue
        angA = model_angle(origin, pb, pc)
        angB = model_angle(origin, ra, rc)
        angC = model_angle(origin, qa, qb)
        if min(angA, angB, angC) < min_angle:
            continue
        return TriangleData(a_m, model_distance(origin, pc), model_distance(origin, pb),
                            angA, angB, angC, geometry)
    raise SamplingError(f"no spherical triangle accepted in {attempts} attempts")


def sample_right_triangle(geometry: Curvature, seed: int, index: int = 0, *,
                          min_leg: float = DEFAULT_MIN_SIDE,
                          max_leg: float | None = None) -> TriangleData:
    """Draw a right triangle (right angle at C) from uniform legs.

    Legs are in units of k; the hypotenuse and the two acute angles come
    from the cancellation-free right-triangle closed forms. No rejection
    is needed: every leg pair is feasible. The hyperbolic default cap
    keeps the hypotenuse short enough (about 5.3 k) that downstream
    constructions conditioned like cosh(hypotenuse)^2 retain at least
    twelve significant digits.
    """
    kind, k = geometry.kind, geometry.k
    if kind is GeometryKind.EUCLIDEAN:
        raise DomainError("flat right triangles need no curvature-aware sampler")
    if max_leg is None:
        max_leg = 1.5 if kind is GeometryKind.SPHERICAL else 3.0
    if kind is GeometryKind.SPHERICAL and max_leg >= math.pi / 2.0:
        raise DomainError(f"spherical legs must stay below (pi/2) k, got cap {max_leg}")
    if not (0.0 < min_leg < max_leg):
        raise DomainError(f"need 0 < min_leg < max_leg, got ({min_leg}, {max_leg})")
    g = sample_stream(seed, index)
    a = _draw(g, min_leg, max_leg)
    b = _draw(g, min_leg, max_leg)
    if kind is GeometryKind.HYPERBOLIC:
        sha, shb = math.sinh(a), math.sinh(b)
        # expansion of cosh^2 a cosh^2 b - 1 with no cancellation
        c = math.asinh(math.sqrt(sha * sha + shb * shb + sha * sha * shb * shb))
        A = math.atan2(math.tanh(a), shb)
        B = math.atan2(math.tanh(b), sha)
    else:
        sa, sb = math.sin(a), math.sin(b)
        # expansion of 1 - cos^2 a cos^2 b with no cancellation
        sc = math.sqrt(sa * sa + sb * sb - sa * sa * sb * sb)
        c = math.atan2(sc, math.cos(a) * math.cos(b))
        A = math.atan2(math.tan(a), sb)
        B = math.atan2(math.tan(b), sa)
    return TriangleData(a * k, b * k, c * k, A, B, math.pi / 2.0, geometry).validate()
