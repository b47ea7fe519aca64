"""Triangle solvers (SSS, SAS, ASA, AAA) for the three geometries.

Angle extraction goes through half-angle tangent forms, which keep full
relative accuracy for sliver triangles and for sides far below the
curvature scale; arccos of a law-of-cosines ratio would lose half the
digits there. The ambiguous side-side-angle case is not offered.

Arguments to acos/asin/acosh may drift outside their domain by rounding;
up to 4 ulps of spill is clamped, anything beyond means the requested
triangle does not exist.
"""

from __future__ import annotations

import math

from .curvature import Curvature, GeometryKind
from .errors import DegenerateError, DomainError, InfeasibleError, SimilarityError
from .triangle import TriangleData

_CLAMP_SLACK = 4.0 * math.ulp(1.0)


def _clamped_unit(x: float, what: str) -> float:
    if x > 1.0:
        if x > 1.0 + _CLAMP_SLACK:
            raise InfeasibleError(f"{what} = {x} leaves [-1, 1] by more than rounding")
        return 1.0
    if x < -1.0:
        if x < -1.0 - _CLAMP_SLACK:
            raise InfeasibleError(f"{what} = {x} leaves [-1, 1] by more than rounding")
        return -1.0
    return x


def _clamped_ge1(x: float, what: str) -> float:
    if x < 1.0:
        if x < 1.0 - _CLAMP_SLACK:
            raise InfeasibleError(f"{what} = {x} falls below 1 by more than rounding")
        return 1.0
    return x


def _check_angle(value: float, name: str) -> None:
    if not (0.0 < value < math.pi):
        raise DomainError(f"angle {name} must lie strictly inside (0, pi), got {value}")


def _check_side(value: float, name: str, geometry: Curvature) -> None:
    if not (math.isfinite(value) and value > 0.0):
        raise DomainError(f"side {name} must be positive and finite, got {value}")
    if geometry.kind is GeometryKind.SPHERICAL and value >= math.pi * geometry.k:
        raise DomainError(f"spherical side {name} must stay below pi*k, got {value}")


def solve_from_sss(geometry: Curvature, a: float, b: float, c: float) -> TriangleData:
    """Solve a triangle from its three sides."""
    for name, s in (("a", a), ("b", b), ("c", c)):
        _check_side(s, name, geometry)
    # semiperimeter differences computed directly so near-degenerate
    # inputs keep their small quantities intact
    sa, sb, sc = 0.5 * (b + c - a), 0.5 * (c + a - b), 0.5 * (a + b - c)
    if sa <= 0.0 or sb <= 0.0 or sc <= 0.0:
        raise InfeasibleError(f"triangle inequality fails for sides ({a}, {b}, {c})")
    s = 0.5 * (a + b + c)
    kind, k = geometry.kind, geometry.k

    if kind is GeometryKind.SPHERICAL and 2.0 * s >= 2.0 * math.pi * k:
        raise InfeasibleError(f"spherical perimeter {2.0 * s} reaches 2*pi*k; no such triangle")

    if kind is GeometryKind.EUCLIDEAN:
        f = lambda x: x
    elif kind is GeometryKind.HYPERBOLIC:
        f = lambda x: math.sinh(x / k)
    else:
        f = lambda x: math.sin(x / k)
    fs, fsa, fsb, fsc = f(s), f(sa), f(sb), f(sc)
    A = 2.0 * math.atan2(math.sqrt(fsb * fsc), math.sqrt(fs * fsa))
    B = 2.0 * math.atan2(math.sqrt(fsc * fsa), math.sqrt(fs * fsb))
    C = 2.0 * math.atan2(math.sqrt(fsa * fsb), math.sqrt(fs * fsc))
    return TriangleData(a, b, c, A, B, C, geometry).validate()


def solve_from_sas(geometry: Curvature, b: float, A: float, c: float) -> TriangleData:
    """Solve from two sides and the angle between them.

    The enclosed side comes from the half-angle form of the law of
    cosines (no cancellation when A is small and b is near c); the
    angles are then delegated to solve_from_sss, so the returned angle
    at the given vertex is the recomputed one and the SSS round trip is
    consistent by construction.
    """
    _check_side(b, "b", geometry)
    _check_side(c, "c", geometry)
    _check_angle(A, "A")
    k = geometry.k
    half = math.sin(0.5 * A)
    if geometry.kind is GeometryKind.EUCLIDEAN:
        a = math.hypot(b - c, 2.0 * math.sqrt(b * c) * half)
    elif geometry.kind is GeometryKind.HYPERBOLIC:
        u = math.sinh(0.5 * (b - c) / k) ** 2 + math.sinh(b / k) * math.sinh(c / k) * half * half
        a = 2.0 * k * math.asinh(math.sqrt(u))
    else:
        u = math.sin(0.5 * (b - c) / k) ** 2 + math.sin(b / k) * math.sin(c / k) * half * half
        root = _clamped_unit(math.sqrt(u), "sin(a/2) from the half-angle form")
        a = 2.0 * k * math.asin(root)
    try:
        return solve_from_sss(geometry, a, b, c)
    except InfeasibleError as exc:
        # the computed side always satisfies the flat/hyperbolic triangle
        # inequality; only the spherical perimeter bound can trip here
        raise DomainError(f"result side a = {a} puts the triangle out of range: {exc}") from exc


def solve_from_asa(geometry: Curvature, B: float, a: float, C: float) -> TriangleData:
    """Solve from two angles and the side between them."""
    _check_angle(B, "B")
    _check_angle(C, "C")
    _check_side(a, "a", geometry)
    k = geometry.k
    cosB, sinB = math.cos(B), math.sin(B)
    cosC, sinC = math.cos(C), math.sin(C)

    if geometry.kind is GeometryKind.EUCLIDEAN:
        A = math.pi - (B + C)
        if A <= 0.0:
            raise InfeasibleError(f"flat angles B + C = {B + C} leave nothing for A")
        b = a * sinB / math.sin(A)
        c = a * sinC / math.sin(A)
        return TriangleData(a, b, c, A, B, C, geometry).validate()

    # The opposite angle comes from the dual law of cosines, but through
    # half-angle products: acos of the raw expression loses enough digits
    # on slivers for cot A in the cotangent relation to amplify past any
    # useful floor. The products keep 1 -/+ cos A fully accurate wherever
    # the triangle is feasible. The sides come from the four-parts
    # relation anchored to the given side (atan2/atanh form), except for
    # long hyperbolic sides where atanh saturates and the plain cosh
    # form is the well-conditioned one.
    if geometry.kind is GeometryKind.HYPERBOLIC:
        sh2 = math.sinh(0.5 * a / k) ** 2
        ch2 = math.cosh(0.5 * a / k) ** 2
        qm = math.cos(0.5 * (B + C)) ** 2 - sinB * sinC * sh2  # (1 - cos A)/2
        qp = math.sin(0.5 * (B - C)) ** 2 + sinB * sinC * ch2  # (1 + cos A)/2
        if qm <= 0.0:
            raise InfeasibleError("the two rays diverge before meeting for "
                                  f"B = {B}, a = {a}, C = {C}")
        A = 2.0 * math.atan2(math.sqrt(qm), math.sqrt(qp))
        sh = math.sinh(a / k)
        sides = []
        for sN, cN, sF, cF in ((sinB, cosB, sinC, cosC), (sinC, cosC, sinB, cosB)):
            y = sN * sh
            x = cN * sF + sN * cF * math.cosh(a / k)
            if y >= x:
                raise InfeasibleError("a far angle reaches its parallelism bound; "
                                      "the rays no longer meet")
            if y < 0.9 * x:
                sides.append(k * math.atanh(y / x))
            else:
                cosA = max(1.0 - 2.0 * qm, -1.0)
                sides.append(k * math.acosh(
                    _clamped_ge1((cN + cosA * cF) / (math.sin(A) * sF), "cosh of a side")))
        b, c = sides
        return TriangleData(a, b, c, A, B, C, geometry).validate()

    sh2 = math.sin(0.5 * a / k) ** 2
    ch2 = math.cos(0.5 * a / k) ** 2
    qm = math.cos(0.5 * (B + C)) ** 2 + sinB * sinC * sh2  # (1 - cos A)/2
    qp = math.sin(0.5 * (B + C)) ** 2 - sinB * sinC * sh2  # (1 + cos A)/2
    if qm <= 0.0 or qp <= 0.0:
        raise InfeasibleError(f"no spherical triangle for B = {B}, a = {a}, C = {C}")
    A = 2.0 * math.atan2(math.sqrt(qm), math.sqrt(qp))
    sn, cn = math.sin(a / k), math.cos(a / k)
    b = k * math.atan2(sinB * sn, cosB * sinC + sinB * cosC * cn)
    c = k * math.atan2(sinC * sn, cosC * sinB + sinC * cosB * cn)
    return TriangleData(a, b, c, A, B, C, geometry).validate()


def solve_from_aaa(geometry: Curvature, A: float, B: float, C: float) -> TriangleData:
    """Solve from the three angles. Curvature makes this determinate:
    the angle excess fixes the size. Flat geometry raises SimilarityError,
    zero excess raises DegenerateError.
    """
    if geometry.kind is GeometryKind.EUCLIDEAN:
        raise SimilarityError("flat triangles are fixed by their angles only up to similarity")
    for name, ang in (("A", A), ("B", B), ("C", C)):
        _check_angle(ang, name)
    excess = (A + B + C) - math.pi
    k = geometry.k
    sins = (math.sin(A), math.sin(B), math.sin(C))

    if geometry.kind is GeometryKind.HYPERBOLIC:
        if excess > 0.0:
            raise InfeasibleError(f"hyperbolic angles need a negative excess, got {excess}")
        if excess == 0.0:
            raise DegenerateError("zero excess: the hyperbolic triangle has collapsed")
        # cosh(side) - 1 as a stable product: cos X + cos(Y+Z) factored
        m = math.sin(-0.5 * excess)
        sides = []
        for X, Y, Z, sY, sZ in ((A, B, C, sins[1], sins[2]),
                                (B, C, A, sins[2], sins[0]),
                                (C, A, B, sins[0], sins[1])):
            q = 2.0 * m * math.cos(0.5 * (X - Y - Z)) / (sY * sZ)
            sides.append(2.0 * k * math.asinh(math.sqrt(0.5 * q)))
        return TriangleData(sides[0], sides[1], sides[2], A, B, C, geometry).validate()

    if excess < 0.0:
        raise InfeasibleError(f"spherical angles need a positive excess, got {excess}")
    if excess == 0.0:
        raise DegenerateError("zero excess: the spherical triangle has collapsed")
    m = math.sin(0.5 * excess)
    sides = []
    for X, Y, Z, sY, sZ in ((A, B, C, sins[1], sins[2]),
                            (B, C, A, sins[2], sins[0]),
                            (C, A, B, sins[0], sins[1])):
        # 1 -/+ cos(side) as stable products; nonpositive factors mean the
        # polar-dual triangle inequality fails and no triangle exists
        qm = 2.0 * m * math.cos(0.5 * (X - Y - Z)) / (sY * sZ)
        qp = 2.0 * math.cos(0.5 * (X + Y - Z)) * math.cos(0.5 * (X - Y + Z)) / (sY * sZ)
        if qm <= 0.0 or qp <= 0.0:
            raise InfeasibleError(f"angles ({A}, {B}, {C}) violate the spherical "
                                  "feasibility inequalities")
        sides.append(2.0 * k * math.atan2(math.sqrt(qm), math.sqrt(qp)))
    return TriangleData(sides[0], sides[1], sides[2], A, B, C, geometry).validate()
