"""Verification suites: seeded Monte-Carlo runs over the model oracles.

Each suite draws its own deterministic sample stream (counter-based, so
execution order never matters), feeds the models' measurements through
the relation evaluators, and aggregates absolute residuals into report
rows. Row tolerances default to the documented per-row targets and
scale proportionally when the configured base tolerance is changed;
structural thresholds (the limit-slope window and the cevian
sensitivity floor) are fixed properties of the mathematics and do not
scale.
"""

from __future__ import annotations

import math
import time

import numpy as np

from .cevians import (cevian_feet, cevian_residual, perturbed_residual,
                      sample_cevian_config)
from .correspondence import (SUBSTITUTION_RELATIONS, euclidean_limit_slope,
                             imaginary_substitution_residual, rescaling_check)
from .curvature import Curvature
from .errors import DegenerateError, DomainError, InfeasibleError
from .geodesic_sphere import (GeodesicSphere, geodesic_sphere_triangle,
                              intrinsic_arc_length)
from .horosphere import (ambient_polyline_length, horosphere_triangle,
                         intrinsic_distance)
from .models import Model, ModelPoint, Ray, tangent_angle
from .parallelism import parallelism_angle
from .prism import build_prism, replay_residuals
from .relations import (euclidean_residuals, hyperbolic_residuals,
                        spherical_residuals, spherical_right_residuals)
from .report import (MIN_ABOVE, CheckRow, ResidualReport, SuiteConfig,
                     make_row)
from .sampling import sample_stream, sample_triangle, sample_right_triangle
from .solvers import solve_from_sss
from .triangle import angle_excess

SUITE_NAMES = ("spherical", "hyperbolic", "euclidean", "sphere-model",
               "horosphere", "prism", "substitution", "limits", "cevians")

_BASE_TOLERANCE = 1e-9
#: Disjoint Philox stream bases, keyed by suite so a suite produces the
#: same rows alone and inside `all`.
_STREAM_BASE = {name: (i + 1) << 32 for i, name in enumerate(SUITE_NAMES)}
#: Sub-stream stride inside one suite.
_SUB = 1 << 28

_GEODESIC_SPHERE_RADII = ((0.1, "0.1"), (1.0, "1"), (5.0, "5"))
_ARC_CHECK_PAIRS = 16
_AMBIENT_CHECK_PAIRS = 8
_LIMIT_SHAPES = 10
_LIMIT_SCALES = tuple(np.geomspace(1e-1, 1e-3, 7))
_LIMIT_ENDPOINT = 1e-6
_RESCALING_FACTORS = (1e-3, 3.0, 1e6)
_SLOPE_WINDOW = 0.1          # |slope - 2| bound; structural, never rescaled
_SENSITIVITY_FLOOR = 1e-4    # perturbed-residual floor; structural
_SENSITIVITY_DELTA = 1e-3


def _tol(cfg: SuiteConfig, default: float) -> float:
    return default * (cfg.tolerance / _BASE_TOLERANCE)


def _suite_spherical(cfg: SuiteConfig) -> list[CheckRow]:
    geom = Curvature.spherical(cfg.curvature.k)
    base = _STREAM_BASE["spherical"]
    general: dict[str, list[float]] = {}
    for i in range(cfg.samples):
        t = sample_triangle(geom, cfg.seed, base + i)
        for r in spherical_residuals(t):
            general.setdefault(r.relation_id, []).append(r.residual)
    right: dict[str, list[float]] = {}
    for i in range(cfg.samples):
        t = sample_right_triangle(geom, cfg.seed, base + _SUB + i)
        for r in spherical_right_residuals(t):
            right.setdefault(r.relation_id, []).append(r.residual)
    rows = [make_row(rid, vals, _tol(cfg, 1e-9)) for rid, vals in general.items()]
    rows += [make_row(rid, vals, _tol(cfg, 1e-10)) for rid, vals in right.items()]
    return rows


def _suite_hyperbolic(cfg: SuiteConfig) -> list[CheckRow]:
    geom = Curvature.hyperbolic(cfg.curvature.k)
    base = _STREAM_BASE["hyperbolic"]
    per: dict[str, list[float]] = {}
    for i in range(cfg.samples):
        t = sample_triangle(geom, cfg.seed, base + i)
        for r in hyperbolic_residuals(t):
            per.setdefault(r.relation_id, []).append(r.residual)
    return [make_row(rid, vals, _tol(cfg, 1e-9)) for rid, vals in per.items()]


def _suite_euclidean(cfg: SuiteConfig) -> list[CheckRow]:
    geom = Curvature.euclidean()
    base = _STREAM_BASE["euclidean"]
    per: dict[str, list[float]] = {}
    for i in range(cfg.samples):
        t = sample_triangle(geom, cfg.seed, base + i)
        for r in euclidean_residuals(t):
            per.setdefault(r.relation_id, []).append(r.residual)
    return [make_row(rid, vals, _tol(cfg, 1e-9)) for rid, vals in per.items()]


def _center_rays(g, center: ModelPoint, attempts: int = 128) -> tuple[Ray, Ray, Ray]:
    """Three well-separated random rays at the hyperboloid origin."""
    for _ in range(attempts):
        dirs = g.normal(size=(3, 3))
        norms = np.sqrt((dirs * dirs).sum(axis=1))
        if norms.min() < 1e-6:
            continue
        dirs = dirs / norms[:, None]
        cosines = dirs @ dirs.T
        sep = max(abs(cosines[0, 1]), abs(cosines[0, 2]), abs(cosines[1, 2]))
        if sep > math.cos(0.05):
            continue
        return tuple(Ray.at(center, (0.0, *map(float, d))) for d in dirs)
    raise DomainError(f"no acceptable ray triple after {attempts} attempts")


def _suite_sphere_model(cfg: SuiteConfig) -> list[CheckRow]:
    k = cfg.curvature.k
    center = ModelPoint(Model.HYPERBOLOID, (k, 0.0, 0.0, 0.0), k)
    base = _STREAM_BASE["sphere-model"]
    rows: list[CheckRow] = []
    for level, (rho, label) in enumerate(_GEODESIC_SPHERE_RADII):
        sphere = GeodesicSphere(center, rho * k)
        per: dict[str, list[float]] = {}
        arc_checks: list[float] = []
        produced = 0
        index = 0
        while produced < cfg.samples:
            g = sample_stream(cfg.seed, base + level * _SUB + index)
            index += 1
            try:
                rays = _center_rays(g, center)
                t = geodesic_sphere_triangle(sphere, rays)
            except (DomainError, DegenerateError, InfeasibleError):
                continue
            for r in spherical_residuals(t):
                per.setdefault(r.relation_id, []).append(r.residual)
            if produced < _ARC_CHECK_PAIRS:
                p = sphere.point_toward(rays[0].direction)
                q = sphere.point_toward(rays[1].direction)
                arc = intrinsic_arc_length(sphere, p, q)
                angle = tangent_angle(center, rays[0].direction, rays[1].direction)
                arc_checks.append(arc - sphere.effective_radius * angle)
            produced += 1
        rows += [make_row(f"gsph_rho{label}_{rid.removeprefix('sph_')}", vals,
                          _tol(cfg, 1e-9)) for rid, vals in per.items()]
        rows.append(make_row(f"gsph_rho{label}_effective_radius", arc_checks,
                             _tol(cfg, 1e-7)))
    return rows


def _suite_horosphere(cfg: SuiteConfig) -> list[CheckRow]:
    k = cfg.curvature.k
    base = _STREAM_BASE["horosphere"]
    per: dict[str, list[float]] = {}
    produced = 0
    index = 0
    while produced < cfg.samples:
        g = sample_stream(cfg.seed, base + index)
        index += 1
        pts = g.uniform(-2.0 * k, 2.0 * k, size=(3, 2))
        try:
            t = horosphere_triangle(k, pts[0], pts[1], pts[2], k)
        except (DomainError, DegenerateError):
            continue
        if min(t.angles()) < 1e-3 or min(t.sides()) < 1e-3 * k:
            continue
        for r in euclidean_residuals(t):
            per.setdefault("horo_" + r.relation_id.removeprefix("euc_"), []) \
                .append(r.residual)
        produced += 1
    rows = [make_row("horo_angle_sum", per.pop("horo_angle_sum"), _tol(cfg, 1e-9))]
    rows += [make_row(rid, vals, _tol(cfg, 1e-10)) for rid, vals in per.items()]
    ambient: list[float] = []
    for i in range(_AMBIENT_CHECK_PAIRS):
        g = sample_stream(cfg.seed, base + _SUB + i)
        p, q = g.uniform(-2.0 * k, 2.0 * k, size=(2, 2))
        ambient.append(ambient_polyline_length(k, p, q, k)
                       - intrinsic_distance(k, p, q, k))
    rows.append(make_row("horo_ambient_vs_intrinsic", ambient, _tol(cfg, 1e-7)))
    return rows


def _suite_prism(cfg: SuiteConfig) -> list[CheckRow]:
    geom = Curvature.hyperbolic(cfg.curvature.k)
    base = _STREAM_BASE["prism"]
    right_m: list[float] = []
    horo_right: list[float] = []
    align: list[float] = []
    par_match: list[float] = []
    replay: dict[str, list[float]] = {}
    for i in range(cfg.samples):
        t = sample_right_triangle(geom, cfg.seed, base + i)
        fig = build_prism(t)
        right_m.append(fig.right_angle_defect_at_m)
        horo_right.append(fig.horospherical_right_angle_defect)
        align.append(fig.ideal_alignment_defect)
        par_match.append(max(
            abs(fig.spherical.b - parallelism_angle(t.c, geom)),
            abs(fig.spherical.c - parallelism_angle(t.a, geom)),
            abs(fig.spherical.B - parallelism_angle(t.b, geom)),
            abs(fig.spherical.a - t.B),
            abs(fig.horospherical.A - t.A)))
        for r in replay_residuals(fig):
            replay.setdefault(r.relation_id, []).append(r.residual)
    rows = [make_row("prism_right_angle_at_m", right_m, _tol(cfg, 1e-8)),
            make_row("prism_horospherical_right", horo_right, _tol(cfg, 1e-8)),
            make_row("prism_ideal_alignment", align, _tol(cfg, 1e-10)),
            make_row("prism_parallelism_match", par_match, _tol(cfg, 1e-8))]
    rows += [make_row(rid, vals, _tol(cfg, 1e-8)) for rid, vals in replay.items()]
    return rows


def _suite_substitution(cfg: SuiteConfig) -> list[CheckRow]:
    geom = Curvature.hyperbolic(cfg.curvature.k)
    base = _STREAM_BASE["substitution"]
    per: dict[str, list[float]] = {}
    for i in range(cfg.samples):
        t = sample_triangle(geom, cfg.seed, base + i, max_side=3.0)
        for rid in SUBSTITUTION_RELATIONS:
            res = imaginary_substitution_residual(rid, t)
            per.setdefault("sub_" + rid.removeprefix("sph_"), []) \
                .append(res.magnitude)
    return [make_row(rid, vals, _tol(cfg, 1e-9)) for rid, vals in per.items()]


def _suite_limits(cfg: SuiteConfig) -> list[CheckRow]:
    k = cfg.curvature.k
    hyp = Curvature.hyperbolic(k)
    sph = Curvature.spherical(k)
    base = _STREAM_BASE["limits"]
    slope_hyp: list[float] = []
    slope_sph: list[float] = []
    endpoint: list[float] = []
    rescale: list[float] = []
    for i in range(_LIMIT_SHAPES):
        shape_h = sample_triangle(hyp, cfg.seed, base + i, max_side=2.0)
        fit = euclidean_limit_slope(shape_h, _LIMIT_SCALES)
        slope_hyp.append(fit.slope - 2.0)
        shape_s = sample_triangle(sph, cfg.seed, base + _SUB + i, max_side=1.5)
        fit_s = euclidean_limit_slope(shape_s, _LIMIT_SCALES)
        slope_sph.append(fit_s.slope - 2.0)
        longest = max(shape_h.sides())
        tiny = solve_from_sss(hyp, *(s / longest * _LIMIT_ENDPOINT * k
                                     for s in shape_h.sides()))
        endpoint.append(angle_excess(tiny))
        for lam in _RESCALING_FACTORS:
            rescale.append(rescaling_check(shape_h, lam).max_deviation)
    return [make_row("limit_slope_hyperbolic", slope_hyp, _SLOPE_WINDOW),
            make_row("limit_slope_spherical", slope_sph, _SLOPE_WINDOW),
            make_row("limit_endpoint_excess", endpoint, _tol(cfg, 1e-12)),
            make_row("limit_rescaling", rescale, _tol(cfg, 1e-12))]


def _canonical_cevian_configs(k: float):
    """The three closed-form configurations used by the fixed rows."""
    euc = Curvature.euclidean()
    sph = Curvature.spherical(k)
    a_pt = ModelPoint.plane(0.2, 3.1)
    b_pt = ModelPoint.plane(4.0, -0.5)
    c_pt = ModelPoint.plane(-1.0, 0.0)
    centroid = ModelPoint.plane((0.2 + 4.0 - 1.0) / 3.0, (3.1 - 0.5 + 0.0) / 3.0)
    medians = cevian_feet(euc, a_pt, b_pt, c_pt, centroid)
    incenter = cevian_feet(
        euc, ModelPoint.plane(0.0, 4.0), ModelPoint.plane(3.0, 0.0),
        ModelPoint.plane(0.0, 0.0), ModelPoint.plane(1.0, 1.0))
    s = 1.0 / math.sqrt(3.0)
    octant = cevian_feet(
        sph,
        ModelPoint(Model.SPHERE, (k, 0.0, 0.0), k),
        ModelPoint(Model.SPHERE, (0.0, k, 0.0), k),
        ModelPoint(Model.SPHERE, (0.0, 0.0, k), k),
        ModelPoint(Model.SPHERE, (s * k, s * k, s * k), k))

    def unit(v):
        n = math.sqrt(math.fsum(x * x for x in v))
        return tuple(x / n * k for x in v)

    # A scalene spherical configuration whose cevians cross their sides
    # obliquely. The octant cannot serve here: each of its sides lies on
    # the polar circle of the opposite vertex, so every cevian meets its
    # side at a right angle and a foot slide is invisible at first order.
    skew = cevian_feet(
        sph,
        ModelPoint(Model.SPHERE, unit((1.0, 0.0, 0.2)), k),
        ModelPoint(Model.SPHERE, unit((0.1, 1.0, 0.0)), k),
        ModelPoint(Model.SPHERE, unit((0.0, 0.15, 1.0)), k),
        ModelPoint(Model.SPHERE, unit((1.1, 1.15, 1.2)), k))
    return medians, incenter, octant, skew


def _suite_cevians(cfg: SuiteConfig) -> list[CheckRow]:
    k = cfg.curvature.k
    base = _STREAM_BASE["cevians"]
    medians, incenter, octant, skew = _canonical_cevian_configs(k)
    rows = [make_row("cev_euclidean_medians", [cevian_residual(medians)],
                     _tol(cfg, 1e-12)),
            make_row("cev_345_incenter", [cevian_residual(incenter)],
                     _tol(cfg, 1e-12)),
            make_row("cev_spherical_octant", [r - 2.0 for r in octant.ratios()],
                     _tol(cfg, 1e-9))]
    geoms = (("euclidean", Curvature.euclidean()),
             ("spherical", Curvature.spherical(k)),
             ("hyperbolic", Curvature.hyperbolic(k)))
    sampled: dict[str, list[float]] = {name: [] for name, _ in geoms}
    # Sensitivity is checked on fixed oblique configurations only: their
    # cevians cross the perturbed side at an angle, so a foot slide of
    # delta changes the residual at first order. A configuration whose
    # cevian meets its side at (or near) a right angle — the octant
    # always, a random draw occasionally — responds only at second
    # order, so no useful floor exists over arbitrary configurations.
    perturbed: list[float] = [perturbed_residual(medians, _SENSITIVITY_DELTA),
                              perturbed_residual(incenter, _SENSITIVITY_DELTA),
                              perturbed_residual(skew, _SENSITIVITY_DELTA)]
    for j, (name, geom) in enumerate(geoms):
        for i in range(cfg.samples):
            c = sample_cevian_config(geom, cfg.seed, base + j * _SUB + i)
            sampled[name].append(cevian_residual(c))
    rows.append(make_row("cev_euclidean_sampled", sampled["euclidean"],
                         _tol(cfg, 1e-9)))
    rows.append(make_row("cev_spherical_sampled", sampled["spherical"],
                         _tol(cfg, 1e-9)))
    rows.append(make_row("cev_hyperbolic_conjecture", sampled["hyperbolic"],
                         None, conjecture=True))
    rows.append(make_row("cev_perturbation", perturbed, _SENSITIVITY_FLOOR,
                         comparison=MIN_ABOVE))
    return rows


_SUITE_FUNCS = {
    "spherical": _suite_spherical,
    "hyperbolic": _suite_hyperbolic,
    "euclidean": _suite_euclidean,
    "sphere-model": _suite_sphere_model,
    "horosphere": _suite_horosphere,
    "prism": _suite_prism,
    "substitution": _suite_substitution,
    "limits": _suite_limits,
    "cevians": _suite_cevians,
}


def run_suite(name: str, cfg: SuiteConfig) -> ResidualReport:
    """Run one suite (or ``all``) and aggregate into a report."""
    start = time.perf_counter()
    if name == "all":
        rows: list[CheckRow] = []
        for suite in SUITE_NAMES:
            rows.extend(_SUITE_FUNCS[suite](cfg))
    elif name in _SUITE_FUNCS:
        rows = _SUITE_FUNCS[name](cfg)
    else:
        raise DomainError(f"unknown suite {name!r}; expected one of "
                          f"{', '.join(SUITE_NAMES + ('all',))}")
    elapsed = time.perf_counter() - start
    return ResidualReport(name, cfg.seed, cfg.samples, cfg.tolerance,
                          cfg.curvature, tuple(rows), elapsed)
