"""Horosphere triangles obey flat trigonometry."""

import math

import pytest

from cctrig import (Curvature, DegenerateError, DomainError,
                    ambient_polyline_length, angle_excess,
                    euclidean_residuals, horosphere_triangle,
                    intrinsic_distance, sample_stream)


def test_chart_345_triangle_at_unit_height():
    t = horosphere_triangle(1.0, (0.0, 4.0), (3.0, 0.0), (0.0, 0.0))
    assert sorted(t.sides()) == pytest.approx([3.0, 4.0, 5.0], abs=1e-14)
    assert t.C == pytest.approx(math.pi / 2.0, abs=1e-15)
    assert t.geometry == Curvature.euclidean()


def test_height_rescales_sides_but_not_angles():
    t1 = horosphere_triangle(1.0, (0.0, 4.0), (3.0, 0.0), (0.0, 0.0))
    t2 = horosphere_triangle(2.0, (0.0, 4.0), (3.0, 0.0), (0.0, 0.0))
    for s1, s2 in zip(t1.sides(), t2.sides()):
        assert s2 == pytest.approx(0.5 * s1, rel=1e-15)
    assert t1.angles() == pytest.approx(t2.angles(), abs=1e-15)


def test_random_triangles_have_flat_angle_sums():
    worst = 0.0
    produced = 0
    index = 0
    while produced < 300:
        g = sample_stream(21, index)
        index += 1
        pts = g.uniform(-2.0, 2.0, size=(3, 2))
        try:
            t = horosphere_triangle(1.0, pts[0], pts[1], pts[2])
        except (DomainError, DegenerateError):
            continue
        worst = max(worst, abs(angle_excess(t)))
        produced += 1
    assert worst < 1e-12


def test_random_triangles_satisfy_the_flat_laws():
    worst = 0.0
    produced = 0
    index = 0
    while produced < 300:
        g = sample_stream(22, index)
        index += 1
        pts = g.uniform(-2.0, 2.0, size=(3, 2))
        try:
            t = horosphere_triangle(1.0, pts[0], pts[1], pts[2])
        except (DomainError, DegenerateError):
            continue
        if min(t.angles()) < 1e-3 or min(t.sides()) < 1e-3:
            continue
        worst = max(worst, max(abs(r.residual) for r in euclidean_residuals(t)))
        produced += 1
    assert worst < 1e-10


def test_intrinsic_distance_is_the_scaled_chart_distance():
    assert intrinsic_distance(2.0, (0.0, 0.0), (3.0, 4.0), 1.0) == \
        pytest.approx(2.5, rel=1e-15)
    assert intrinsic_distance(0.5, (1.0, 1.0), (1.0, 2.0), 2.0) == \
        pytest.approx(4.0, rel=1e-15)


def test_ambient_length_matches_the_intrinsic_metric():
    for i in range(8):
        g = sample_stream(23, i)
        p, q = g.uniform(-2.0, 2.0, size=(2, 2))
        ambient = ambient_polyline_length(1.0, p, q)
        intrinsic = intrinsic_distance(1.0, p, q)
        assert abs(ambient - intrinsic) < 1e-7


def test_degenerate_charts_are_rejected():
    with pytest.raises(DegenerateError):
        horosphere_triangle(1.0, (0.0, 0.0), (0.0, 0.0), (1.0, 1.0))
    with pytest.raises(DegenerateError):
        horosphere_triangle(1.0, (0.0, 0.0), (1.0, 1.0), (2.0, 2.0))


def test_height_must_be_positive():
    with pytest.raises(DomainError):
        horosphere_triangle(0.0, (0.0, 4.0), (3.0, 0.0), (0.0, 0.0))
    with pytest.raises(DomainError):
        intrinsic_distance(-1.0, (0.0, 0.0), (1.0, 0.0))
