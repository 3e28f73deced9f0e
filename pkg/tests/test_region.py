import itertools

import numpy as np
import pytest

from mimo_dof.models import AntennaConfig
from mimo_dof.region import (CaseLabel, DofPair, HalfPlane, boundary_polyline, classify_case,
                             compute_region, contains, dominant_face, max_weighted_sum,
                             outside_distance, polygon_vertices, previous_outer_bound,
                             same_vertices, tradeoff_slope)

ALL_CONFIGS = [AntennaConfig(*c) for c in itertools.product(range(1, 5), repeat=4)]


def _vertex_set(region):
    return sorted((round(v.d1, 9), round(v.d2, 9)) for v in region.vertices)


def _mirror(points):
    return sorted((d2, d1) for d1, d2 in points)


@pytest.mark.parametrize("cfg,case,swapped", [
    ((1, 2, 3, 4), CaseLabel.C, False),
    ((2, 2, 3, 4), CaseLabel.B, False),
    ((3, 4, 1, 2), CaseLabel.C, True),
    ((2, 3, 1, 3), CaseLabel.A, False),
])
def test_classify_case(cfg, case, swapped):
    assert classify_case(cfg) == (case, swapped)


def test_region_one_two_three_four():
    r = compute_region((1, 2, 3, 4))
    assert r.case_label == CaseLabel.C
    assert r.l_value == 1
    assert r.tradeoff_slope == pytest.approx(0.5)
    assert HalfPlane(1.0, 0.5, 1.5) in r.halfplanes
    assert list(r.vertices) == [DofPair(0, 0), DofPair(1, 0), DofPair(1, 1), DofPair(0, 3)]
    assert contains(r, (1, 1))
    assert not contains(r, (1, 1.5))
    assert outside_distance(r, (1, 1.5)) > 0
    assert outside_distance(r, (0.5, 0.5)) == 0.0


def test_region_case_a():
    r = compute_region((2, 3, 1, 3))
    assert r.case_label == CaseLabel.A
    assert r.l_value == 1
    assert _vertex_set(r) == [(0, 0), (0, 1), (2, 0), (2, 1)]
    assert r.tradeoff_slope is None


def test_region_case_b():
    r = compute_region((2, 2, 3, 4))
    assert r.case_label == CaseLabel.B
    assert _vertex_set(r) == [(0, 0), (0, 3), (2, 0)]


def test_swapped_config_mirrors_vertices():
    r = compute_region((3, 4, 1, 2))
    assert r.swapped
    assert r.l_value == 1
    assert _vertex_set(r) == _mirror(_vertex_set(compute_region((1, 2, 3, 4))))


def test_previous_outer_bound_is_looser_in_case_c():
    outer = previous_outer_bound((1, 2, 3, 4))
    assert contains(outer, (1, 1.5))
    assert outer.halfplanes[2].a2 == pytest.approx(2.0 / 3.0)
    assert outer.halfplanes[2].b == pytest.approx(2.0)
    assert outer.tradeoff_slope is None
    assert not same_vertices(outer, compute_region((1, 2, 3, 4)))


def test_tradeoff_slope():
    assert tradeoff_slope((1, 2, 3, 4)) == pytest.approx(0.5)
    assert tradeoff_slope((2, 3, 4, 5)) == pytest.approx(2.0 / 3.0)
    with pytest.raises(ValueError):
        tradeoff_slope((2, 3, 1, 3))


def test_zero_over_zero_coefficient():
    # min(m2, n2) == L: the sum bound reads d1 + (d2 - L) <= min(m1, n1)
    r = compute_region((1, 3, 2, 3))
    assert r.halfplanes[2].a2 == pytest.approx(1.0)
    assert r.halfplanes[2].b == pytest.approx(1.0 + r.l_value)


@pytest.mark.parametrize("cfg", ALL_CONFIGS, ids=lambda c: "".join(map(str, c.as_tuple())))
def test_region_invariants(cfg):
    r = compute_region(cfg)
    m1, n1, m2, n2 = cfg.as_tuple()

    # vertices satisfy every constraint and the quadrant
    for v in r.vertices:
        assert v.d1 >= -1e-12 and v.d2 >= -1e-12
        assert all(h.slack(*v) >= -1e-12 for h in r.halfplanes)
    assert contains(r, (0, 0))

    # single-user points sit on the boundary
    assert contains(r, (min(m1, n1), 0))
    assert contains(r, (0, min(m2, n2)))
    assert not contains(r, (min(m1, n1) + 1e-6, 0))
    assert not contains(r, (0, min(m2, n2) + 1e-6))

    # exchanging the users mirrors the region
    assert _vertex_set(compute_region(cfg.swapped())) == _mirror(_vertex_set(r))

    norm = cfg if n1 <= n2 else cfg.swapped()
    assert r.l_value == min(norm.m1 + norm.m2, norm.n1) - min(norm.m1, norm.n1)


@pytest.mark.parametrize("cfg", ALL_CONFIGS, ids=lambda c: "".join(map(str, c.as_tuple())))
def test_more_receive_antennas_never_shrink(cfg):
    r = compute_region(cfg)
    m1, n1, m2, n2 = cfg.as_tuple()
    for bigger in (AntennaConfig(m1, n1 + 1, m2, n2), AntennaConfig(m1, n1, m2, n2 + 1)):
        big = compute_region(bigger)
        assert all(contains(big, v) for v in r.vertices)


@pytest.mark.parametrize("cfg", ALL_CONFIGS, ids=lambda c: "".join(map(str, c.as_tuple())))
def test_outer_bound_relation(cfg):
    exact = compute_region(cfg)
    outer = previous_outer_bound(cfg)
    assert all(contains(outer, v) for v in exact.vertices)
    norm = cfg if cfg.n1 <= cfg.n2 else cfg.swapped()
    if exact.case_label in (CaseLabel.A, CaseLabel.B):
        assert same_vertices(exact, outer)
    else:
        # in case C the two coincide only when both receivers see n1 = min(m2, n2)
        assert same_vertices(exact, outer) == (norm.n1 == min(norm.m2, norm.n2))


def test_polygon_vertices_counterclockwise_from_origin():
    verts = polygon_vertices([HalfPlane(1, 0, 2), HalfPlane(0, 1, 1)])
    assert verts[0] == DofPair(0, 0)
    pts = np.asarray(verts)
    area = 0.5 * np.sum(pts[:, 0] * np.roll(pts[:, 1], -1) - np.roll(pts[:, 0], -1) * pts[:, 1])
    assert area == pytest.approx(2.0)


def test_dominant_face_and_weighted_sum():
    r = compute_region((1, 2, 3, 4))
    assert list(dominant_face(r)) == [DofPair(1, 1), DofPair(0, 3)]
    assert max_weighted_sum(r, 1, 1) == pytest.approx(3.0)
    assert max_weighted_sum(r, 1, 0) == pytest.approx(1.0)


def test_boundary_polyline_is_closed():
    r = compute_region((1, 2, 3, 4))
    line = boundary_polyline(r, points_per_edge=4)
    assert line.shape == (4 * 4 + 1, 2)
    assert np.allclose(line[0], line[-1])
    assert all(contains(r, p, tol=1e-9) for p in line)
    with pytest.raises(ValueError):
        boundary_polyline(r, points_per_edge=0)


def test_region_to_dict():
    d = compute_region((1, 2, 3, 4)).to_dict()
    assert d["case"] == "C"
    assert d["L"] == 1
    assert d["mu"] == pytest.approx(0.5)
    assert d["vertices"][0] == [0.0, 0.0]
