"""Exact DoF region of the two-user MIMO interference channel without CSIT.

Regions are computed for the orientation with ``n1 <= n2``; a config with ``n1 > n2``
is handled by exchanging the users and mirroring the result back. ``l_value`` and
``tradeoff_slope`` always refer to the normalized orientation.
"""
import logging
from typing import NamedTuple

import numpy as np

from .models import AntennaConfig

logger = logging.getLogger(__name__)

TAU_MEM = 1e-9
TAU_DEDUP = 1e-9
_DECIMALS = 12


class CaseLabel:
    """Labels of the three antenna regimes of the region formula."""
    A = "A"
    B = "B"
    C = "C"


class DofPair(NamedTuple):
    d1: float
    d2: float


class HalfPlane(NamedTuple):
    """``a1*d1 + a2*d2 <= b``."""
    a1: float
    a2: float
    b: float

    def slack(self, d1, d2):
        return self.b - (self.a1 * d1 + self.a2 * d2)

    def mirrored(self):
        return HalfPlane(self.a2, self.a1, self.b)

    def to_dict(self):
        return {"a1": float(self.a1), "a2": float(self.a2), "b": float(self.b)}


_NONNEG = (HalfPlane(-1.0, 0.0, 0.0), HalfPlane(0.0, -1.0, 0.0))


class DofRegion:
    """Exact (or bounding) DoF polygon of one antenna configuration.

    Parameters
    ----------
    config : AntennaConfig
        The configuration as given, before any exchange of the users.
    swapped : bool
        True when the users were exchanged because ``n1 > n2``.
    case_label : str
        One of ``CaseLabel.A``, ``CaseLabel.B``, ``CaseLabel.C``.
    l_value : int
        ``L`` of the normalized orientation.
    tradeoff_slope : float or None
        Case-C slope, otherwise None.
    halfplanes, vertices : tuple
        Region constraints and counterclockwise vertices starting at the origin.
    """
    def __init__(self, config, swapped, case_label, l_value, tradeoff_slope, halfplanes, vertices):
        self.config = config
        self.swapped = swapped
        self.case_label = case_label
        self.l_value = l_value
        self.tradeoff_slope = tradeoff_slope
        self.halfplanes = tuple(halfplanes)
        self.vertices = tuple(vertices)

    def to_dict(self):
        return {
            "config": list(self.config.as_tuple()),
            "swapped": bool(self.swapped),
            "case": self.case_label,
            "L": int(self.l_value),
            "mu": None if self.tradeoff_slope is None else float(self.tradeoff_slope),
            "halfplanes": [h.to_dict() for h in self.halfplanes],
            "vertices": [[float(v.d1), float(v.d2)] for v in self.vertices],
        }


def _coerce(cfg):
    return cfg if isinstance(cfg, AntennaConfig) else AntennaConfig(*cfg)


def _normalize(cfg):
    cfg = _coerce(cfg)
    if cfg.n1 > cfg.n2:
        return cfg.swapped(), True
    return cfg, False


def _case_of(c):
    if c.m2 <= c.n1:
        return CaseLabel.A
    if c.m1 >= c.n1:
        return CaseLabel.B
    return CaseLabel.C


def _l_of(c):
    return min(c.m1 + c.m2, c.n1) - min(c.m1, c.n1)


def classify_case(cfg):
    """Return ``(case_label, swapped)``."""
    norm, swapped = _normalize(cfg)
    return _case_of(norm), swapped


def polygon_vertices(halfplanes, tol=TAU_DEDUP):
    """Vertices of the bounded intersection of ``halfplanes`` with the nonnegative quadrant.

    Pairwise line intersections filtered by feasibility, deduplicated and ordered
    counterclockwise starting at the origin (or the lowest-then-leftmost point).
    """
    planes = list(halfplanes) + list(_NONNEG)
    pts = []
    for i in range(len(planes)):
        a1, b1, c1 = planes[i]
        for j in range(i + 1, len(planes)):
            a2, b2, c2 = planes[j]
            det = a1 * b2 - a2 * b1
            if abs(det) < 1e-14:
                continue
            x = (c1 * b2 - c2 * b1) / det
            y = (a1 * c2 - a2 * c1) / det
            if all(h.slack(x, y) >= -tol for h in planes):
                pts.append((x, y))
    if not pts:
        return ()
    pts = np.round(np.asarray(pts, dtype=float), _DECIMALS) + 0.0
    unique = []
    for p in pts[np.lexsort((pts[:, 1], pts[:, 0]))]:
        if all(np.max(np.abs(p - q)) > tol for q in unique):
            unique.append(p)
    return _counterclockwise(np.asarray(unique))


def _counterclockwise(pts):
    if len(pts) < 3:
        return tuple(DofPair(float(x), float(y)) for x, y in pts)
    center = pts.mean(axis=0)
    ang = np.arctan2(pts[:, 1] - center[1], pts[:, 0] - center[0])
    ordered = pts[np.argsort(ang)]
    start = int(np.lexsort((ordered[:, 0], ordered[:, 1]))[0])
    ordered = np.roll(ordered, -start, axis=0)
    return tuple(DofPair(float(x), float(y)) for x, y in ordered)


def _build(cfg, norm, swapped, halfplanes, case_label, l_value, mu):
    if swapped:
        halfplanes = [h.mirrored() for h in halfplanes]
        logger.debug("config %s evaluated with users exchanged", cfg.as_tuple())
    return DofRegion(
        config=cfg,
        swapped=swapped,
        case_label=case_label,
        l_value=l_value,
        tradeoff_slope=mu,
        halfplanes=tuple(halfplanes),
        vertices=polygon_vertices(halfplanes),
    )


def _tradeoff_coefficient(c, l_value):
    denom = min(c.m2, c.n2) - l_value
    if denom == 0:
        # 0/0 = 1: the numerator min(m2,n1) - L is squeezed to zero as well
        return 1.0
    return (min(c.m2, c.n1) - l_value) / denom


def compute_region(cfg):
    cfg = _coerce(cfg)
    norm, swapped = _normalize(cfg)
    case_label = _case_of(norm)
    l_value = _l_of(norm)
    coef = _tradeoff_coefficient(norm, l_value)
    d1_max = min(norm.m1, norm.n1)
    halfplanes = [
        HalfPlane(1.0, 0.0, float(d1_max)),
        HalfPlane(0.0, 1.0, float(min(norm.m2, norm.n2))),
        HalfPlane(1.0, coef, d1_max + coef * l_value),
    ]
    mu = _slope_of(norm, l_value) if case_label == CaseLabel.C else None
    return _build(cfg, norm, swapped, halfplanes, case_label, l_value, mu)


def _slope_of(c, l_value):
    return c.m1 / (min(c.m2, c.n2) - l_value)


def tradeoff_slope(cfg):
    """Rate at which d1 is traded for d2 above the corner (m1, L) in case C."""
    norm, _ = _normalize(cfg)
    if _case_of(norm) != CaseLabel.C:
        raise ValueError(f"trade-off slope is only defined in case C, config {_coerce(cfg).as_tuple()} "
                         f"is case {_case_of(norm)}")
    return _slope_of(norm, _l_of(norm))


def previous_outer_bound(cfg):
    """Earlier outer bound, strictly looser than the exact region in case C when n1 < min(m2, n2)."""
    cfg = _coerce(cfg)
    norm, swapped = _normalize(cfg)
    halfplanes = [
        HalfPlane(1.0, 0.0, float(min(norm.m1, norm.n1))),
        HalfPlane(0.0, 1.0, float(min(norm.m2, norm.n2))),
        HalfPlane(1.0, min(norm.m2, norm.n1) / min(norm.m2, norm.n2),
                  float(min(norm.m1 + norm.m2, norm.n1))),
    ]
    return _build(cfg, norm, swapped, halfplanes, _case_of(norm), _l_of(norm), None)


def _point(p):
    d1, d2 = p
    return float(d1), float(d2)


def contains(region, p, tol=TAU_MEM):
    d1, d2 = _point(p)
    if d1 < -tol or d2 < -tol:
        return False
    return all(h.slack(d1, d2) >= -tol for h in region.halfplanes)


def outside_distance(region, p):
    """Largest Euclidean violation of any half-plane (0 inside the region)."""
    d1, d2 = _point(p)
    worst = 0.0
    for h in tuple(region.halfplanes) + _NONNEG:
        worst = max(worst, -h.slack(d1, d2) / np.hypot(h.a1, h.a2))
    return float(worst)


def same_vertices(a, b, tol=TAU_DEDUP):
    va = sorted(a.vertices)
    vb = sorted(b.vertices)
    if len(va) != len(vb):
        return False
    return all(abs(p.d1 - q.d1) <= tol and abs(p.d2 - q.d2) <= tol for p, q in zip(va, vb))


def dominant_face(region):
    """Pareto-optimal vertices ordered by increasing d2."""
    verts = list(region.vertices)
    face = []
    for v in verts:
        dominated = any(
            w.d1 >= v.d1 - TAU_DEDUP and w.d2 >= v.d2 - TAU_DEDUP
            and (w.d1 > v.d1 + TAU_DEDUP or w.d2 > v.d2 + TAU_DEDUP)
            for w in verts
        )
        if not dominated:
            face.append(v)
    return tuple(sorted(face, key=lambda v: (v.d2, -v.d1)))


def max_weighted_sum(region, w1, w2):
    """max of ``w1*d1 + w2*d2`` over the region."""
    return max(w1 * v.d1 + w2 * v.d2 for v in region.vertices)


def boundary_polyline(region, points_per_edge=16):
    """Closed boundary sampled uniformly along each edge, shape ``(n, 2)``."""
    if points_per_edge < 1:
        raise ValueError("points_per_edge must be >= 1")
    verts = np.asarray(region.vertices, dtype=float)
    nxt = np.roll(verts, -1, axis=0)
    t = np.arange(points_per_edge, dtype=float)[:, np.newaxis] / points_per_edge
    pieces = [a + t * (b - a) for a, b in zip(verts, nxt)]
    pieces.append(verts[:1])
    return np.vstack(pieces)
