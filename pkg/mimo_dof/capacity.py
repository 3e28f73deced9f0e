"""Mutual-information machinery: ergodic log-det rates, MAC pentagons, finite-SNR
achievable regions, discrete-input MI, I-MMSE utilities and Gaussian-gap constants.

Rates are in bits per channel use unless a docstring says nats. Every Monte Carlo
quantity is returned as an ``Estimate``; quantities evaluated on a grid of SNRs share
channel draws across the grid.
"""
import itertools
import logging
from typing import NamedTuple

import numpy as np
import scipy.linalg as sla
from scipy import integrate
from scipy.spatial import ConvexHull, QhullError
from scipy.special import expit, logsumexp
from scipy.stats import norm

from . import cxmat
from .models import AntennaConfig, FadingLaw
from .montecarlo import DEFAULT_TRIALS, Estimate, run_trials
from .randmat import sample_block, sample_channel, sample_link
from .region import CaseLabel, HalfPlane, classify_case, polygon_vertices, tradeoff_slope

logger = logging.getLogger(__name__)

SNR_DB_DEFAULT = (30.0, 35.0, 40.0)
MAX_CONSTELLATION = 16
MAX_INPUT_DIM = 2
MAX_PRODUCT_POINTS = 256
QUAD_TOL = 1e-10

LN2 = np.log(2.0)


class RatePair(NamedTuple):
    r1: float
    r2: float


def db_to_linear(db):
    return 10.0 ** (np.asarray(db, dtype=float) / 10.0)


def c_star(m, n):
    """Worst-case loss of Gaussian input against any input on an n x m channel, in bits."""
    if m < 1 or n < 1:
        raise ValueError(f"antenna counts must be >= 1, got ({m}, {n})")
    k = min(m, n)
    return float(k * np.log2(1.0 + m / k))


def _coerce(cfg):
    return cfg if isinstance(cfg, AntennaConfig) else AntennaConfig(*cfg)


def _gamma_grid(gammas):
    g = np.atleast_1d(np.asarray(gammas, dtype=float))
    if np.any(g < 0) or not np.all(np.isfinite(g)):
        raise ValueError("SNR values must be finite and non-negative")
    return g


def _weighted_gram(draw, cfg, link_weights):
    """sum_links w * H H^H / M_t for links sharing one receiver."""
    receivers = {link[0] for link in link_weights}
    if len(receivers) != 1:
        raise ValueError(f"links {sorted(link_weights)} do not share a receiver")
    gram = None
    for link, w in link_weights.items():
        h = draw.link(int(link[0]), int(link[1]))
        term = (w / cfg.tx(int(link[1]))) * (h @ cxmat.adjoint(h))
        gram = term if gram is None else gram + term
    return gram


def _logdet_curve(gram, gammas, t):
    eye = cxmat.identity(gram.shape[0])
    return np.array([cxmat.logdet_hpd(eye + g * gram) for g in gammas]) / t


def ergodic_logdet_curve(rng, cfg, law, link_weights, gammas, trials=DEFAULT_TRIALS, workers=None):
    """E log2 det(I + sum_links w (gamma/M_t) H H^H) per symbol, one Estimate per gamma."""
    cfg = _coerce(cfg)
    law = law or FadingLaw.rayleigh()
    gammas = _gamma_grid(gammas)
    weights = {str(k): float(v) for k, v in dict(link_weights).items() if v != 0}
    if not weights:
        raise ValueError("link_weights must select at least one link")

    def trial(gen):
        draw = sample_block(gen, cfg, law)
        return _logdet_curve(_weighted_gram(draw, cfg, weights), gammas, law.coherence_t)

    values = run_trials(trial, rng, trials, workers)
    return [Estimate.from_samples(values[:, j]) for j in range(len(gammas))]


def ergodic_logdet_mi(rng, cfg, law, link_weights, gamma, trials=DEFAULT_TRIALS, workers=None):
    return ergodic_logdet_curve(rng, cfg, law, link_weights, [gamma], trials, workers)[0]


class MacBounds:
    """Gaussian-input MAC pentagon at one receiver and one SNR."""
    def __init__(self, receiver, gamma, r1, r2, sum):
        self.receiver = receiver
        self.gamma = gamma
        self.r1 = r1
        self.r2 = r2
        self.sum = sum

    def halfplanes(self):
        return [
            HalfPlane(1.0, 0.0, self.r1.mean),
            HalfPlane(0.0, 1.0, self.r2.mean),
            HalfPlane(1.0, 1.0, self.sum.mean),
        ]


def _mac_values(draw, cfg, receiver, gammas, t):
    own = {f"{receiver}1": 1.0}
    other = {f"{receiver}2": 1.0}
    g1 = _weighted_gram(draw, cfg, own)
    g2 = _weighted_gram(draw, cfg, other)
    return np.stack([
        _logdet_curve(g1, gammas, t),
        _logdet_curve(g2, gammas, t),
        _logdet_curve(g1 + g2, gammas, t),
    ])


def mac_bounds(rng, cfg, law, gammas, receivers=(1, 2), trials=DEFAULT_TRIALS, workers=None):
    """MAC pentagon bounds for each receiver and SNR from common channel draws.

    Returns ``{receiver: [MacBounds per gamma]}``.
    """
    cfg = _coerce(cfg)
    law = law or FadingLaw.rayleigh()
    gammas = _gamma_grid(gammas)
    receivers = tuple(int(r) for r in receivers)
    if any(r not in (1, 2) for r in receivers):
        raise ValueError(f"receivers must be 1 or 2, got {receivers}")

    def trial(gen):
        draw = sample_block(gen, cfg, law)
        return np.stack([_mac_values(draw, cfg, r, gammas, law.coherence_t) for r in receivers])

    values = run_trials(trial, rng, trials, workers)  # (trials, receivers, 3, gammas)
    out = {}
    for i, r in enumerate(receivers):
        out[r] = [
            MacBounds(r, float(g),
                      Estimate.from_samples(values[:, i, 0, j]),
                      Estimate.from_samples(values[:, i, 1, j]),
                      Estimate.from_samples(values[:, i, 2, j]))
            for j, g in enumerate(gammas)
        ]
    return out


def mac_region_at_snr(rng, cfg, law, receiver, gamma, trials=DEFAULT_TRIALS, workers=None):
    bounds = mac_bounds(rng, cfg, law, [gamma], receivers=(receiver,), trials=trials, workers=workers)
    return bounds[int(receiver)][0].halfplanes()


def _convex_hull(points):
    pts = np.unique(np.round(np.asarray(points, dtype=float), 12) + 0.0, axis=0)
    if len(pts) == 1:
        return [RatePair(*pts[0])]
    try:
        hull = ConvexHull(pts)
        ordered = pts[hull.vertices]
    except QhullError:
        logger.warning("achievable hull is degenerate; keeping the extreme points only")
        direction = pts[-1] - pts[0]
        proj = pts @ direction
        ordered = pts[[int(np.argmin(proj)), int(np.argmax(proj))]]
    start = int(np.lexsort((ordered[:, 0], ordered[:, 1]))[0])
    ordered = np.roll(ordered, -start, axis=0)
    return [RatePair(float(a), float(b)) for a, b in ordered]


def _intersection_corners(mac1, mac2):
    return polygon_vertices(mac1.halfplanes() + mac2.halfplanes())


def _achievable_points(mac1, mac2):
    pts = [(0.0, 0.0), (mac1.r1.mean, 0.0), (0.0, mac2.r2.mean)]
    pts.extend((v.d1, v.d2) for v in _intersection_corners(mac1, mac2))
    return pts


def achievable_region_at_snr(rng, cfg, law, gamma, trials=DEFAULT_TRIALS, workers=None):
    """Hull vertices of the rates reachable by single-user operation, by decoding both
    messages at both receivers (MAC1 ∩ MAC2), and by time sharing between them."""
    bounds = mac_bounds(rng, cfg, law, [gamma], trials=trials, workers=workers)
    return achievable_hull(bounds[1][0], bounds[2][0])


def achievable_hull(mac1, mac2):
    """Hull vertices for given MAC pentagons at receivers 1 and 2."""
    return _convex_hull(_achievable_points(mac1, mac2))


CORNERS = ("user1_alone", "user2_alone", "mac_max_r1", "mac_max_r2")


def achievable_corners(rng, cfg, law, gammas, trials=DEFAULT_TRIALS, workers=None):
    """Named corner trajectories of the achievable region across an SNR grid.

    Returns ``{name: [RatePair per gamma]}`` for the names in ``CORNERS``.
    """
    return corners_from_bounds(mac_bounds(rng, cfg, law, gammas, trials=trials, workers=workers))


def corners_from_bounds(bounds):
    """Corner trajectories from the output of ``mac_bounds`` (both receivers)."""
    out = {name: [] for name in CORNERS}
    for mac1, mac2 in zip(bounds[1], bounds[2]):
        out["user1_alone"].append(RatePair(mac1.r1.mean, 0.0))
        out["user2_alone"].append(RatePair(0.0, mac2.r2.mean))
        corners = _intersection_corners(mac1, mac2)
        best_r1 = max(corners, key=lambda v: (v.d1, v.d2))
        best_r2 = max(corners, key=lambda v: (v.d2, v.d1))
        out["mac_max_r1"].append(RatePair(best_r1.d1, best_r1.d2))
        out["mac_max_r2"].append(RatePair(best_r2.d1, best_r2.d2))
    return out


def dof_slope(rates):
    """Least-squares slope of rate against log2(1 + gamma) from ``(gamma, rate)`` pairs."""
    pts = [(float(g), float(r)) for g, r in rates]
    if len(pts) < 2:
        raise ValueError(f"slope needs at least 2 points, got {len(pts)}")
    g = np.array([p[0] for p in pts])
    if len(np.unique(g)) < 2:
        raise ValueError("slope needs at least 2 distinct SNR values")
    r = np.array([p[1] for p in pts])
    slope, _ = np.polyfit(np.log2(1.0 + g), r, 1)
    return float(slope)


def corner_slopes(gammas, corners):
    """DoF pair of each corner trajectory."""
    gammas = _gamma_grid(gammas)
    out = {}
    for name, traj in corners.items():
        out[name] = (dof_slope(zip(gammas, [p.r1 for p in traj])),
                     dof_slope(zip(gammas, [p.r2 for p in traj])))
    return out


# -- conditional Gaussian MI ------------------------------------------------------------

def stacked_link_sampler(law, rows_a, rows_b, m):
    """Sampler of an isotropic stacked pair ``[A; B]`` with ``rows_a + rows_b`` rows."""
    law = law or FadingLaw.rayleigh()

    def sample(gen):
        g = sample_link(gen, rows_a + rows_b, m, law)
        return g[:rows_a], g[rows_a:]

    return sample


def _check_covariances(sigma1, sigma2):
    sigma1 = cxmat.as_matrix(sigma1)
    sigma2 = np.zeros((0, 0), dtype=np.complex128) if sigma2 is None else np.asarray(sigma2, dtype=np.complex128)
    cxmat.cholesky_hpd(sigma1)
    if sigma2.size:
        cxmat.cholesky_hpd(sigma2)
    return sigma1, sigma2


def conditional_gaussian_closed_form(a, b, sigma1, sigma2, gamma, m):
    scale = gamma / m
    if b.shape[0] == 0:
        return cxmat.logdet_hpd(sigma1 + scale * a @ cxmat.adjoint(a)) - cxmat.logdet_hpd(sigma1)
    g = np.vstack([a, b])
    joint = cxmat.block_diag([sigma1, sigma2]) + scale * g @ cxmat.adjoint(g)
    return (cxmat.logdet_hpd(joint)
            - cxmat.logdet_hpd(sigma2 + scale * b @ cxmat.adjoint(b))
            - cxmat.logdet_hpd(sigma1))


def conditional_gaussian_mi(rng, a_b_law, sigma1, sigma2, gamma, m, trials=DEFAULT_TRIALS, workers=None):
    """E I(AX+u1; X | BX+u2, A, B) for X ~ CN(0, (gamma/m) I) via the log-det closed form."""
    sigma1, sigma2 = _check_covariances(sigma1, sigma2)

    def trial(gen):
        a, b = a_b_law(gen)
        return conditional_gaussian_closed_form(np.asarray(a), np.asarray(b), sigma1, sigma2, gamma, m)

    return Estimate.from_samples(run_trials(trial, rng, trials, workers))


def _cgauss_logpdf(v, cov_chol):
    """log density (nats) of CN(0, K) at v given the lower Cholesky factor of K."""
    s = sla.solve_triangular(cov_chol, v, lower=True, check_finite=False)
    n = v.shape[0]
    return float(-n * np.log(np.pi) - 2.0 * np.sum(np.log(np.real(np.diag(cov_chol))))
                 - np.real(np.vdot(s, s)))


def _cgauss_noise(gen, chol):
    n = chol.shape[0]
    w = (gen.standard_normal(n) + 1j * gen.standard_normal(n)) / np.sqrt(2.0)
    return chol @ w


def gaussian_conditional_mi_mc(rng, a_b_law, sigma1, sigma2, gamma, m, trials=DEFAULT_TRIALS, workers=None):
    """Information-density Monte Carlo of the same conditional MI with Gaussian input.

    Unbiased for the closed form of ``conditional_gaussian_mi``; used as a sanity check
    of the paired-density bookkeeping shared with ``conditional_discrete_mi``.
    """
    sigma1, sigma2 = _check_covariances(sigma1, sigma2)
    scale = gamma / m
    has_b = sigma2.shape[0] > 0
    sigma = cxmat.block_diag([sigma1, sigma2]) if has_b else sigma1
    chol_sigma = cxmat.cholesky_hpd(sigma)
    chol_sigma2 = cxmat.cholesky_hpd(sigma2) if has_b else None

    def trial(gen):
        a, b = a_b_law(gen)
        g = np.vstack([a, b]) if has_b else np.asarray(a)
        x = np.sqrt(scale) * (gen.standard_normal(m) + 1j * gen.standard_normal(m)) / np.sqrt(2.0)
        noise = _cgauss_noise(gen, chol_sigma)
        out = g @ x + noise
        joint_cov = cxmat.cholesky_hpd(sigma + scale * g @ cxmat.adjoint(g))
        dens = _cgauss_logpdf(noise, chol_sigma) - _cgauss_logpdf(out, joint_cov)
        if has_b:
            rb = a.shape[0]
            z_cov = cxmat.cholesky_hpd(sigma2 + scale * b @ cxmat.adjoint(b))
            dens -= _cgauss_logpdf(noise[rb:], chol_sigma2) - _cgauss_logpdf(out[rb:], z_cov)
        return dens / LN2

    return Estimate.from_samples(run_trials(trial, rng, trials, workers))


# -- discrete inputs --------------------------------------------------------------------

BPSK = np.array([1.0, -1.0], dtype=np.complex128)
QPSK = np.array([1 + 1j, 1 - 1j, -1 + 1j, -1 - 1j], dtype=np.complex128) / np.sqrt(2.0)


def product_constellation(constellation, m, gamma):
    """All |S|^m input vectors, scaled so the average codeword power is gamma."""
    s = np.asarray(constellation, dtype=np.complex128).ravel()
    if s.size == 0:
        raise ValueError("constellation is empty")
    if s.size > MAX_CONSTELLATION or m > MAX_INPUT_DIM or s.size ** m > MAX_PRODUCT_POINTS:
        raise ValueError(f"constellation of size {s.size} on {m} antennas exceeds the "
                         f"tractable limit (|S| <= {MAX_CONSTELLATION}, M <= {MAX_INPUT_DIM}, "
                         f"|S|^M <= {MAX_PRODUCT_POINTS})")
    energy = np.mean(np.abs(s) ** 2)
    if energy <= 0:
        raise ValueError("constellation has zero energy")
    s = s * np.sqrt(gamma / (m * energy))
    return np.array(list(itertools.product(s, repeat=m)), dtype=np.complex128)


def _posterior_information(y, h, points):
    """log2|S| - H(X | y) for whitened y = h x + CN(0, I), in bits.

    The conditional expectation of the information density given y; bounded by log2|S|.
    """
    d = np.sum(np.abs(y[np.newaxis, :] - points @ h.T) ** 2, axis=1)
    logp = -d - logsumexp(-d)
    return float((np.log(len(points)) + np.sum(np.exp(logp) * logp)) / LN2)


def discrete_input_mi(rng, channel_sampler, constellation, gamma, trials=DEFAULT_TRIALS,
                      noise_cov=None, workers=None):
    """I(Y;X|H) for X uniform on the product constellation, Y = HX + CN(0, noise_cov)."""
    probe = np.asarray(channel_sampler(np.random.default_rng(0)))
    n, m = probe.shape
    points = product_constellation(constellation, m, gamma)
    chol = cxmat.cholesky_hpd(cxmat.identity(n) if noise_cov is None else noise_cov)

    def trial(gen):
        h = cxmat.as_matrix(channel_sampler(gen))
        idx = int(gen.integers(len(points)))
        y = h @ points[idx] + _cgauss_noise(gen, chol)
        hw = sla.solve_triangular(chol, h, lower=True, check_finite=False)
        yw = sla.solve_triangular(chol, y, lower=True, check_finite=False)
        return _posterior_information(yw, hw, points)

    return Estimate.from_samples(run_trials(trial, rng, trials, workers))


def conditional_discrete_mi(rng, a_b_law, constellation, gamma, sigma1, sigma2,
                            trials=DEFAULT_TRIALS, workers=None):
    """I(Y;X|Z,A,B) = I(Y,Z;X|A,B) - I(Z;X|B) = H(X|Z,B) - H(X|Y,Z,A,B)."""
    sigma1, sigma2 = _check_covariances(sigma1, sigma2)
    has_b = sigma2.shape[0] > 0
    chol = cxmat.cholesky_hpd(cxmat.block_diag([sigma1, sigma2]) if has_b else sigma1)
    chol2 = cxmat.cholesky_hpd(sigma2) if has_b else None
    a0, _ = a_b_law(np.random.default_rng(0))
    m = np.asarray(a0).shape[1]
    points = product_constellation(constellation, m, gamma)

    def trial(gen):
        a, b = a_b_law(gen)
        g = np.vstack([a, b]) if has_b else np.asarray(a)
        idx = int(gen.integers(len(points)))
        out = g @ points[idx] + _cgauss_noise(gen, chol)
        value = _posterior_information(sla.solve_triangular(chol, out, lower=True),
                                       sla.solve_triangular(chol, g, lower=True), points)
        if has_b:
            rb = np.asarray(a).shape[0]
            value -= _posterior_information(sla.solve_triangular(chol2, out[rb:], lower=True),
                                            sla.solve_triangular(chol2, np.asarray(b), lower=True), points)
        return value

    return Estimate.from_samples(run_trials(trial, rng, trials, workers))


def _bpsk_window(gamma):
    a = np.sqrt(gamma)
    sd = np.sqrt(0.5)
    lo, hi = a - 12 * sd, a + 12 * sd
    return a, sd, lo, hi, ([0.0] if lo < 0.0 < hi else None)


def bpsk_mi_quadrature(gamma):
    """BPSK (±sqrt(gamma)) mutual information over CN(0,1) noise, in bits, by quadrature."""
    if gamma < 0:
        raise ValueError(f"gamma must be non-negative, got {gamma}")
    if gamma == 0:
        return 0.0
    a, sd, lo, hi, points = _bpsk_window(gamma)

    def integrand(y):
        return norm.pdf(y, loc=a, scale=sd) * np.logaddexp(0.0, -4.0 * a * y)

    loss, _ = integrate.quad(integrand, lo, hi, epsabs=QUAD_TOL, epsrel=QUAD_TOL, limit=200, points=points)
    return float(1.0 - loss / LN2)


def _bpsk_equivocation_bits(a, y):
    """H(X | Re y = y) of a ±a BPSK symbol, in bits."""
    u = 4.0 * a * y
    p = expit(-u)
    return (p * np.logaddexp(0.0, u) + (1.0 - p) * np.logaddexp(0.0, -u)) / LN2


def bpsk_mi_sample_std(gamma):
    """Per-trial standard deviation of the scalar BPSK estimate of ``discrete_input_mi``.

    Evaluated by quadrature, so Monte Carlo margins at high SNR do not rely on the sample
    spread of a rare-event estimate.
    """
    if gamma < 0:
        raise ValueError(f"gamma must be non-negative, got {gamma}")
    if gamma == 0:
        return 0.0
    a, sd, lo, hi, points = _bpsk_window(gamma)

    def moment(k):
        val, _ = integrate.quad(lambda y: norm.pdf(y, loc=a, scale=sd) * _bpsk_equivocation_bits(a, y) ** k,
                                lo, hi, epsabs=1e-14, epsrel=QUAD_TOL, limit=200, points=points)
        return val

    return float(np.sqrt(max(0.0, moment(2) - moment(1) ** 2)))


# -- I-MMSE ----------------------------------------------------------------------------

def _ln_cosh(x):
    return np.logaddexp(x, -x) - np.log(2.0)


def _bpsk_real_mi_nats(s):
    """I(snr) = snr - E ln cosh(snr - sqrt(snr) Z) for a unit BPSK over N(0,1) noise."""
    if s == 0:
        return 0.0
    val, _ = integrate.quad(lambda z: norm.pdf(z) * _ln_cosh(s - np.sqrt(s) * z),
                            -np.inf, np.inf, epsabs=QUAD_TOL, epsrel=QUAD_TOL, limit=200)
    return float(s - val)


def bpsk_mmse(s):
    """MMSE of a unit BPSK symbol over a real Gaussian channel at SNR s."""
    if s == 0:
        return 1.0
    val, _ = integrate.quad(lambda z: norm.pdf(z) * np.tanh(s - np.sqrt(s) * z),
                            -np.inf, np.inf, epsabs=QUAD_TOL, epsrel=QUAD_TOL, limit=200)
    return float(1.0 - val)


def immse_check(rho, t, input_kind="gaussian"):
    """Mutual information at SNR t two ways: closed form, and the integral of the MMSE.

    Scalar complex channel ``y = sqrt(tau) x + CN(0,1)`` with input power rho; both values
    in nats. ``input_kind`` is ``"gaussian"`` or ``"bpsk"``.
    """
    if rho < 0 or t < 0:
        raise ValueError(f"rho and t must be non-negative, got rho={rho}, t={t}")
    if input_kind == "gaussian":
        direct = float(np.log1p(t * rho))
        if t == 0:
            return direct, 0.0
        integrated, _ = integrate.quad(lambda tau: rho / (1.0 + tau * rho), 0.0, t,
                                       epsabs=QUAD_TOL, epsrel=QUAD_TOL)
        return direct, float(integrated)
    if input_kind == "bpsk":
        # complex channel with BPSK on the real axis is a real channel at SNR 2*tau*rho
        direct = _bpsk_real_mi_nats(2.0 * t * rho)
        if t == 0:
            return direct, 0.0
        integrated, _ = integrate.quad(lambda tau: rho * bpsk_mmse(2.0 * tau * rho), 0.0, t,
                                       epsabs=1e-9, epsrel=1e-9, limit=200)
        return direct, float(integrated)
    raise ValueError(f"unknown input {input_kind!r}; expected 'gaussian' or 'bpsk'")


# -- Gaussian-gap constants -------------------------------------------------------------

class GapConstants:
    """Gap terms of the finite-SNR weighted outer bound, in bits.

    ``delta_case_c`` is only set for case-C configurations.
    """
    def __init__(self, c_star, delta1, delta2, delta3, delta_total, delta_case_c=None):
        self.c_star = c_star
        self.delta1 = delta1
        self.delta2 = delta2
        self.delta3 = delta3
        self.delta_total = delta_total
        self.delta_case_c = delta_case_c

    def to_dict(self):
        out = {
            "c_star": self.c_star,
            "delta1": self.delta1.to_dict(),
            "delta2": self.delta2.to_dict(),
            "delta3": self.delta3.to_dict(),
            "delta_total": self.delta_total.to_dict(),
        }
        if self.delta_case_c is not None:
            out["delta_case_c"] = self.delta_case_c.to_dict()
        return out


def _log_plus_det(lam):
    return max(0.0, float(np.sum(np.log2(lam))))


def _log_plus_inv_min(lam):
    return float(np.sum(np.maximum(0.0, -np.log2(lam))))


def gap_constants(rng, cfg, law, trials=DEFAULT_TRIALS, workers=None):
    """Monte Carlo gap terms of the finite-SNR weighted outer bound (users normalized so n1 <= n2)."""
    cfg = _coerce(cfg)
    law = law or FadingLaw.rayleigh()
    norm_cfg = cfg.swapped() if cfg.n1 > cfg.n2 else cfg
    case, _ = classify_case(norm_cfg)
    cs = c_star(norm_cfg.m1, norm_cfg.n1)
    coef = min(norm_cfg.m2, norm_cfg.n1) / min(norm_cfg.m2, norm_cfg.n2)
    mu = tradeoff_slope(norm_cfg) if case == CaseLabel.C else 0.0

    def trial(gen):
        draw = sample_channel(gen, norm_cfg, law)
        lam12 = cxmat.singular_values(draw.h12)
        lam22 = cxmat.singular_values(draw.h22)
        d1 = 2.0 * _log_plus_inv_min(lam12)
        d2 = 2.0 * _log_plus_det(lam22) + 2.0 * _log_plus_inv_min(lam22)
        d3 = 2.0 * _log_plus_det(lam12) + 2.0 * _log_plus_inv_min(lam12)
        return [d1, d2, d3, cs + d1 + coef * d2, cs + d1 + d3 + mu * d2]

    values = run_trials(trial, rng, trials, workers)
    return GapConstants(
        c_star=cs,
        delta1=Estimate.from_samples(values[:, 0]),
        delta2=Estimate.from_samples(values[:, 1]),
        delta3=Estimate.from_samples(values[:, 2]),
        delta_total=Estimate.from_samples(values[:, 3]),
        delta_case_c=Estimate.from_samples(values[:, 4]) if case == CaseLabel.C else None,
    )
