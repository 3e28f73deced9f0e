"""Statistical verification suites.

Each suite turns one claim about the channel model into a list of numeric checks
collected in a ``SuiteReport``. Stochastic comparisons use 3 standard errors; families of
many moment comparisons use a multiplicity-corrected z threshold so that a whole family
keeps the false-alarm rate of a single 3-sigma test.
"""
import logging
import warnings

import numpy as np
import scipy.linalg as sla
from scipy.stats import norm

from . import capacity, cxmat, region
from .models import AntennaConfig, FadingLaw
from .montecarlo import Estimate, combined_std_err, run_trials
from .randmat import (RngStream, isotropic_scramble, sample_conditioned_stiefel, sample_ginibre,
                      sample_link, sample_stiefel)

logger = logging.getLogger(__name__)

Z_SIGMA = 3.0
SINGLE_TEST_ALPHA = 0.00135
SLOPE_TOL = 0.1
QUAD_FLOOR = 1e-9


def z_threshold(n_tests):
    """z level whose family-wise false-alarm rate matches one 3-sigma test."""
    return float(norm.isf(SINGLE_TEST_ALPHA / max(1, int(n_tests))))


def bernstein_margin(sigma, value_range, trials, alpha=2 * SINGLE_TEST_ALPHA):
    """Two-sided deviation bound of a mean of ``trials`` samples confined to an interval
    of width ``value_range`` with standard deviation ``sigma``, at level ``alpha``.

    Holds without a normal approximation, so it stays valid for rare-event samples.
    """
    log_term = np.log(2.0 / alpha)
    return float(np.sqrt(2.0 * sigma ** 2 * log_term / trials) + 2.0 * value_range * log_term / (3.0 * trials))


class Check:
    def __init__(self, description, observed, bound, margin, relation, passed):
        self.description = description
        self.observed = observed
        self.bound = bound
        self.margin = margin
        self.relation = relation
        self.passed = passed

    def to_dict(self):
        return {
            "description": self.description,
            "observed": float(self.observed),
            "bound_or_target": float(self.bound),
            "margin": float(self.margin),
            "relation": self.relation,
            "pass": bool(self.passed),
        }


class SuiteReport:
    def __init__(self, suite_name, seed=None, trials=None):
        self.suite_name = suite_name
        self.seed = seed
        self.trials = trials
        self.checks = []

    def add_check(self, description, observed, bound, margin=0.0, relation="<="):
        """Record ``observed <relation> bound`` allowing ``margin``; returns the outcome."""
        observed = float(observed)
        bound = float(bound)
        margin = float(margin)
        if relation == "<=":
            passed = observed <= bound + margin
        elif relation == ">=":
            passed = observed >= bound - margin
        elif relation == "approx":
            passed = abs(observed - bound) <= margin
        else:
            raise ValueError(f"unknown relation {relation!r}")
        passed = bool(passed and np.isfinite(observed))
        self.checks.append(Check(description, observed, bound, margin, relation, passed))
        log = logger.debug if passed else logger.warning
        log("[%s] %s: %.6g %s %.6g (margin %.3g) -> %s", self.suite_name, description,
            observed, relation, bound, margin, "pass" if passed else "FAIL")
        return passed

    def merge(self, other):
        self.checks.extend(other.checks)
        return self

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def summary(self):
        failures = [c.description for c in self.checks if not c.passed]
        return len(self.checks) - len(failures), len(self.checks), failures

    def to_dict(self):
        return {
            "suite_name": self.suite_name,
            "seed": self.seed,
            "trials": self.trials,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def _as_stream(rng):
    if isinstance(rng, RngStream):
        return rng
    return RngStream(int(rng))


def _cfg(cfg):
    return cfg if isinstance(cfg, AntennaConfig) else AntennaConfig(*cfg)


def _ar_covariance(n, rho=0.3):
    return sla.toeplitz(rho ** np.arange(n)).astype(np.complex128)


# -- Gaussian input is not too bad ---------------------------------------------------------

# fixed full-rank 2x2 link with unequal singular values
FIXED_CHANNEL_22 = np.array([[1.0, 0.5j], [0.3, 0.8 - 0.2j]], dtype=np.complex128)


def check_theorem2(rng, gamma_grid=(0.1, 1.0, 10.0, 100.0), trials=10_000, workers=None):
    """Discrete input never beats Gaussian input by more than C*."""
    stream = _as_stream(rng)
    report = SuiteReport("theorem2", stream.base_seed, trials)

    def unit(gen):
        return np.ones((1, 1), dtype=np.complex128)

    def fixed22(gen):
        return FIXED_CHANNEL_22

    def rayleigh22(gen):
        return sample_ginibre(gen, 2, 2)

    cfg22 = AntennaConfig(2, 2, 2, 2)
    fixed_gram = FIXED_CHANNEL_22 @ cxmat.adjoint(FIXED_CHANNEL_22)
    for j, gamma in enumerate(gamma_grid):
        oracle = capacity.bpsk_mi_quadrature(gamma)
        report.add_check(f"scalar BPSK gamma={gamma:g}: I_bpsk <= log2(1+gamma) + C*(1,1)",
                         oracle, np.log2(1.0 + gamma) + capacity.c_star(1, 1))
        mc = capacity.discrete_input_mi(stream.child(f"bpsk-{j}"), unit, capacity.BPSK, gamma,
                                        trials, workers=workers)
        # per-trial values lie in [0, 1] bit
        sigma = max(mc.std_err * np.sqrt(mc.trials), capacity.bpsk_mi_sample_std(gamma))
        report.add_check(f"scalar BPSK gamma={gamma:g}: Monte Carlo matches quadrature",
                         mc.mean, oracle, max(bernstein_margin(sigma, 1.0, mc.trials), QUAD_FLOOR), "approx")

        qpsk = capacity.discrete_input_mi(stream.child(f"qpsk-fixed-{j}"), fixed22, capacity.QPSK,
                                          gamma, trials, workers=workers)
        gauss = cxmat.logdet_hpd(cxmat.identity(2) + (gamma / 2.0) * fixed_gram)
        report.add_check(f"2x2 fixed QPSK gamma={gamma:g}: I_qpsk <= I_gauss + C*(2,2)",
                         qpsk.mean, gauss + capacity.c_star(2, 2), Z_SIGMA * qpsk.std_err)

        qpsk = capacity.discrete_input_mi(stream.child(f"qpsk-{j}"), rayleigh22, capacity.QPSK,
                                          gamma, trials, workers=workers)
        gauss = capacity.ergodic_logdet_mi(stream.child(f"gauss-{j}"), cfg22, FadingLaw.rayleigh(),
                                           {"11": 1.0}, gamma, trials, workers)
        report.add_check(f"2x2 Rayleigh QPSK gamma={gamma:g}: I_qpsk <= I_gauss + C*(2,2)",
                         qpsk.mean, gauss.mean + capacity.c_star(2, 2),
                         Z_SIGMA * combined_std_err(qpsk, gauss))
    return report


# -- amplitude bound ------------------------------------------------------------------------

def _gaussian_diag_mi(lam, rho):
    return float(np.sum(np.log2(1.0 + rho * lam ** 2)))


def _amplitude_terms(lam1, lam2, rho):
    lam_min = np.minimum(lam1, lam2)
    diff = _gaussian_diag_mi(lam2, rho) - _gaussian_diag_mi(lam1, rho)
    bound = 2.0 * float(np.sum(np.log2(lam2) - np.log2(lam_min)))
    loose = 2.0 * max(0.0, float(np.sum(np.log2(lam2)))) + 2.0 * max(0.0, -float(np.sum(np.log2(lam_min))))
    return diff, bound, loose


def check_lemma3(rng, trials=1000, dim=2, workers=None):
    """Changing amplitudes changes Gaussian-input MI by at most 2 log(det L2 / det Lmin)."""
    stream = _as_stream(rng)
    report = SuiteReport("lemma3", stream.base_seed, trials)

    same = np.array([0.5, 3.0])
    d, b, _ = _amplitude_terms(same, same, 1.0)
    report.add_check("equal amplitudes: difference and bound vanish", abs(d) + abs(b), 0.0, 1e-12, "approx")
    d, b, _ = _amplitude_terms(np.ones(2), 2.0 * np.ones(2), 1.0)
    report.add_check("L1=I, L2=2I: bound equals 4 bits", b, 4.0, 1e-12, "approx")
    report.add_check("L1=I, L2=2I: difference within bound", d, b)

    def trial(gen):
        lam1 = 10.0 ** gen.uniform(-1.0, 1.0, dim)
        lam2 = 10.0 ** gen.uniform(-1.0, 1.0, dim)
        rho = 10.0 ** gen.uniform(-1.0, 2.0)
        return _amplitude_terms(lam1, lam2, rho)

    values = run_trials(trial, stream.child("draws"), trials, workers)
    diff, bound, loose = values[:, 0], values[:, 1], values[:, 2]
    report.add_check("per-draw violations of the log-det-ratio bound",
                     int(np.sum(diff > bound + 1e-12)), 0)
    report.add_check("per-draw violations of the log-plus bound",
                     int(np.sum(bound > loose + 1e-12)), 0)
    slack = Estimate.from_samples(bound - diff)
    report.add_check("E[bound] - E[difference] >= 0", slack.mean, 0.0, Z_SIGMA * slack.std_err, ">=")
    loose_slack = Estimate.from_samples(loose - diff)
    report.add_check("E[log-plus bound] - E[difference] >= 0", loose_slack.mean, 0.0,
                     Z_SIGMA * loose_slack.std_err, ">=")
    return report


# -- MI per dimension -----------------------------------------------------------------------

def _input_covariance_root(m, snr):
    # non-white input so the per-dimension comparison is not an identity
    return np.diag(np.sqrt(snr * np.linspace(0.25, 1.75, m))).astype(np.complex128)


def _projected_mi(v, v3, kx_root):
    a = cxmat.adjoint(v) @ kx_root
    if v3 is None:
        b = np.zeros((0, kx_root.shape[0]), dtype=np.complex128)
        return capacity.conditional_gaussian_closed_form(a, b, cxmat.identity(a.shape[0]), None, 1.0, 1.0)
    b = cxmat.adjoint(v3) @ kx_root
    return capacity.conditional_gaussian_closed_form(a, b, cxmat.identity(a.shape[0]),
                                                     cxmat.identity(b.shape[0]), 1.0, 1.0)


def check_lemma4(rng, m=3, k1=1, k2=2, k3=0, trials=10_000, snr=10.0, workers=None):
    """Per-dimension MI through a uniform frame decreases with the frame size."""
    if not (1 <= k1 <= k2 <= m - k3) or k3 < 0:
        raise ValueError(f"need 1 <= k1 <= k2 <= m - k3, got m={m}, k1={k1}, k2={k2}, k3={k3}")
    stream = _as_stream(rng)
    report = SuiteReport("lemma4", stream.base_seed, trials)
    kx_root = _input_covariance_root(m, snr)

    def trial(gen):
        v3 = sample_stiefel(gen, m, k3) if k3 > 0 else None
        v1 = sample_conditioned_stiefel(gen, m, k1, v3)
        v2 = sample_conditioned_stiefel(gen, m, k2, v3)
        i1 = _projected_mi(v1, v3, kx_root)
        i2 = _projected_mi(v2, v3, kx_root)
        return [i1 / k1, i2 / k2, i1 / k1 - i2 / k2]

    values = run_trials(trial, stream.child(f"frames-{m}-{k1}-{k2}-{k3}"), trials, workers)
    gap = Estimate.from_samples(values[:, 2])
    label = f"m={m} k1={k1} k2={k2} k3={k3}"
    report.add_check(f"{label}: I1/k1 - I2/k2 >= 0", gap.mean, 0.0, Z_SIGMA * gap.std_err, ">=")
    return report


# -- Gaussian dominance ---------------------------------------------------------------------

def check_lemma5(rng, m=1, gamma_grid=(1.0, 10.0), trials=10_000, law=None, workers=None):
    """QPSK conditional MI stays below the Gaussian log-det closed form."""
    if m > capacity.MAX_INPUT_DIM:
        raise ValueError(f"discrete conditional MI is limited to m <= {capacity.MAX_INPUT_DIM}")
    stream = _as_stream(rng)
    report = SuiteReport("lemma5", stream.base_seed, trials)
    law = law or FadingLaw.fixed((1.0, 0.5))
    rows_a, rows_b = m, 1
    sampler = capacity.stacked_link_sampler(law, rows_a, rows_b, m)
    sigma1 = _ar_covariance(rows_a)
    sigma2 = np.eye(rows_b, dtype=np.complex128)
    for j, gamma in enumerate(gamma_grid):
        tag = f"m={m} gamma={gamma:g}"
        closed = capacity.conditional_gaussian_mi(stream.child(f"closed-{j}"), sampler, sigma1, sigma2,
                                                  gamma, m, trials, workers)
        qpsk = capacity.conditional_discrete_mi(stream.child(f"qpsk-{j}"), sampler, capacity.QPSK, gamma,
                                                sigma1, sigma2, trials, workers)
        report.add_check(f"{tag}: QPSK conditional MI <= Gaussian closed form",
                         qpsk.mean, closed.mean, Z_SIGMA * combined_std_err(qpsk, closed))
        dens = capacity.gaussian_conditional_mi_mc(stream.child(f"density-{j}"), sampler, sigma1, sigma2,
                                                   gamma, m, trials, workers)
        report.add_check(f"{tag}: Gaussian information density matches closed form",
                         dens.mean, closed.mean, Z_SIGMA * combined_std_err(dens, closed), "approx")
    return report


# -- DoF region -----------------------------------------------------------------------------

def _nearest(points, target):
    dists = [max(abs(p[0] - target[0]), abs(p[1] - target[1])) for p in points]
    i = int(np.argmin(dists))
    return points[i], dists[i]


def check_region_consistency(rng, cfg, law=None, gamma_grid=None, trials=10_000, workers=None):
    """High-SNR slopes of the achievable corners reproduce the exact DoF region."""
    cfg = _cfg(cfg)
    stream = _as_stream(rng)
    gammas = (capacity.db_to_linear(capacity.SNR_DB_DEFAULT) if gamma_grid is None
              else np.asarray(gamma_grid, dtype=float))
    report = SuiteReport("region", stream.base_seed, trials)
    exact = region.compute_region(cfg)
    tag = ",".join(str(v) for v in cfg.as_tuple())

    corners = capacity.achievable_corners(stream.child("corners"), cfg, law, gammas, trials, workers)
    slopes = capacity.corner_slopes(gammas, corners)
    for name, pair in slopes.items():
        report.add_check(f"({tag}) {name} slope {pair[0]:.3f},{pair[1]:.3f} inside the region",
                         region.outside_distance(exact, pair), 0.0, SLOPE_TOL)

    reachable = [(0.0, 0.0)] + list(slopes.values())
    for v in exact.vertices:
        _, dist = _nearest(reachable, v)
        report.add_check(f"({tag}) vertex ({v.d1:g},{v.d2:g}) reached by an achievable corner",
                         dist, 0.0, SLOPE_TOL)

    face = region.dominant_face(exact)
    for p, q in zip(face[:-1], face[1:]):
        sp, _ = _nearest(reachable, p)
        sq, _ = _nearest(reachable, q)
        mid = (0.5 * (sp[0] + sq[0]), 0.5 * (sp[1] + sq[1]))
        target = (0.5 * (p.d1 + q.d1), 0.5 * (p.d2 + q.d2))
        report.add_check(f"({tag}) time-sharing midpoint of ({p.d1:g},{p.d2:g})-({q.d1:g},{q.d2:g})",
                         max(abs(mid[0] - target[0]), abs(mid[1] - target[1])), 0.0, SLOPE_TOL)

    outer = region.previous_outer_bound(cfg)
    excess = max(region.outside_distance(exact, v) for v in outer.vertices)
    if region.same_vertices(exact, outer):
        report.add_check(f"({tag}) earlier outer bound coincides with the region", excess, 0.0, 1e-9, "approx")
    else:
        report.add_check(f"({tag}) earlier outer bound has a vertex outside the region",
                         excess, SLOPE_TOL, 0.0, ">=")
    return report


# -- coherence time -------------------------------------------------------------------------

def check_t_invariance(rng, cfg, law=None, t_values=(1, 2, 4), gamma_grid=(10.0, 100.0),
                       trials=5000, workers=None):
    """Per-symbol ergodic rates do not depend on the coherence time."""
    cfg = _cfg(cfg)
    law = law or FadingLaw.rayleigh()
    stream = _as_stream(rng)
    report = SuiteReport("t_invariance", stream.base_seed, trials)
    gammas = np.asarray(gamma_grid, dtype=float)
    quantities = {"single-user 1": {"11": 1.0}, "MAC sum at receiver 1": {"11": 1.0, "12": 1.0}}
    for qname, weights in quantities.items():
        base = capacity.ergodic_logdet_curve(stream.child("t1"), cfg, law.with_coherence(1), weights,
                                             gammas, trials, workers)
        base_slope = capacity.dof_slope([(g, e.mean) for g, e in zip(gammas, base)])
        for t in t_values:
            if int(t) not in (1, 2, 4):
                raise ValueError(f"coherence times are limited to 1, 2, 4; got {t}")
            curve = capacity.ergodic_logdet_curve(stream.child(f"t{t}"), cfg, law.with_coherence(t),
                                                  weights, gammas, trials, workers)
            for g, e0, et in zip(gammas, base, curve):
                report.add_check(f"{qname}, T={t}, gamma={g:g}: per-symbol rate matches T=1",
                                 et.mean, e0.mean, Z_SIGMA * combined_std_err(e0, et), "approx")
            if len(gammas) > 1:
                slope = capacity.dof_slope([(g, e.mean) for g, e in zip(gammas, curve)])
                report.add_check(f"{qname}, T={t}: slope matches T=1", slope, base_slope, SLOPE_TOL, "approx")
    return report


# -- finite-SNR weighted bound --------------------------------------------------------------

def check_finite_snr_weighted_bound(rng, cfg, law=None, gamma_grid=(1.0, 10.0, 100.0),
                                    trials=5000, workers=None):
    """R1 + c R2 - Delta <= MAC sum capacity at receiver 1 for every achievable vertex."""
    cfg = _cfg(cfg)
    case, _ = region.classify_case(cfg)
    if case == region.CaseLabel.C:
        raise ValueError(f"weighted bound applies to cases A and B, config {cfg.as_tuple()} is case C")
    norm_cfg = cfg.swapped() if cfg.n1 > cfg.n2 else cfg
    stream = _as_stream(rng)
    report = SuiteReport("weighted_bound", stream.base_seed, trials)
    coef = min(norm_cfg.m2, norm_cfg.n1) / min(norm_cfg.m2, norm_cfg.n2)
    gap = capacity.gap_constants(stream.child("gap"), norm_cfg, law, trials, workers)
    bounds = capacity.mac_bounds(stream.child("mac"), norm_cfg, law, gamma_grid, trials=trials, workers=workers)
    for mac1, mac2 in zip(bounds[1], bounds[2]):
        margin = Z_SIGMA * combined_std_err(mac1.sum, gap.delta_total, mac1.r1, mac2.r2)
        for p in capacity.achievable_hull(mac1, mac2):
            report.add_check(f"gamma={mac1.gamma:g} vertex ({p.r1:.3f},{p.r2:.3f})",
                             p.r1 + coef * p.r2 - gap.delta_total.mean, mac1.sum.mean, margin)
    return report


# -- isotropy -------------------------------------------------------------------------------

def probe_unitaries(m):
    """Identity, DFT and a fixed Householder reflector of size m."""
    dft = np.fft.fft(np.eye(m)) / np.sqrt(m)
    u = np.arange(1, m + 1) + 1j * np.ones(m)
    house = np.eye(m) - 2.0 * np.outer(u, u.conj()) / np.vdot(u, u).real
    return {"identity": np.eye(m, dtype=np.complex128), "dft": dft.astype(np.complex128),
            "householder": house.astype(np.complex128)}


def _moments(h):
    gram = cxmat.adjoint(h) @ h
    return np.concatenate([h.real.ravel(), h.imag.ravel(), gram.real.ravel(), gram.imag.ravel()])


def _max_z(samples):
    mean = np.mean(samples, axis=0)
    se = np.std(samples, axis=0, ddof=1) / np.sqrt(samples.shape[0])
    z = np.zeros_like(mean)
    nz = se > 0
    z[nz] = np.abs(mean[nz]) / se[nz]
    z[~nz & (np.abs(mean) > 1e-12)] = np.inf
    return float(np.max(z)), samples.shape[1]


def check_isotropy(rng, law=None, trials=100_000, shape=(2, 2), frames=((2, 1), (3, 2)), workers=None):
    """Moment-level isotropy of the fading law, the scrambled decomposition and Stiefel frames."""
    law = law or FadingLaw.rayleigh()
    stream = _as_stream(rng)
    report = SuiteReport("isotropy", stream.base_seed, trials)
    n, m = shape
    unitaries = probe_unitaries(m)

    for qname, q in unitaries.items():
        def rotated(gen, q=q):
            h = sample_link(gen, n, m, law)
            return _moments(h @ q) - _moments(h)

        z, k = _max_z(run_trials(rotated, stream.child(f"rot-{qname}"), trials, workers))
        report.add_check(f"{n}x{m} {law.describe()}: moments of H Q ({qname}) match H",
                         z, z_threshold(k))

    def scrambled(gen):
        w, lam, v = isotropic_scramble(gen, sample_link(gen, n, m, law))
        return _moments(w @ lam @ cxmat.adjoint(v)) - _moments(sample_link(gen, n, m, law))

    z, k = _max_z(run_trials(scrambled, stream.child("scramble"), trials, workers))
    report.add_check(f"{n}x{m} {law.describe()}: scrambled W L V^H moments match fresh draws", z, z_threshold(k))

    def independence(gen):
        _, lam, v = isotropic_scramble(gen, sample_link(gen, n, m, law))
        return [abs(v[0, 0]) ** 2, float(np.real(lam[0, 0]))]

    pairs = run_trials(independence, stream.child("independence"), trials, workers)
    corr = float(np.corrcoef(pairs[:, 0], pairs[:, 1])[0, 1]) if np.std(pairs[:, 1]) > 0 else 0.0
    report.add_check("scrambled right factor uncorrelated with singular values",
                     abs(corr) * np.sqrt(trials), z_threshold(1))

    for mm, kk in frames:
        def frame(gen, mm=mm, kk=kk):
            v = sample_stiefel(gen, mm, kk)
            dev = v @ cxmat.adjoint(v) - (kk / mm) * np.eye(mm)
            return np.concatenate([dev.real.ravel(), dev.imag.ravel()])

        z, k = _max_z(run_trials(frame, stream.child(f"frame-{mm}-{kk}"), trials, workers))
        report.add_check(f"E[V V^H] = ({kk}/{mm}) I for M={mm}, K={kk}", z, z_threshold(k))
    return report


# -- registry -------------------------------------------------------------------------------

DEFAULT_WEIGHTED_CONFIG = AntennaConfig(2, 3, 1, 3)
DEFAULT_REGION_CONFIG = AntennaConfig(1, 2, 3, 4)


def _suite_theorem2(stream, trials, cfg, law, gammas, workers):
    return check_theorem2(stream, gammas or (0.1, 1.0, 10.0, 100.0), trials or 10_000, workers)


def _suite_lemma3(stream, trials, cfg, law, gammas, workers):
    return check_lemma3(stream, trials or 1000, workers=workers)


def _suite_lemma4(stream, trials, cfg, law, gammas, workers):
    report = SuiteReport("lemma4", stream.base_seed, trials or 10_000)
    for m, k3, k1, k2 in ((3, 0, 1, 2), (4, 1, 1, 2)):
        report.merge(check_lemma4(stream.child(f"{m}-{k3}"), m, k1, k2, k3, trials or 10_000, workers=workers))
    return report


def _suite_lemma5(stream, trials, cfg, law, gammas, workers):
    report = SuiteReport("lemma5", stream.base_seed, trials or 10_000)
    for m in (1, 2):
        report.merge(check_lemma5(stream.child(f"m{m}"), m, gammas or (1.0, 10.0), trials or 10_000,
                                  workers=workers))
    return report


def _suite_region(stream, trials, cfg, law, gammas, workers):
    report = SuiteReport("region", stream.base_seed, trials or 10_000)
    configs = [cfg] if cfg is not None else [DEFAULT_REGION_CONFIG, AntennaConfig(2, 2, 3, 4),
                                             DEFAULT_WEIGHTED_CONFIG]
    for c in configs:
        report.merge(check_region_consistency(stream.child(",".join(map(str, c.as_tuple()))), c, law,
                                              gammas, trials or 10_000, workers))
    return report


def _suite_t_invariance(stream, trials, cfg, law, gammas, workers):
    return check_t_invariance(stream, cfg or DEFAULT_REGION_CONFIG, law, (1, 2, 4),
                              gammas or (10.0, 100.0), trials or 5000, workers)


def _suite_weighted_bound(stream, trials, cfg, law, gammas, workers):
    cfg = cfg or DEFAULT_WEIGHTED_CONFIG
    if region.classify_case(cfg)[0] == region.CaseLabel.C:
        warnings.warn(f"weighted bound needs a case A or B config; using {DEFAULT_WEIGHTED_CONFIG.as_tuple()} "
                      f"instead of {cfg.as_tuple()}")
        cfg = DEFAULT_WEIGHTED_CONFIG
    return check_finite_snr_weighted_bound(stream, cfg, law, gammas or (1.0, 10.0, 100.0),
                                           trials or 5000, workers)


def _suite_isotropy(stream, trials, cfg, law, gammas, workers):
    report = SuiteReport("isotropy", stream.base_seed, trials or 100_000)
    laws = [law] if law is not None else [FadingLaw.rayleigh(), FadingLaw.fixed((1.0, 0.5))]
    for i, lw in enumerate(laws):
        report.merge(check_isotropy(stream.child(f"law{i}"), lw, trials or 100_000,
                                    frames=((2, 1), (3, 2)) if i == 0 else (), workers=workers))
    return report


SUITES = {
    "theorem2": _suite_theorem2,
    "lemma3": _suite_lemma3,
    "lemma4": _suite_lemma4,
    "lemma5": _suite_lemma5,
    "region": _suite_region,
    "t_invariance": _suite_t_invariance,
    "weighted_bound": _suite_weighted_bound,
    "isotropy": _suite_isotropy,
}


def run_suite(name, seed, trials=None, cfg=None, law=None, gamma_grid=None, workers=None):
    """Run one registered suite (``"all"`` runs every suite) and return its report(s).

    ``gamma_grid`` is linear SNR. ``None`` arguments fall back to each suite's defaults.
    """
    if name == "all":
        return [run_suite(n, seed, trials, cfg, law, gamma_grid, workers) for n in SUITES]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; expected one of {sorted(SUITES)} or 'all'")
    cfg = None if cfg is None else _cfg(cfg)
    gammas = None if gamma_grid is None else tuple(float(g) for g in gamma_grid)
    logger.info("running suite %s (seed %s, trials %s)", name, seed, trials or "default")
    report = SUITES[name](RngStream(int(seed)).child(name), trials, cfg, law, gammas, workers)
    report.seed = int(seed)
    n_ok, n_all, failures = report.summary()
    logger.info("suite %s: %d/%d checks passed", name, n_ok, n_all)
    return report
