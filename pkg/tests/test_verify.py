import numpy as np
import pytest

from mimo_dof import capacity, verify
from mimo_dof.models import FadingLaw
from mimo_dof.randmat import RngStream
from mimo_dof.verify import (SUITES, SuiteReport, bernstein_margin, check_finite_snr_weighted_bound,
                             check_isotropy, check_lemma3, check_lemma4, check_lemma5, check_region_consistency,
                             check_t_invariance, check_theorem2, probe_unitaries, run_suite, z_threshold)


def test_add_check_relations():
    report = SuiteReport("demo", seed=3, trials=10)
    assert report.add_check("le", 1.0, 2.0)
    assert not report.add_check("le fails", 2.5, 2.0, margin=0.1)
    assert report.add_check("ge", 1.0, 1.2, margin=0.3, relation=">=")
    assert report.add_check("approx", 1.0, 1.05, margin=0.1, relation="approx")
    assert not report.add_check("nan never passes", float("nan"), 1.0, margin=10.0, relation="approx")
    with pytest.raises(ValueError):
        report.add_check("bad", 1.0, 1.0, relation="==")
    n_ok, n_all, failures = report.summary()
    assert (n_ok, n_all) == (3, 5)
    assert failures == ["le fails", "nan never passes"]
    assert not report.passed


def test_report_to_dict():
    report = SuiteReport("demo", seed=1, trials=5)
    report.add_check("x", 0.5, 1.0)
    d = report.to_dict()
    assert d["suite_name"] == "demo"
    assert d["passed"] is True
    assert set(d["checks"][0]) == {"description", "observed", "bound_or_target", "margin", "relation", "pass"}


def test_z_threshold_grows_with_family_size():
    assert z_threshold(1) == pytest.approx(3.0, abs=1e-3)
    assert z_threshold(16) > z_threshold(4) > z_threshold(1)


def test_probe_unitaries_are_unitary():
    for q in probe_unitaries(3).values():
        assert np.allclose(q.conj().T @ q, np.eye(3), atol=1e-12)


def test_amplitude_bound_suite_always_passes():
    report = check_lemma3(RngStream(2), trials=300)
    assert report.passed
    assert len(report.checks) == 7


def test_lemma4_precondition():
    with pytest.raises(ValueError):
        check_lemma4(RngStream(0), m=3, k1=2, k2=1)
    with pytest.raises(ValueError):
        check_lemma4(RngStream(0), m=3, k1=1, k2=3, k3=1)


def test_lemma4_report_shape():
    report = check_lemma4(RngStream(0), m=3, k1=1, k2=2, trials=50)
    assert len(report.checks) == 1
    assert np.isfinite(report.checks[0].observed)


def test_weighted_bound_rejects_case_c():
    with pytest.raises(ValueError):
        check_finite_snr_weighted_bound(RngStream(0), (1, 2, 3, 4), trials=5)


def test_weighted_bound_suite_substitutes_case_c_config():
    with pytest.warns(UserWarning):
        report = run_suite("weighted_bound", 0, trials=20, cfg=(1, 2, 3, 4), gamma_grid=(1.0,))
    assert report.suite_name == "weighted_bound"
    assert len(report.checks) >= 3


def test_t_invariance_check_count():
    report = check_t_invariance(RngStream(1), (1, 2, 3, 4), trials=30)
    assert len(report.checks) == 2 * (3 * 2 + 3)
    # T=1 against itself is the same stream, so those checks are exact
    t1 = [c for c in report.checks if "T=1," in c.description]
    assert all(c.observed == c.bound for c in t1)


def test_t_invariance_rejects_other_coherence_times():
    with pytest.raises(ValueError):
        check_t_invariance(RngStream(1), (1, 1, 1, 1), t_values=(3,), trials=5)


def test_isotropy_check_count():
    report = check_isotropy(RngStream(4), FadingLaw.fixed((1.0, 0.5)), trials=200, frames=())
    assert len(report.checks) == 5
    report = check_isotropy(RngStream(4), trials=200)
    assert len(report.checks) == 7
    assert all(np.isfinite(c.observed) for c in report.checks)


def test_run_suite_is_reproducible():
    a = run_suite("lemma3", 9, trials=100)
    b = run_suite("lemma3", 9, trials=100)
    assert a.seed == 9
    assert a.to_dict() == b.to_dict()


def test_run_suite_unknown_name():
    with pytest.raises(KeyError):
        run_suite("lemma99", 0)


def test_registry_names():
    assert set(SUITES) == {"theorem2", "lemma3", "lemma4", "lemma5", "region", "t_invariance",
                           "weighted_bound", "isotropy"}
    assert verify.DEFAULT_WEIGHTED_CONFIG.as_tuple() == (2, 3, 1, 3)


SUITE_TRIALS = {
    "theorem2": 2000,
    "lemma3": 300,
    "lemma4": 2000,
    "lemma5": 2000,
    "region": 1000,
    "t_invariance": 1000,
    "weighted_bound": 500,
    "isotropy": 2000,
}


@pytest.mark.parametrize("name", sorted(SUITE_TRIALS))
def test_every_suite_passes_with_reduced_trials(name):
    report = run_suite(name, 0, trials=SUITE_TRIALS[name])
    n_ok, n_all, failures = report.summary()
    assert report.passed, failures
    assert n_all > 0


def test_theorem2_covers_fixed_and_random_channels():
    report = check_theorem2(RngStream(3), gamma_grid=(4.0,), trials=500)
    descriptions = [c.description for c in report.checks]
    assert len(descriptions) == 4
    assert any(d.startswith("2x2 fixed QPSK") for d in descriptions)
    assert any(d.startswith("2x2 Rayleigh QPSK") for d in descriptions)
    assert report.passed


@pytest.mark.parametrize("seed", [0, 7])
def test_theorem2_high_snr_bpsk_passes_at_default_trials(seed):
    report = check_theorem2(RngStream(seed), gamma_grid=(10.0,), trials=10_000)
    assert report.passed, report.summary()[2]


def test_lemma5_gaussian_sanity_branch():
    report = check_lemma5(RngStream(5), m=1, gamma_grid=(10.0,), trials=2000)
    sanity = [c for c in report.checks if "information density" in c.description]
    assert len(sanity) == 1 and sanity[0].relation == "approx"
    assert report.passed


def test_region_corner_slopes_for_case_c():
    gammas = capacity.db_to_linear(capacity.SNR_DB_DEFAULT)
    slopes = capacity.corner_slopes(gammas, capacity.achievable_corners(RngStream(6), (1, 2, 3, 4), None,
                                                                        gammas, trials=1000))
    assert slopes["mac_max_r1"] == (pytest.approx(1.0, abs=0.1), pytest.approx(1.0, abs=0.1))
    assert slopes["user2_alone"] == (pytest.approx(0.0, abs=0.1), pytest.approx(3.0, abs=0.1))


def test_region_time_sharing_midpoint_for_case_b():
    gammas = capacity.db_to_linear(capacity.SNR_DB_DEFAULT)
    slopes = capacity.corner_slopes(gammas, capacity.achievable_corners(RngStream(6), (2, 2, 3, 4), None,
                                                                        gammas, trials=1000))
    a, b = slopes["user1_alone"], slopes["user2_alone"]
    assert 0.5 * (a[0] + b[0]) == pytest.approx(1.0, abs=0.1)
    assert 0.5 * (a[1] + b[1]) == pytest.approx(1.5, abs=0.1)


def test_region_consistency_report():
    report = check_region_consistency(RngStream(8), (1, 2, 3, 4), trials=1000)
    assert report.passed
    assert any("earlier outer bound has a vertex outside" in c.description for c in report.checks)


def test_bernstein_margin_covers_single_rare_sample():
    # one sample at the top of a unit range shifts a mean of n samples by 1/n
    assert bernstein_margin(0.0, 1.0, 2000) > 1.0 / 2000
    assert bernstein_margin(0.5, 1.0, 10_000) > 3 * 0.5 / np.sqrt(10_000)
    assert bernstein_margin(0.5, 1.0, 40_000) < bernstein_margin(0.5, 1.0, 10_000)
