"""Monte Carlo trial runner and summary statistics.

Trial ``i`` always draws from ``stream.substream(i)``, and results are reassembled in
trial order before any reduction, so estimates do not depend on the number of workers.
"""
import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

logger = logging.getLogger(__name__)

DEFAULT_TRIALS = 10_000
ROUNDING_RTOL = 1e-12


class Estimate:
    """Monte Carlo mean with its standard error (bits unless stated otherwise)."""
    def __init__(self, mean, std_err, trials):
        if trials < 1:
            raise ValueError(f"an estimate needs at least one trial, got {trials}")
        if not std_err >= 0.0:
            raise ValueError(f"std_err must be non-negative, got {std_err}")
        self.mean = mean
        self.std_err = std_err
        self.trials = trials

    def __eq__(self, other):
        if not isinstance(other, Estimate):
            return NotImplemented
        return (self.mean, self.std_err, self.trials) == (other.mean, other.std_err, other.trials)

    def __repr__(self):
        return f"Estimate(mean={self.mean!r}, std_err={self.std_err!r}, trials={self.trials})"

    @classmethod
    def from_samples(cls, samples):
        x = np.asarray(samples, dtype=float).ravel()
        if x.size == 0:
            raise ValueError("cannot summarise an empty sample")
        spread = float(np.std(x, ddof=1)) if x.size > 1 else 0.0
        # deterministic samples that differ only by rounding report an exact zero
        if spread <= ROUNDING_RTOL * max(1.0, float(np.max(np.abs(x)))):
            spread = 0.0
        return cls(float(np.mean(x)), float(spread / np.sqrt(x.size)), int(x.size))

    @classmethod
    def exact(cls, value, trials=1):
        return cls(float(value), 0.0, int(trials))

    def to_dict(self):
        return {"mean": self.mean, "std_err": self.std_err, "trials": self.trials}


def combined_std_err(*estimates):
    """Standard error of a sum or difference of independent estimates."""
    return float(np.sqrt(sum(e.std_err ** 2 for e in estimates)))


def _chunks(trials, workers):
    bounds = np.linspace(0, trials, workers + 1).astype(int)
    return [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]


def run_trials(trial_fn, stream, trials, workers=None):
    """Evaluate ``trial_fn(generator)`` for every trial substream.

    Returns an array whose first axis is the trial index. ``workers`` > 1 spreads
    contiguous chunks of trials over a thread pool (numpy releases the GIL inside
    LAPACK calls).
    """
    trials = int(trials)
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")

    def run_chunk(bounds):
        lo, hi = bounds
        return [trial_fn(stream.substream(i).generator()) for i in range(lo, hi)]

    if not workers or workers <= 1 or trials == 1:
        results = run_chunk((0, trials))
    else:
        chunks = _chunks(trials, min(int(workers), trials))
        logger.debug("running %d trials in %d chunks", trials, len(chunks))
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            parts = list(pool.map(run_chunk, chunks))
        results = [r for part in parts for r in part]
    return np.asarray(results, dtype=float)
