from typing import Callable

import numpy as np

LINKS = ("11", "12", "21", "22")


def _positive_int(name, value):
    if isinstance(value, bool) or int(value) != value or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")
    return int(value)


class AntennaConfig:
    """Antenna counts of a two-user MIMO interference channel.

    Parameters
    ----------
    m1, m2 : int
        Transmit antennas of users 1 and 2.
    n1, n2 : int
        Receive antennas of users 1 and 2.

    Link ``rt`` (receiver r, transmitter t) is an ``N_r x M_t`` matrix.
    """
    def __init__(self, m1, n1, m2, n2):
        self.m1 = _positive_int("m1", m1)
        self.n1 = _positive_int("n1", n1)
        self.m2 = _positive_int("m2", m2)
        self.n2 = _positive_int("n2", n2)

    def __eq__(self, other):
        if not isinstance(other, AntennaConfig):
            return NotImplemented
        return self.as_tuple() == other.as_tuple()

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        return "AntennaConfig(m1={}, n1={}, m2={}, n2={})".format(*self.as_tuple())

    @classmethod
    def parse(cls, text):
        """Parse ``"M1,N1,M2,N2"``."""
        parts = [p.strip() for p in str(text).split(",")]
        if len(parts) != 4:
            raise ValueError(f"expected M1,N1,M2,N2, got {text!r}")
        try:
            values = [int(p) for p in parts]
        except ValueError as e:
            raise ValueError(f"antenna counts must be integers: {text!r}") from e
        return cls(*values)

    def as_tuple(self):
        return (self.m1, self.n1, self.m2, self.n2)

    def swapped(self):
        """Exchange the roles of the two users."""
        return AntennaConfig(self.m2, self.n2, self.m1, self.n1)

    def tx(self, t):
        return self.m1 if t == 1 else self.m2

    def rx(self, r):
        return self.n1 if r == 1 else self.n2

    def link_shape(self, link):
        """``(N_r, M_t)`` of link ``"rt"``."""
        r, t = int(link[0]), int(link[1])
        return self.rx(r), self.tx(t)


class FadingKind:
    """Names of the fading laws; also the keywords of the CLI grammar."""
    RAYLEIGH = "rayleigh"
    FIXED_SPECTRUM = "fixed"
    SCRAMBLED_CUSTOM = "scrambled"
    ALL = (RAYLEIGH, FIXED_SPECTRUM, SCRAMBLED_CUSTOM)


# base sampler for the scrambled law: (generator, n, m) -> n x m complex matrix
BaseSampler = Callable[[np.random.Generator, int, int], np.ndarray]


class FadingLaw:
    """Recipe for one coherence block of all four links.

    Parameters
    ----------
    kind : str
        ``FadingKind.RAYLEIGH``: i.i.d. unit-variance CSCG entries.
        ``FadingKind.FIXED_SPECTRUM``: ``W diag(s) V^H`` with Haar-distributed W and V
        columns and deterministic singular values ``s``.
        ``FadingKind.SCRAMBLED_CUSTOM``: an arbitrary base draw made isotropic by
        scrambling its right singular vectors with a fresh Haar unitary.
    coherence_t : int
        Number of symbols over which the channel stays constant.
    spectrum : sequence of float
        Singular values for ``FIXED_SPECTRUM`` shared by all links (first K used,
        last value repeated when a link needs more).
    link_spectra : mapping
        Optional per-link override of ``spectrum`` keyed by ``"11"``, ``"12"``, ...
    column_gains : sequence of float
        Column gains of the default scrambled base sampler (Gaussian entries scaled per
        column; not isotropic before scrambling).
    base_sampler : callable, optional
        Custom base sampler for ``SCRAMBLED_CUSTOM``.
    """
    def __init__(self, kind=FadingKind.RAYLEIGH, coherence_t=1, spectrum=(), link_spectra=None,
                 column_gains=(), base_sampler=None):
        if kind not in FadingKind.ALL:
            raise ValueError(f"unknown fading kind {kind!r}; expected one of {FadingKind.ALL}")
        self.kind = kind
        self.coherence_t = _positive_int("coherence_t", coherence_t)
        self.spectrum = tuple(float(s) for s in spectrum)
        self.column_gains = tuple(float(g) for g in column_gains)
        self.base_sampler = base_sampler
        spectra = {str(k): tuple(float(s) for s in v) for k, v in dict(link_spectra or {}).items()}
        for key in spectra:
            if key not in LINKS:
                raise ValueError(f"unknown link {key!r}; expected one of {LINKS}")
        self.link_spectra = spectra

        if kind == FadingKind.FIXED_SPECTRUM:
            if not self.spectrum and len(spectra) < len(LINKS):
                raise ValueError("fixed-spectrum law needs singular values")
            for values in (self.spectrum, *spectra.values()):
                if any(not np.isfinite(s) or s <= 0.0 for s in values):
                    raise ValueError("singular values must be finite and strictly positive")
        if kind == FadingKind.SCRAMBLED_CUSTOM:
            if any(not np.isfinite(g) or g <= 0.0 for g in self.column_gains):
                raise ValueError("column gains must be finite and strictly positive")

    def __repr__(self):
        return f"FadingLaw({self.describe()!r}, coherence_t={self.coherence_t})"

    @classmethod
    def rayleigh(cls, coherence_t=1):
        return cls(FadingKind.RAYLEIGH, coherence_t=coherence_t)

    @classmethod
    def fixed(cls, values, coherence_t=1, link_spectra=None):
        return cls(FadingKind.FIXED_SPECTRUM, coherence_t=coherence_t,
                   spectrum=tuple(values), link_spectra=link_spectra)

    @classmethod
    def scrambled(cls, column_gains=(), base_sampler=None, coherence_t=1):
        return cls(FadingKind.SCRAMBLED_CUSTOM, coherence_t=coherence_t,
                   column_gains=tuple(column_gains), base_sampler=base_sampler)

    @classmethod
    def parse(cls, text, coherence_t=1):
        """Parse the CLI grammar ``rayleigh | fixed:<csv> | scrambled[:<csv>]``."""
        text = str(text).strip()
        name, _, arg = text.partition(":")
        name = name.strip().lower()
        try:
            values = tuple(float(v) for v in arg.split(",") if v.strip())
        except ValueError as e:
            raise ValueError(f"malformed fading law {text!r}") from e
        if name == FadingKind.RAYLEIGH and not arg:
            return cls.rayleigh(coherence_t)
        if name == FadingKind.FIXED_SPECTRUM:
            return cls.fixed(values, coherence_t)
        if name == FadingKind.SCRAMBLED_CUSTOM:
            return cls.scrambled(values, coherence_t=coherence_t)
        raise ValueError(f"unknown fading law {text!r}")

    def with_coherence(self, coherence_t):
        return FadingLaw(self.kind, coherence_t, self.spectrum, self.link_spectra,
                         self.column_gains, self.base_sampler)

    def spectrum_for(self, link, k):
        """The K singular values a fixed-spectrum link uses."""
        values = self.link_spectra.get(link, self.spectrum)
        if len(values) >= k:
            return np.asarray(values[:k], dtype=float)
        return np.asarray(values + (values[-1],) * (k - len(values)), dtype=float)

    def mean_power(self, link, n, m):
        """E||H||_F^2 of an ``n x m`` link (finite for every law offered here)."""
        if self.kind == FadingKind.RAYLEIGH:
            return float(n * m)
        if self.kind == FadingKind.FIXED_SPECTRUM:
            return float(np.sum(self.spectrum_for(link, min(n, m)) ** 2))
        if self.base_sampler is None:
            gains = self.column_gains or (1.0,)
            g = np.asarray([gains[min(j, len(gains) - 1)] for j in range(m)])
            return float(n * np.sum(g ** 2))
        return float("nan")

    def describe(self):
        if self.kind == FadingKind.RAYLEIGH:
            return "rayleigh"
        if self.kind == FadingKind.FIXED_SPECTRUM:
            return "fixed:" + ",".join(repr(s) for s in self.spectrum)
        return "scrambled:" + ",".join(repr(g) for g in self.column_gains)
