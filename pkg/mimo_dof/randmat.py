"""Random matrices and block-fading channel draws.

Every sampler takes an ``RngStream`` (or a ready ``numpy.random.Generator``). A stream
is a pure value: the same ``(base_seed, stream_id)`` always yields the same draws, so
Monte Carlo trials can be evaluated in any order or on any number of threads.
"""
import logging
import zlib

import numpy as np

from . import cxmat
from .models import LINKS, AntennaConfig, FadingKind, FadingLaw

logger = logging.getLogger(__name__)

TAU_COND_ORTH = 1e-8


class RngStream:
    """Counter-addressed random stream.

    ``substream(i)`` is the stream of trial ``i``; ``child(label)`` derives a named
    branch (e.g. one per coherence time in a comparison).
    """
    def __init__(self, base_seed, stream_id=0, path=()):
        if int(base_seed) != base_seed or base_seed < 0:
            raise ValueError(f"base_seed must be a non-negative integer, got {base_seed!r}")
        if int(stream_id) != stream_id or stream_id < 0:
            raise ValueError(f"stream_id must be a non-negative integer, got {stream_id!r}")
        self.base_seed = int(base_seed)
        self.stream_id = int(stream_id)
        self.path = tuple(int(p) for p in path)

    def __eq__(self, other):
        if not isinstance(other, RngStream):
            return NotImplemented
        return (self.base_seed, self.path, self.stream_id) == (other.base_seed, other.path, other.stream_id)

    def __hash__(self):
        return hash((self.base_seed, self.path, self.stream_id))

    def __repr__(self):
        return f"RngStream(base_seed={self.base_seed}, stream_id={self.stream_id}, path={self.path})"

    def seed_sequence(self):
        return np.random.SeedSequence([self.base_seed, *self.path, self.stream_id])

    def generator(self):
        return np.random.default_rng(self.seed_sequence())

    def substream(self, index):
        return RngStream(self.base_seed, index, self.path + (self.stream_id,))

    def child(self, label):
        return self.substream(zlib.crc32(str(label).encode("utf-8")))


def _as_generator(rng):
    if isinstance(rng, RngStream):
        return rng.generator()
    if isinstance(rng, np.random.Generator):
        return rng
    raise TypeError(f"expected RngStream or numpy Generator, got {type(rng).__name__}")


def _check_dims(**dims):
    for name, value in dims.items():
        if int(value) != value or value < 1:
            raise ValueError(f"{name} must be a positive integer, got {value!r}")


def sample_ginibre(rng, n, m):
    """n x m matrix of i.i.d. unit-variance circularly symmetric complex Gaussians."""
    _check_dims(n=n, m=m)
    gen = _as_generator(rng)
    re = gen.standard_normal((n, m))
    im = gen.standard_normal((n, m))
    return (re + 1j * im) / np.sqrt(2.0)


def sample_haar_unitary(rng, m):
    """Haar-distributed m x m unitary: QR of a Ginibre matrix with R diagonal made positive."""
    _check_dims(m=m)
    q, _ = cxmat.qr(sample_ginibre(rng, m, m))
    return q


def sample_stiefel(rng, m, k):
    """Uniform m x k matrix with orthonormal columns."""
    _check_dims(m=m, k=k)
    if k > m:
        raise ValueError(f"Stiefel frame needs k <= m, got k={k}, m={m}")
    return sample_haar_unitary(rng, m)[:, :k]


def isotropic_scramble(rng, g):
    """Compact SVD of ``g`` with the right factor rotated by a fresh Haar unitary.

    Returns ``(w, lam, v)`` with ``v = Q v1``. For isotropic ``g`` the product
    ``w @ lam @ v^H`` has the law of ``g`` while ``v`` is independent of ``lam``.
    """
    g = cxmat.as_matrix(g)
    w, lam, v1 = cxmat.compact_svd(g)
    q = sample_haar_unitary(rng, g.shape[1])
    return w, lam, q @ v1


def sample_conditioned_stiefel(rng, m, k, v3=None):
    """Uniform m x k orthonormal frame orthogonal to the columns of ``v3``."""
    _check_dims(m=m, k=k)
    if v3 is None or np.asarray(v3).size == 0:
        return sample_stiefel(rng, m, k)
    v3 = cxmat.as_matrix(v3)
    if v3.shape[0] != m:
        raise cxmat.DimensionError(f"v3 must have {m} rows, got {v3.shape[0]}")
    k3 = v3.shape[1]
    if not cxmat.is_orthonormal(v3, TAU_COND_ORTH):
        raise ValueError("v3 must have orthonormal columns")
    if k > m - k3:
        raise ValueError(f"k={k} exceeds the {m - k3}-dimensional complement of v3")
    q_full, _ = np.linalg.qr(v3, mode="complete")
    complement = q_full[:, k3:]
    return complement @ sample_stiefel(rng, m - k3, k)


def sample_link(rng, n, m, law, link="11"):
    """One n x m link under ``law`` (no coherence lifting)."""
    _check_dims(n=n, m=m)
    gen = _as_generator(rng)
    if law.kind == FadingKind.RAYLEIGH:
        return sample_ginibre(gen, n, m)
    if law.kind == FadingKind.FIXED_SPECTRUM:
        k = min(n, m)
        w = sample_stiefel(gen, n, k)
        v = sample_stiefel(gen, m, k)
        return (w * law.spectrum_for(link, k)[np.newaxis, :]) @ cxmat.adjoint(v)
    if law.base_sampler is not None:
        base = cxmat.as_matrix(law.base_sampler(gen, n, m))
        if base.shape != (n, m):
            raise cxmat.DimensionError(f"base sampler returned {base.shape}, expected {(n, m)}")
    else:
        gains = law.column_gains or (1.0,)
        g = np.asarray([gains[min(j, len(gains) - 1)] for j in range(m)])
        base = sample_ginibre(gen, n, m) * g[np.newaxis, :]
    w, lam, v = isotropic_scramble(gen, base)
    return w @ lam @ cxmat.adjoint(v)


class ChannelDraw:
    """The four links of one coherence block; ``h_rt`` maps transmitter t to receiver r."""
    def __init__(self, h11, h12, h21, h22):
        self.h11 = h11
        self.h12 = h12
        self.h21 = h21
        self.h22 = h22

    def link(self, r, t):
        return getattr(self, f"h{r}{t}")

    def links(self):
        return {name: getattr(self, f"h{name}") for name in LINKS}

    def min_singular_value(self):
        return min(float(np.min(cxmat.singular_values(h))) for h in self.links().values())

    def is_full_rank(self, tol=0.0):
        return self.min_singular_value() > tol


def sample_channel(rng, cfg, law=None):
    """Independent draws of H11, H12, H21, H22 (in that order) for one block."""
    law = FadingLaw.rayleigh() if law is None else law
    if not isinstance(cfg, AntennaConfig):
        cfg = AntennaConfig(*cfg)
    gen = _as_generator(rng)
    mats = {}
    for link in LINKS:
        n, m = cfg.link_shape(link)
        mats[f"h{link}"] = sample_link(gen, n, m, law, link)
    return ChannelDraw(**mats)


def lift_block(draw, t):
    """Each link replaced by the block-diagonal of t copies (one per symbol of a block)."""
    if int(t) != t or t < 1:
        raise ValueError(f"t must be a positive integer, got {t!r}")
    if t == 1:
        return draw
    return ChannelDraw(**{f"h{name}": cxmat.block_diag([h] * int(t))
                          for name, h in draw.links().items()})


def sample_block(rng, cfg, law):
    """A channel draw lifted to the law's coherence time."""
    return lift_block(sample_channel(rng, cfg, law), law.coherence_t)
