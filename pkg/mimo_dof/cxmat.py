"""Dense complex linear-algebra kernel.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``. The helpers
here validate shapes and wrap the LAPACK routines exposed by numpy/scipy with the
conventions the rest of the package relies on:

- log-determinants are in bits and go through a Cholesky factorisation;
- QR factors have a real non-negative R diagonal (needed for Haar sampling);
- compact SVD factors are sorted by descending singular value.
"""
import numpy as np
import scipy.linalg as sla

# Tolerances for matrices up to ~16x16 in double precision.
TAU_HERM = 1e-8
TAU_RECON = 1e-10
TAU_ORTH = 1e-10

ComplexMatrix = np.ndarray


class DimensionError(ValueError):
    pass


class NotHermitianError(ValueError):
    pass


class NotPositiveDefiniteError(ValueError):
    pass


class SvdConvergenceError(RuntimeError):
    pass


def as_matrix(a):
    """Return ``a`` as a 2-D complex128 array, rejecting NaN/Inf entries."""
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    elif arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    elif arr.ndim != 2:
        raise DimensionError(f"expected a matrix, got array of shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix has non-finite entries")
    return arr


def identity(n):
    return np.eye(n, dtype=np.complex128)


def adjoint(a):
    return np.asarray(a).conj().T


def matmul(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def frobenius_norm_sq(a):
    a = np.asarray(a)
    return float(np.sum(a.real ** 2 + a.imag ** 2))


def _check_hermitian(a):
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got {a.shape}")
    scale = max(1.0, np.sqrt(frobenius_norm_sq(a)))
    skew = np.sqrt(frobenius_norm_sq(a - adjoint(a)))
    if skew > TAU_HERM * scale:
        raise NotHermitianError(f"matrix is not Hermitian (skew norm {skew:.3e})")


def cholesky_hpd(a):
    """Lower Cholesky factor of a Hermitian positive-definite matrix."""
    a = np.asarray(a, dtype=np.complex128)
    _check_hermitian(a)
    herm = 0.5 * (a + adjoint(a))
    try:
        low = sla.cholesky(herm, lower=True, check_finite=False)
    except np.linalg.LinAlgError as e:
        raise NotPositiveDefiniteError(f"matrix is not positive definite: {e}") from e
    pivots = np.real(np.diag(low))
    if np.any(pivots <= 0.0):
        raise NotPositiveDefiniteError("Cholesky pivot is not positive")
    return low


def logdet_hpd(a):
    """log2 det(a) of a Hermitian positive-definite matrix, in bits."""
    low = cholesky_hpd(a)
    return float(2.0 * np.sum(np.log2(np.real(np.diag(low)))))


def inverse_hpd(a):
    a = np.asarray(a, dtype=np.complex128)
    _check_hermitian(a)
    try:
        factor = sla.cho_factor(0.5 * (a + adjoint(a)), lower=True, check_finite=False)
    except np.linalg.LinAlgError as e:
        raise NotPositiveDefiniteError(f"matrix is not positive definite: {e}") from e
    return sla.cho_solve(factor, identity(a.shape[0]), check_finite=False)


def qr(a):
    """Reduced QR with the diagonal of R made real and non-negative.

    Zero pivots (rank-deficient input) keep a unit phase, so R may have zeros on
    its diagonal.
    """
    a = np.asarray(a, dtype=np.complex128)
    rows, cols = a.shape
    if rows < cols:
        raise DimensionError(f"qr needs rows >= cols, got {a.shape}")
    q, r = np.linalg.qr(a, mode="reduced")
    d = np.diag(r)
    mag = np.abs(d)
    phase = np.ones_like(d)
    nz = mag > 0
    phase[nz] = d[nz] / mag[nz]
    q = q * phase[np.newaxis, :]
    r = phase.conj()[:, np.newaxis] * r
    return q, r


def compact_svd(a):
    """Compact SVD ``a = w @ diag(s) @ v^H`` with K = min(rows, cols).

    Returns ``(w, lam, v)`` where ``lam`` is the K x K real diagonal matrix of
    singular values in descending order.
    """
    a = np.asarray(a, dtype=np.complex128)
    try:
        w, s, vh = np.linalg.svd(a, full_matrices=False)
    except np.linalg.LinAlgError as e:
        raise SvdConvergenceError(f"SVD did not converge: {e}") from e
    return w, np.diag(s), adjoint(vh)


def singular_values(a):
    try:
        return np.linalg.svd(np.asarray(a, dtype=np.complex128), compute_uv=False)
    except np.linalg.LinAlgError as e:
        raise SvdConvergenceError(f"SVD did not converge: {e}") from e


def block_diag(blocks):
    blocks = list(blocks)
    if not blocks:
        raise ValueError("block_diag needs at least one block")
    return sla.block_diag(*[np.asarray(b, dtype=np.complex128) for b in blocks])


def is_orthonormal(v, tol=TAU_ORTH):
    """True if the columns of ``v`` are orthonormal within ``tol`` (max-abs)."""
    v = np.asarray(v)
    if v.shape[1] == 0:
        return True
    gram = adjoint(v) @ v
    return bool(np.max(np.abs(gram - np.eye(v.shape[1]))) <= tol)
