import numpy as np
import pytest

from mimo_dof import cxmat


def _rand(shape, seed=0):
    gen = np.random.default_rng(seed)
    return gen.standard_normal(shape) + 1j * gen.standard_normal(shape)


def test_as_matrix_promotes_and_rejects_non_finite():
    assert cxmat.as_matrix(2.0).shape == (1, 1)
    assert cxmat.as_matrix([1, 2, 3]).shape == (3, 1)
    assert cxmat.as_matrix(np.eye(2)).dtype == np.complex128
    with pytest.raises(ValueError):
        cxmat.as_matrix([[np.nan, 0.0], [0.0, 1.0]])
    with pytest.raises(cxmat.DimensionError):
        cxmat.as_matrix(np.zeros((2, 2, 2)))


def test_matmul_dimension_mismatch():
    with pytest.raises(cxmat.DimensionError):
        cxmat.matmul(np.zeros((2, 3)), np.zeros((2, 3)))
    assert cxmat.matmul(np.eye(2), np.ones((2, 3))).shape == (2, 3)


def test_logdet_of_known_matrices():
    assert cxmat.logdet_hpd(np.eye(3)) == pytest.approx(0.0, abs=1e-14)
    assert cxmat.logdet_hpd(np.diag([2.0, 8.0])) == pytest.approx(4.0)
    assert cxmat.logdet_hpd([[2.0, 1.0], [1.0, 2.0]]) == pytest.approx(np.log2(3.0))


def test_logdet_matches_numpy_slogdet():
    a = _rand((4, 4), seed=3)
    h = a @ a.conj().T + np.eye(4)
    _, ln = np.linalg.slogdet(h)
    assert cxmat.logdet_hpd(h) == pytest.approx(ln / np.log(2.0), rel=1e-12)


def test_cholesky_errors():
    with pytest.raises(cxmat.NotHermitianError):
        cxmat.cholesky_hpd([[1.0, 2.0], [0.0, 1.0]])
    with pytest.raises(cxmat.NotPositiveDefiniteError):
        cxmat.cholesky_hpd([[1.0, 0.0], [0.0, -1.0]])
    with pytest.raises(cxmat.DimensionError):
        cxmat.cholesky_hpd(np.ones((2, 3)))


def test_inverse_hpd():
    a = _rand((3, 3), seed=5)
    h = a @ a.conj().T + 0.5 * np.eye(3)
    assert np.allclose(cxmat.inverse_hpd(h) @ h, np.eye(3), atol=1e-10)


def test_qr_has_nonnegative_real_diagonal():
    a = _rand((5, 3), seed=1)
    q, r = cxmat.qr(a)
    assert np.allclose(q @ r, a, atol=1e-10)
    assert cxmat.is_orthonormal(q)
    d = np.diag(r)
    assert np.all(np.abs(d.imag) < 1e-12)
    assert np.all(d.real >= 0)
    assert np.allclose(np.tril(r, -1), 0)


def test_qr_wide_matrix_rejected():
    with pytest.raises(cxmat.DimensionError):
        cxmat.qr(np.ones((2, 3)))


@pytest.mark.parametrize("shape", [(2, 2), (4, 2), (2, 4), (1, 3)])
def test_compact_svd_reconstructs(shape):
    a = _rand(shape, seed=7)
    w, lam, v = cxmat.compact_svd(a)
    k = min(shape)
    assert w.shape == (shape[0], k) and lam.shape == (k, k) and v.shape == (shape[1], k)
    assert np.allclose(w @ lam @ v.conj().T, a, atol=1e-10)
    s = np.diag(lam)
    assert np.all(np.diff(s) <= 0)
    assert cxmat.is_orthonormal(w) and cxmat.is_orthonormal(v)


def test_compact_svd_of_identity():
    w, lam, v = cxmat.compact_svd(np.eye(2))
    assert np.allclose(lam, np.eye(2))
    assert np.allclose(w @ v.conj().T, np.eye(2))


def test_block_diag():
    b = cxmat.block_diag([np.ones((2, 1)), 2 * np.ones((1, 2))])
    assert b.shape == (3, 3)
    assert np.allclose(b[:2, :1], 1) and np.allclose(b[2:, 1:], 2) and np.allclose(b[:2, 1:], 0)
    with pytest.raises(ValueError):
        cxmat.block_diag([])


def test_frobenius_and_adjoint():
    a = np.array([[1 + 1j, 2], [0, 1j]])
    assert cxmat.frobenius_norm_sq(a) == pytest.approx(7.0)
    assert np.allclose(cxmat.adjoint(a), np.array([[1 - 1j, 0], [2, -1j]]))


@pytest.mark.parametrize("seed", range(5))
def test_logdet_of_inverse_is_negated(seed):
    a = _rand((3, 3), seed=seed)
    h = a @ a.conj().T + 0.1 * np.eye(3)
    assert cxmat.logdet_hpd(cxmat.inverse_hpd(h)) == pytest.approx(-cxmat.logdet_hpd(h), abs=1e-9)


@pytest.mark.parametrize("seed", range(5))
def test_qr_preserves_singular_values(seed):
    a = _rand((4, 3), seed=seed)
    _, r = cxmat.qr(a)
    assert np.allclose(cxmat.singular_values(r), cxmat.singular_values(a), atol=1e-10)


@pytest.mark.parametrize("seed", range(5))
def test_matmul_is_associative(seed):
    a, b, c = (_rand((3, 3), seed=10 * seed + k) for k in range(3))
    left = cxmat.matmul(cxmat.matmul(a, b), c)
    right = cxmat.matmul(a, cxmat.matmul(b, c))
    assert np.allclose(left, right, atol=1e-10)


@pytest.mark.parametrize("seed", range(5))
def test_singular_values_are_roots_of_gram_eigenvalues(seed):
    a = _rand((4, 4), seed=seed)
    eig = np.linalg.eigvalsh(a.conj().T @ a)
    expected = np.sqrt(np.clip(eig, 0.0, None))[::-1]
    assert np.allclose(cxmat.singular_values(a), expected, atol=1e-9)
