import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from entangler_lab.linalg import (
    DimensionError,
    NotHermitianError,
    NotPSDError,
    hermitian_eigenvalues,
    is_hermitian,
    jacobi_eigh,
    kron,
    matrix_sqrt_psd,
    partial_trace,
    partial_transpose,
)
from entangler_lab.states import make_rng

from conftest import random_density, random_hermitian


def test_kron_of_basis_kets():
    e0, e1 = np.eye(2)
    assert np.array_equal(kron(e0, e1), [0, 1, 0, 0])
    assert kron(e1, e0, e1).shape == (8,)


def test_partial_trace_of_product_state():
    rng = make_rng(3)
    a, b = random_density(rng, 2), random_density(rng, 3)
    rho = np.kron(a, b)
    assert np.allclose(partial_trace(rho, (2, 3), (0,)), a, atol=1e-14)
    assert np.allclose(partial_trace(rho, (2, 3), (1,)), b, atol=1e-14)


def test_partial_trace_keeps_factor_order():
    rng = make_rng(4)
    a, b, c = (random_density(rng, 2) for _ in range(3))
    rho = kron(a, b, c)
    assert np.allclose(partial_trace(rho, (2, 2, 2), (0, 2)), np.kron(a, c), atol=1e-14)


def test_partial_trace_of_singlet_is_maximally_mixed():
    s = np.array([0, 1, -1, 0]) / np.sqrt(2)
    assert np.allclose(partial_trace(np.outer(s, s), (2, 2), (1,)), np.eye(2) / 2)


def test_partial_trace_dimension_mismatch():
    with pytest.raises(DimensionError):
        partial_trace(np.eye(4), (2, 3), (0,))


def test_partial_transpose_of_product_transposes_one_factor():
    rng = make_rng(5)
    a, b = random_density(rng, 2), random_density(rng, 2)
    assert np.allclose(partial_transpose(np.kron(a, b), (2, 2), 1), np.kron(a, b.T))
    assert np.allclose(partial_transpose(np.kron(a, b), (2, 2), 0), np.kron(a.T, b))


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), factor=st.sampled_from([0, 1]))
def test_partial_transpose_is_an_involution(seed, factor):
    m = random_hermitian(make_rng(seed))
    twice = partial_transpose(partial_transpose(m, (2, 2), factor), (2, 2), factor)
    assert np.array_equal(twice, m)


def test_jacobi_diagonal_input():
    w, v = jacobi_eigh(np.diag([3.0, -1.0, 2.0, 0.0]))
    assert np.allclose(w, [-1, 0, 2, 3])
    assert np.allclose(np.abs(v.conj().T @ v), np.eye(4))


def test_jacobi_pauli_y():
    w, _ = jacobi_eigh(np.array([[0, -1j], [1j, 0]]))
    assert np.allclose(w, [-1, 1], atol=1e-15)


def test_jacobi_degenerate_spectrum():
    w, v = jacobi_eigh(np.eye(4) + 0j)
    assert np.allclose(w, 1.0)
    assert np.allclose(v.conj().T @ v, np.eye(4))


def test_jacobi_matches_lapack_on_random_matrices():
    rng = make_rng(6)
    for _ in range(200):
        m = random_hermitian(rng, 4)
        assert np.allclose(jacobi_eigh(m)[0], np.linalg.eigvalsh(m), atol=1e-12)


def test_jacobi_rejects_non_hermitian():
    with pytest.raises(NotHermitianError):
        jacobi_eigh(np.array([[0, 1], [0, 0]], dtype=complex))


def test_hermitian_eigenvalues_ascending():
    w = hermitian_eigenvalues(random_hermitian(make_rng(7), 4))
    assert np.all(np.diff(w) >= 0)


def test_is_hermitian_tolerance():
    m = np.eye(2, dtype=complex)
    m[0, 1] = 1e-12
    assert is_hermitian(m)
    m[0, 1] = 1e-6
    assert not is_hermitian(m)


def test_matrix_sqrt_psd_squares_back():
    rho = random_density(make_rng(8), 4)
    r = matrix_sqrt_psd(rho)
    assert np.allclose(r @ r, rho, atol=1e-12)


def test_matrix_sqrt_psd_of_projector():
    p = np.diag([1.0, 0.0]).astype(complex)
    assert np.allclose(matrix_sqrt_psd(p), p)


def test_matrix_sqrt_psd_rejects_negative():
    with pytest.raises(NotPSDError):
        matrix_sqrt_psd(np.diag([1.0, -0.1]).astype(complex))


def test_jacobi_subnormal_off_diagonal():
    m = np.diag([1.0, 2.0]).astype(complex)
    m[0, 1], m[1, 0] = 5e-324 + 5e-324j, 5e-324 - 5e-324j
    with np.errstate(over="raise", invalid="raise", divide="raise"):
        w, v = jacobi_eigh(m)
    assert np.allclose(w, [1, 2]) and np.all(np.isfinite(v))
