"""Figures of merit for channel outputs."""

from __future__ import annotations

import numpy as np

from .linalg import (
    DimensionError,
    hermitian_eigenvalues,
    matrix_sqrt_psd,
    partial_transpose,
)
from .states import DensityMatrix, PureState

ENTROPY_CUTOFF = 1e-12
# eigenvalues this small are below what the Jacobi solver resolves for unit-trace input
SPECTRAL_NOISE = 1e-14


def _matrix(rho) -> np.ndarray:
    return np.asarray(rho, dtype=complex)


def fidelity_pure(rho: DensityMatrix, target: PureState) -> float:
    """<target|rho|target>."""
    m, v = _matrix(rho), np.asarray(target, dtype=complex)
    if m.shape != (v.size, v.size):
        raise DimensionError(f"rho {m.shape} and target {v.size} do not match")
    return float(np.real(np.vdot(v, m @ v)))


def root_fidelity(rho1: DensityMatrix, rho2: DensityMatrix) -> float:
    """Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)) via two Hermitian eigendecompositions."""
    m1, m2 = _matrix(rho1), _matrix(rho2)
    if m1.shape != m2.shape:
        raise DimensionError("density matrices differ in dimension")
    s = matrix_sqrt_psd(m1)
    inner = s @ m2 @ s
    w = hermitian_eigenvalues(0.5 * (inner + inner.conj().T))
    w = np.where(w > SPECTRAL_NOISE, w, 0.0)
    return float(np.sum(np.sqrt(w)))


def _bures_from_root(root: float) -> float:
    return float(np.sqrt(2.0) * np.sqrt(max(0.0, 1.0 - root)))


def bures_distance(rho1, rho2) -> float:
    """sqrt2 * (1 - Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)))**(1/2).

    Either argument may be a :class:`PureState`; when the second one is pure
    the root fidelity reduces to sqrt(<psi|rho1|psi>) and no square roots of
    matrices are taken.
    """
    if isinstance(rho2, PureState):
        if isinstance(rho1, PureState):
            return _bures_from_root(abs(rho1.overlap(rho2)))
        return _bures_from_root(np.sqrt(max(0.0, fidelity_pure(rho1, rho2))))
    if isinstance(rho1, PureState):
        return bures_distance(rho2, rho1)
    return _bures_from_root(root_fidelity(rho1, rho2))


def hs_distance(rho1, rho2) -> float:
    """[Tr (rho1 - rho2)^2]^(1/2)."""
    d = _matrix(rho1) - _matrix(rho2)
    return float(np.sqrt(max(0.0, np.real(np.trace(d @ d)))))


def hs_distance_to_pure(rho: DensityMatrix, target: PureState) -> float:
    """Same distance written as [1 - 2F + Tr rho^2]^(1/2) for a pure target."""
    m = _matrix(rho)
    purity = float(np.real(np.trace(m @ m)))
    return float(np.sqrt(max(0.0, 1.0 - 2 * fidelity_pure(rho, target) + purity)))


def von_neumann_entropy(rho) -> float:
    """-Tr rho ln rho in nats."""
    w = hermitian_eigenvalues(_matrix(rho))
    w = w[w > ENTROPY_CUTOFF]
    return float(-np.sum(w * np.log(w))) + 0.0


def ppt_min_eigenvalue(rho: DensityMatrix, factor: int = 1) -> float:
    """Smallest eigenvalue of the partial transpose of a two-qubit state.

    A negative value certifies that ``rho`` is entangled.
    """
    dims = getattr(rho, "dims", None)
    m = _matrix(rho)
    if (dims is not None and tuple(dims) != (2, 2)) or m.shape != (4, 4):
        raise DimensionError("PPT test is defined here for two-qubit states only")
    return float(hermitian_eigenvalues(partial_transpose(m, (2, 2), factor))[0])
