"""Small dense complex linear algebra for bipartite and tripartite states.

Matrices are plain ``complex128`` numpy arrays. Tensor factors are ordered
big-endian: in ``kron(a, b)`` the factor ``a`` is index 0.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

HERMITIAN_TOL = 1e-10
PSD_CLAMP_FLOOR = -1e-10
PSD_REJECT_FLOOR = -1e-8
JACOBI_OFF_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100
_TINY = np.finfo(float).tiny


class DimensionError(ValueError):
    """Raised when an operand does not match its declared subsystem dims."""


class NotHermitianError(ValueError):
    pass


class NotPSDError(ValueError):
    pass


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(np.transpose(m))


def kron(*factors: np.ndarray) -> np.ndarray:
    """Kronecker product of any number of operators or vectors."""
    out = np.asarray(factors[0], dtype=complex)
    for f in factors[1:]:
        out = np.kron(out, np.asarray(f, dtype=complex))
    return out


def ket_to_projector(vec: np.ndarray) -> np.ndarray:
    vec = np.asarray(vec, dtype=complex).ravel()
    return np.outer(vec, np.conj(vec))


def _check_square(rho: np.ndarray, dims: Sequence[int]) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if any(d < 1 for d in dims):
        raise DimensionError(f"subsystem dims must be positive, got {dims}")
    n = int(np.prod(dims))
    if rho.ndim != 2 or rho.shape != (n, n):
        raise DimensionError(f"matrix of shape {rho.shape} does not match dims {dims}")
    return dims


def partial_trace(rho: np.ndarray, dims: Sequence[int], keep: Iterable[int]) -> np.ndarray:
    """Trace out every factor not listed in ``keep``.

    The kept factors appear in the result in their original order. Keeping
    nothing returns the scalar trace as a 1x1 matrix.
    """
    rho = np.asarray(rho, dtype=complex)
    dims = _check_square(rho, dims)
    nsys = len(dims)
    keep = sorted(set(int(k) for k in keep))
    for k in keep:
        if not 0 <= k < nsys:
            raise DimensionError(f"keep index {k} out of range for {nsys} factors")
    traced = [i for i in range(nsys) if i not in keep]

    t = rho.reshape(dims + dims)
    # trace highest index first so remaining axis numbers stay valid
    for i in sorted(traced, reverse=True):
        n = t.ndim // 2
        t = np.trace(t, axis1=i, axis2=i + n)
    d = int(np.prod([dims[k] for k in keep])) if keep else 1
    return t.reshape(d, d)


def partial_transpose(rho: np.ndarray, dims: Sequence[int], factor: int) -> np.ndarray:
    """Transpose the indices of one tensor factor, leaving the others alone."""
    rho = np.asarray(rho, dtype=complex)
    dims = _check_square(rho, dims)
    nsys = len(dims)
    if not 0 <= factor < nsys:
        raise DimensionError(f"factor {factor} out of range for {nsys} factors")
    t = rho.reshape(dims + dims)
    axes = list(range(2 * nsys))
    axes[factor], axes[factor + nsys] = axes[factor + nsys], axes[factor]
    n = rho.shape[0]
    return t.transpose(axes).reshape(n, n)


def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    m = np.asarray(m)
    return m.ndim == 2 and m.shape[0] == m.shape[1] and np.max(np.abs(m - dagger(m)), initial=0.0) <= tol


def _off_norm(a: np.ndarray) -> float:
    off = a[~np.eye(a.shape[0], dtype=bool)]
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def jacobi_eigh(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Each rotation first removes the phase of the pivot ``a[p, q]`` and then
    applies the real symmetric Jacobi rotation to the 2x2 block. Sweeps stop
    once the off-diagonal Frobenius mass drops below
    ``JACOBI_OFF_TOL * max(1, ||m||_F)``.

    Returns:
        ``(w, v)`` with ascending real eigenvalues ``w`` (stable order on ties)
        and unitary ``v`` whose columns are the matching eigenvectors, so that
        ``m = v @ diag(w) @ v^H``.

    Raises:
        NotHermitianError: if ``m`` deviates from ``m^H`` by more than
            ``HERMITIAN_TOL`` in any entry.
    """
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    if not is_hermitian(a):
        raise NotHermitianError("matrix is not Hermitian within tolerance")
    a = 0.5 * (a + dagger(a))
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = max(1.0, float(np.linalg.norm(a)))

    for _ in range(JACOBI_MAX_SWEEPS):
        if _off_norm(a) < JACOBI_OFF_TOL * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r < _TINY:
                    # subnormal pivots would overflow the phase division
                    a[p, q] = a[q, p] = 0.0
                    continue
                phase = apq / r
                app, aqq = a[p, p].real, a[q, q].real
                theta = (aqq - app) / (2.0 * r)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = np.copysign(1.0, theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # columns p, q of the unitary; zeroes a[p, q] under a <- u^H a u
                u2 = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ u2
                a[idx, :] = dagger(u2) @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                v[:, idx] = v[:, idx] @ u2

    w = np.real(np.diag(a))
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def hermitian_eigenvalues(m: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues of a Hermitian matrix (Jacobi solver)."""
    return jacobi_eigh(m)[0]


def matrix_sqrt_psd(m: np.ndarray) -> np.ndarray:
    """Principal square root of a Hermitian positive semidefinite matrix.

    Eigenvalues in ``[PSD_REJECT_FLOOR, 0)`` are treated as rounding noise
    and clamped to zero; anything more negative raises ``NotPSDError``.
    """
    w, v = jacobi_eigh(m)
    if w[0] < PSD_REJECT_FLOOR:
        raise NotPSDError(f"matrix has eigenvalue {w[0]:.3e}, not positive semidefinite")
    root = np.sqrt(np.clip(w, 0.0, None))
    return (v * root) @ dagger(v)
