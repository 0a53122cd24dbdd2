"""Pure and mixed state containers, qubit constructors and ideal targets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .linalg import (
    DimensionError,
    HERMITIAN_TOL,
    dagger,
    hermitian_eigenvalues,
    ket_to_projector,
)

NORM_TOL = 1e-12
DEGENERATE_NORM = 1e-10
DENSITY_TRACE_TOL = 1e-10
DENSITY_MIN_EIG = -1e-9

KET0 = np.array([1.0, 0.0], dtype=complex)
KET1 = np.array([0.0, 1.0], dtype=complex)


class DegenerateInputError(ValueError):
    """Raised when a construction would normalize a (numerically) zero vector."""


def _as_dims(dims, n: int) -> tuple[int, ...]:
    dims = (n,) if dims is None else tuple(int(d) for d in dims)
    if int(np.prod(dims)) != n:
        raise DimensionError(f"dims {dims} do not multiply to {n}")
    return dims


@dataclass(frozen=True)
class PureState:
    """Normalized amplitude vector with its tensor-factor dimensions."""

    vector: np.ndarray
    dims: tuple[int, ...] = field(default=None)

    def __post_init__(self):
        vec = np.array(self.vector, dtype=complex).ravel()
        vec.setflags(write=False)
        object.__setattr__(self, "vector", vec)
        object.__setattr__(self, "dims", _as_dims(self.dims, vec.size))
        if abs(np.linalg.norm(vec) - 1.0) > NORM_TOL:
            raise ValueError(f"state vector has norm {np.linalg.norm(vec):.15f}, expected 1")

    @classmethod
    def normalized(cls, vector, dims=None) -> "PureState":
        vec = np.asarray(vector, dtype=complex).ravel()
        nrm = np.linalg.norm(vec)
        if nrm < DEGENERATE_NORM:
            raise DegenerateInputError("cannot normalize a zero vector")
        return cls(vec / nrm, dims)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.vector, dtype=dtype)

    def __len__(self):
        return self.vector.size

    def projector(self) -> "DensityMatrix":
        return DensityMatrix(ket_to_projector(self.vector), self.dims)

    def overlap(self, other: "PureState") -> complex:
        """Inner product <self|other>."""
        return complex(np.vdot(self.vector, np.asarray(other)))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite operator.

    Validation happens on construction; ``check=False`` skips it for
    intermediate results that are validated elsewhere.
    """

    matrix: np.ndarray
    dims: tuple[int, ...] = field(default=None)
    check: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionError(f"density matrix must be square, got {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", _as_dims(self.dims, m.shape[0]))
        if self.check:
            validate_density(m)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.matrix, dtype=dtype)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def trace(self) -> float:
        return float(np.real(np.trace(self.matrix)))

    def eigenvalues(self) -> np.ndarray:
        return hermitian_eigenvalues(self.matrix)


def validate_density(m: np.ndarray) -> None:
    if np.max(np.abs(m - dagger(m))) > HERMITIAN_TOL:
        raise ValueError("density matrix is not Hermitian")
    tr = np.trace(m)
    if abs(tr - 1.0) > DENSITY_TRACE_TOL:
        raise ValueError(f"density matrix has trace {tr}")
    lo = hermitian_eigenvalues(m)[0]
    if lo < DENSITY_MIN_EIG:
        raise ValueError(f"density matrix has negative eigenvalue {lo:.3e}")


@dataclass(frozen=True)
class BlochAngles:
    theta: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= np.pi:
            raise ValueError(f"theta={self.theta} outside [0, pi]")
        if not 0.0 <= self.phi < 2 * np.pi:
            raise ValueError(f"phi={self.phi} outside [0, 2pi)")


def ket_from_bloch(angles: BlochAngles) -> PureState:
    """cos(theta/2)|0> + exp(i phi) sin(theta/2)|1>."""
    t, p = angles.theta, angles.phi
    return PureState([np.cos(t / 2), np.exp(1j * p) * np.sin(t / 2)])


def qubit(alpha: complex, beta: complex) -> PureState:
    return PureState.normalized([alpha, beta])


def _require_qubit(psi: PureState) -> None:
    if len(psi) != 2:
        raise DimensionError(f"expected a single qubit, got dimension {len(psi)}")


def orthogonal_state(psi: PureState) -> PureState:
    """Anti-unitary complement: alpha|0> + beta|1> -> beta*|0> - alpha*|1>."""
    _require_qubit(psi)
    a, b = psi.vector
    return PureState([np.conj(b), -np.conj(a)])


def _two_copy(psi: PureState, phi: PureState, sign: int) -> np.ndarray:
    if len(psi) != len(phi):
        raise DimensionError("states must share a dimension")
    return np.kron(psi.vector, phi.vector) + sign * np.kron(phi.vector, psi.vector)


def symmetrized_ideal(psi: PureState, phi: PureState) -> PureState:
    """Normalized |psi>|phi> + |phi>|psi>."""
    d = len(psi)
    return PureState.normalized(_two_copy(psi, phi, +1), (d, d))


def antisymmetrized_ideal(psi: PureState, phi: PureState) -> PureState:
    """Normalized |psi>|phi> - |phi>|psi>.

    Raises:
        DegenerateInputError: for parallel inputs, where the difference has
            norm below ``DEGENERATE_NORM``.
    """
    d = len(psi)
    vec = _two_copy(psi, phi, -1)
    if np.linalg.norm(vec) < DEGENERATE_NORM:
        raise DegenerateInputError("parallel inputs have no antisymmetric part")
    return PureState.normalized(vec, (d, d))


def bell_states() -> tuple[PureState, PureState]:
    """(|01> + |10>)/sqrt2 and (|01> - |10>)/sqrt2."""
    r = 1 / np.sqrt(2)
    return PureState([0, r, r, 0], (2, 2)), PureState([0, r, -r, 0], (2, 2))


def make_rng(seed: int) -> np.random.Generator:
    """Philox counter-based generator; independent streams via ``spawn``."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))


def random_bloch(rng: np.random.Generator, size=None) -> tuple[np.ndarray, np.ndarray]:
    """Haar-uniform Bloch angles: cos(theta) uniform on [-1, 1], phi on [0, 2pi)."""
    cos_t = rng.uniform(-1.0, 1.0, size)
    phi = rng.uniform(0.0, 2 * np.pi, size)
    return np.arccos(cos_t), phi


def random_qubit(rng: np.random.Generator) -> PureState:
    theta, phi = random_bloch(rng)
    return ket_from_bloch(BlochAngles(float(theta), float(phi)))


def random_qubits(rng: np.random.Generator, n: int) -> list[PureState]:
    theta, phi = random_bloch(rng, n)
    return [ket_from_bloch(BlochAngles(float(t), float(p))) for t, p in zip(theta, phi)]


def bloch_vector(psi: PureState) -> np.ndarray:
    a, b = psi.vector
    return np.array([2 * np.real(np.conj(a) * b), 2 * np.imag(np.conj(a) * b), abs(a) ** 2 - abs(b) ** 2])
