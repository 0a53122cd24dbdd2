"""Entangling procedures acting on an unknown qubit.

Every channel takes the unknown input ``psi`` and returns the two-qubit
output as a :class:`DensityMatrix`. The reference qubit, where one exists,
is fixed to |0> and sits in tensor slot A (slot B carries ``psi``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np

from .linalg import DimensionError, dagger, kron, ket_to_projector, partial_trace
from .quadrature import bloch_kets, sphere_rule
from .states import (
    KET0,
    KET1,
    BlochAngles,
    DensityMatrix,
    PureState,
    bell_states,
    ket_from_bloch,
    orthogonal_state,
    symmetrized_ideal,
)

ISOMETRY_TOL = 1e-12
POSTSELECT_FLOOR = 1e-12

KET00 = np.array([1, 0, 0, 0], dtype=complex)
KET_PLUS = bell_states()[0].vector
KET_MINUS = bell_states()[1].vector
SINGLET = KET_MINUS

# cos^2 and sin^2 of the optimal machine angle
OPTIMAL_FIDELITY = (9 + 3 * np.sqrt(2)) / 14
OPTIMAL_SIN2 = (5 - 3 * np.sqrt(2)) / 14

UNOT_GAMMA0 = np.sqrt(2 / 3)
UNOT_GAMMA1 = -np.sqrt(1 / 3)


def _require_qubit(psi: PureState) -> None:
    if len(psi) != 2:
        raise DimensionError(f"expected a single qubit, got dimension {len(psi)}")


@dataclass(frozen=True)
class MachineVectors:
    """Ancilla vectors of |00>|v0> -> |00>|w0> + |+>|x0>, |01>|v0> -> |00>|w1> + |+>|x1>."""

    w0: np.ndarray
    w1: np.ndarray
    x0: np.ndarray
    x1: np.ndarray

    def unitarity_residuals(self) -> tuple[float, float, complex]:
        n = lambda v: float(np.vdot(v, v).real)
        return (
            n(self.w0) + n(self.x0) - 1.0,
            n(self.w1) + n(self.x1) - 1.0,
            complex(np.vdot(self.w0, self.w1) + np.vdot(self.x0, self.x1)),
        )

    def cos_mu(self) -> float:
        """Normalized real part of <x1|w0>; equals 1 when w0 and x1 are parallel."""
        num = np.vdot(self.x1, self.w0) + np.vdot(self.w0, self.x1)
        return float(np.real(num) / (2 * np.vdot(self.w0, self.w0).real))

    def isometry(self) -> np.ndarray:
        """12x2 matrix (output AB (x) machine) acting on psi with reference |0>."""
        col0 = np.kron(KET00, self.w0) + np.kron(KET_PLUS, self.x0)
        col1 = np.kron(KET00, self.w1) + np.kron(KET_PLUS, self.x1)
        return np.stack([col0, col1], axis=1)


def optimal_entangler_machine() -> MachineVectors:
    c = np.sqrt(OPTIMAL_FIDELITY)
    s = np.sqrt(OPTIMAL_SIN2)
    v1, v2, v3 = np.eye(3, dtype=complex)
    return MachineVectors(w0=c * v1, w1=s * v2, x0=s * v3, x1=c * v1)


@dataclass(frozen=True)
class EntanglerChannel:
    """Qubit channel realized as an isometry followed by a partial trace.

    ``dims`` are the tensor factors of the isometry's output; ``keep`` lists
    the factors that survive as the channel output.
    """

    name: str
    isometry: np.ndarray
    dims: tuple[int, ...]
    keep: tuple[int, ...]

    def isometry_defect(self) -> float:
        v = self.isometry
        return float(np.max(np.abs(dagger(v) @ v - np.eye(v.shape[1]))))

    def pure_output(self, psi: PureState) -> np.ndarray:
        _require_qubit(psi)
        return self.isometry @ psi.vector

    def __call__(self, psi: PureState) -> DensityMatrix:
        out = self.pure_output(psi)
        rho = partial_trace(ket_to_projector(out), self.dims, self.keep)
        kept = tuple(self.dims[k] for k in self.keep)
        return DensityMatrix(rho, kept)


@lru_cache(maxsize=None)
def optimal_channel() -> EntanglerChannel:
    v = optimal_entangler_machine().isometry()
    return EntanglerChannel("optimal", v, (2, 2, 3), (0, 1))


def apply_optimal_entangler(psi: PureState) -> DensityMatrix:
    """Optimal universal symmetrizer applied to |0>_A |psi>_B."""
    return optimal_channel()(psi)


def optimal_output_closed_form(psi: PureState) -> DensityMatrix:
    """Output of the optimal symmetrizer written out in the |00>, |+> basis."""
    _require_qubit(psi)
    a, b = psi.vector
    c2, s2 = OPTIMAL_FIDELITY, OPTIMAL_SIN2
    p00 = ket_to_projector(KET00)
    ppp = ket_to_projector(KET_PLUS)
    cross = np.outer(KET00, KET_PLUS.conj())
    rho = (
        (abs(a) ** 2 * c2 + abs(b) ** 2 * s2) * p00
        + (abs(a) ** 2 * s2 + abs(b) ** 2 * c2) * ppp
        + c2 * (a * np.conj(b) * cross + np.conj(a) * b * dagger(cross))
    )
    return DensityMatrix(rho, (2, 2))


def unot_state(psi: PureState) -> PureState:
    """Three-qubit U-NOT output gamma0 |psi,psi>|perp> + gamma1 |{psi,perp}>|psi>."""
    _require_qubit(psi)
    v = psi.vector
    perp = orthogonal_state(psi).vector
    pair = (np.kron(v, perp) + np.kron(perp, v)) / np.sqrt(2)
    full = UNOT_GAMMA0 * kron(v, v, perp) + UNOT_GAMMA1 * np.kron(pair, v)
    return PureState(full, (2, 2, 2))


def unot_channel() -> EntanglerChannel:
    # the map is linear in psi, so its images of |0>, |1> fix the isometry
    cols = [unot_state(PureState(k)).vector for k in (KET0, KET1)]
    return EntanglerChannel("unot", np.stack(cols, axis=1), (2, 2, 2), (0, 1))


def apply_unot_entangler(psi: PureState) -> tuple[DensityMatrix, DensityMatrix, PureState]:
    """Return the AB output, the C output and the full three-qubit state."""
    full = unot_state(psi)
    proj = ket_to_projector(full.vector)
    ab = DensityMatrix(partial_trace(proj, (2, 2, 2), (0, 1)), (2, 2))
    c = DensityMatrix(partial_trace(proj, (2, 2, 2), (2,)), (2,))
    return ab, c, full


def unot_ab_closed_form(psi: PureState) -> DensityMatrix:
    v = psi.vector
    perp = orthogonal_state(psi).vector
    pair = (np.kron(v, perp) + np.kron(perp, v)) / np.sqrt(2)
    rho = UNOT_GAMMA1**2 * ket_to_projector(pair) + UNOT_GAMMA0**2 * ket_to_projector(np.kron(v, v))
    return DensityMatrix(rho, (2, 2))


def unot_target(psi: PureState) -> PureState:
    """(|psi>|perp> + |perp>|psi>)/sqrt2."""
    return symmetrized_ideal(psi, orthogonal_state(psi))


def antisymmetric_channel() -> EntanglerChannel:
    # psi is parked in a discarded slot; the kept pair is always the singlet
    v = np.kron(KET_MINUS.reshape(4, 1), np.eye(2))
    return EntanglerChannel("antisym", v, (2, 2, 2), (0, 1))


def antisymmetric_entangler(psi: PureState) -> DensityMatrix:
    """Constant map onto the singlet, whatever the input."""
    _require_qubit(psi)
    return DensityMatrix(ket_to_projector(KET_MINUS), (2, 2))


def controlled_swap(control: PureState, psi: PureState, phi: PureState) -> PureState:
    """Fredkin gate: swap the two D-dimensional registers when control is |1>."""
    if len(control) != 2:
        raise DimensionError("control must be a qubit")
    d = len(psi)
    if len(phi) != d:
        raise DimensionError("swapped registers must share a dimension")
    c0, c1 = control.vector
    out = c0 * kron(KET0, psi.vector, phi.vector) + c1 * kron(KET1, phi.vector, psi.vector)
    return PureState(out, (2, d, d))


def fredkin_matrix(d: int) -> np.ndarray:
    """Permutation matrix of the controlled swap on C^2 (x) C^d (x) C^d."""
    n = d * d
    u = np.zeros((2 * n, 2 * n))
    for j in range(d):
        for k in range(d):
            u[j * d + k, j * d + k] = 1
            u[n + k * d + j, n + j * d + k] = 1
    return u


@dataclass(frozen=True)
class PostSelectionResult:
    outcome: Literal["symmetric", "antisymmetric"]
    state: PureState | None
    probability: float


def swap_post_select(psi: PureState, phi: PureState) -> tuple[PostSelectionResult, PostSelectionResult]:
    """Run the controlled swap with control |v+> and read the control in |v+->.

    A branch whose probability falls below ``POSTSELECT_FLOOR`` carries
    ``state=None``.
    """
    d = len(psi)
    out = controlled_swap(PureState([1, 1] / np.sqrt(2)), psi, phi).vector.reshape(2, d * d)
    results = []
    for name, sign in (("symmetric", 1), ("antisymmetric", -1)):
        branch = (out[0] + sign * out[1]) / np.sqrt(2)
        prob = float(np.vdot(branch, branch).real)
        state = PureState.normalized(branch, (d, d)) if prob >= POSTSELECT_FLOOR else None
        results.append(PostSelectionResult(name, state, prob))
    return results[0], results[1]


def measurement_targets(eta: PureState) -> tuple[PureState, PureState]:
    """Prepared states for the positive and negative readout along ``eta``."""
    ref = PureState(KET0)
    return symmetrized_ideal(ref, eta), symmetrized_ideal(ref, orthogonal_state(eta))


def measurement_entangler_single(psi: PureState, eta: BlochAngles) -> DensityMatrix:
    """Measure ``psi`` along ``eta`` and prepare the matching symmetrized state."""
    _require_qubit(psi)
    e = ket_from_bloch(eta)
    good, bad = measurement_targets(e)
    p = abs(psi.overlap(e)) ** 2
    rho = p * ket_to_projector(good.vector) + (1 - p) * ket_to_projector(bad.vector)
    return DensityMatrix(rho, (2, 2))


def _symmetrized_rows(kets: np.ndarray) -> np.ndarray:
    """Normalized |0>|k> + |k>|0> for each row ``k`` of a (n, 2) array."""
    a, b = kets[:, 0], kets[:, 1]
    out = np.stack([2 * a, b, b, np.zeros_like(a)], axis=1)
    return out / np.linalg.norm(out, axis=1, keepdims=True)


def measurement_strategy_tables(n_theta: int, n_phi: int):
    """Per-direction data for the measurement strategy on a sphere rule.

    Returns ``(rule, eta, eta_perp, good, bad)`` where the last four are arrays
    of kets, one row per quadrature node.
    """
    rule = sphere_rule(n_theta, n_phi)
    eta = bloch_kets(rule.theta, rule.phi)
    eta_perp = np.stack([np.conj(eta[:, 1]), -np.conj(eta[:, 0])], axis=1)
    return rule, eta, eta_perp, _symmetrized_rows(eta), _symmetrized_rows(eta_perp)


def measurement_entangler_averaged(psi: PureState, n_theta: int = 64, n_phi: int = 64) -> DensityMatrix:
    """Measurement strategy averaged over uniformly random directions."""
    _require_qubit(psi)
    rule, eta, _, good, bad = measurement_strategy_tables(n_theta, n_phi)
    p = np.abs(eta.conj() @ psi.vector) ** 2
    rho = np.einsum("k,ki,kj->ij", rule.weights * p, good, good.conj())
    rho += np.einsum("k,ki,kj->ij", rule.weights * (1 - p), bad, bad.conj())
    return DensityMatrix(rho, (2, 2))


def charlie_protocol(psi: PureState, outcome: int) -> tuple[PureState, float]:
    """Measure qubit C of the U-NOT output in the computational basis.

    Returns the normalized AB state and the probability of ``outcome``.
    """
    if outcome not in (0, 1):
        raise ValueError("outcome must be 0 or 1")
    full = unot_state(psi).vector.reshape(4, 2)
    branch = full[:, outcome]
    prob = float(np.vdot(branch, branch).real)
    if prob < POSTSELECT_FLOOR:
        raise ValueError(f"outcome {outcome} has vanishing probability {prob:.3e}")
    return PureState(branch / np.sqrt(prob), (2, 2)), prob
