import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from entangler_lab.states import (
    KET0,
    KET1,
    BlochAngles,
    DegenerateInputError,
    DensityMatrix,
    PureState,
    antisymmetrized_ideal,
    bell_states,
    bloch_vector,
    ket_from_bloch,
    make_rng,
    orthogonal_state,
    qubit,
    random_qubits,
    symmetrized_ideal,
)

angles = st.tuples(st.floats(0, np.pi), st.floats(0, 2 * np.pi, exclude_max=True))


def same_ray(a, b, tol=1e-12):
    return abs(abs(np.vdot(np.asarray(a), np.asarray(b))) - 1) < tol


def test_pure_state_requires_unit_norm():
    with pytest.raises(ValueError):
        PureState([1.0, 1.0])
    assert len(PureState.normalized([1.0, 1.0])) == 2


def test_normalizing_zero_vector_fails():
    with pytest.raises(DegenerateInputError):
        PureState.normalized([0.0, 0.0])


def test_pure_state_is_immutable():
    psi = PureState(KET0)
    with pytest.raises(ValueError):
        psi.vector[0] = 0


def test_bloch_angle_ranges():
    with pytest.raises(ValueError):
        BlochAngles(-0.1, 0.0)
    with pytest.raises(ValueError):
        BlochAngles(0.0, 2 * np.pi)


def test_ket_from_bloch_poles_and_equator():
    assert np.allclose(ket_from_bloch(BlochAngles(0.0, 1.3)).vector, KET0)
    assert np.allclose(ket_from_bloch(BlochAngles(np.pi, 0.0)).vector, KET1)
    assert np.allclose(ket_from_bloch(BlochAngles(np.pi / 2, 0.0)).vector, [1 / np.sqrt(2)] * 2)


def test_orthogonal_state_examples():
    assert np.allclose(orthogonal_state(PureState(KET0)).vector, -KET1)
    assert np.allclose(orthogonal_state(PureState(KET1)).vector, KET0)
    psi = qubit(1 / np.sqrt(2), 1j / np.sqrt(2))
    assert np.allclose(orthogonal_state(psi).vector, np.array([-1j, -1]) / np.sqrt(2))


@settings(max_examples=100, deadline=None)
@given(angles)
def test_orthogonal_state_is_orthogonal(ang):
    psi = ket_from_bloch(BlochAngles(*ang))
    assert abs(psi.overlap(orthogonal_state(psi))) < 1e-14


def test_orthogonal_state_rejects_qutrit():
    with pytest.raises(ValueError):
        orthogonal_state(PureState([1.0, 0.0, 0.0]))


def test_symmetrized_ideal_examples():
    zero, one = PureState(KET0), PureState(KET1)
    assert np.allclose(symmetrized_ideal(zero, zero).vector, [1, 0, 0, 0])
    assert np.allclose(symmetrized_ideal(one, zero).vector, np.array([0, 1, 1, 0]) / np.sqrt(2))


@settings(max_examples=50, deadline=None)
@given(angles, angles)
def test_symmetrized_ideal_is_swap_symmetric(a, b):
    psi, phi = ket_from_bloch(BlochAngles(*a)), ket_from_bloch(BlochAngles(*b))
    v = symmetrized_ideal(psi, phi).vector.reshape(2, 2)
    assert np.allclose(v, v.T, atol=1e-12)


def test_antisymmetrized_ideal_is_singlet():
    singlet = bell_states()[1]
    psi = qubit(0.6, 0.8j)
    assert same_ray(antisymmetrized_ideal(psi, PureState(KET0)), singlet)


def test_antisymmetrized_ideal_degenerate_input():
    with pytest.raises(DegenerateInputError):
        antisymmetrized_ideal(PureState(KET0), PureState(KET0))


def test_bell_states():
    plus, minus = bell_states()
    assert np.allclose(plus.vector, np.array([0, 1, 1, 0]) / np.sqrt(2))
    assert np.allclose(minus.vector, np.array([0, 1, -1, 0]) / np.sqrt(2))


def test_density_matrix_validation():
    DensityMatrix(np.eye(2) / 2)
    with pytest.raises(ValueError):
        DensityMatrix(np.eye(2))
    with pytest.raises(ValueError):
        DensityMatrix(np.diag([1.5, -0.5]))


def test_random_qubits_reproducible_and_haar_moments():
    a = random_qubits(make_rng(9), 20000)
    b = random_qubits(make_rng(9), 20000)
    assert all(np.array_equal(x.vector, y.vector) for x, y in zip(a[:5], b[:5]))
    r = np.array([bloch_vector(p) for p in a])
    assert np.allclose(r.mean(axis=0), 0, atol=0.02)
    assert np.allclose(np.linalg.norm(r, axis=1), 1)
    assert np.allclose((r**2).mean(axis=0), 1 / 3, atol=0.02)
