import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from entangler_lab import entanglers as ent
from entangler_lab.linalg import DimensionError
from entangler_lab.metrics import (
    bures_distance,
    fidelity_pure,
    hs_distance,
    hs_distance_to_pure,
    ppt_min_eigenvalue,
    root_fidelity,
    von_neumann_entropy,
)
from entangler_lab.states import KET0, DensityMatrix, PureState, bell_states, make_rng, qubit, symmetrized_ideal

from conftest import random_density

ZERO = PureState(KET0)


def test_fidelity_of_pure_state_with_itself():
    psi = qubit(0.6, 0.8j)
    assert fidelity_pure(psi.projector(), psi) == pytest.approx(1.0, abs=1e-15)
    assert fidelity_pure(DensityMatrix(np.eye(2) / 2), psi) == pytest.approx(0.5)


def test_fidelity_dimension_mismatch():
    with pytest.raises(DimensionError):
        fidelity_pure(np.eye(4) / 4, ZERO)


def test_bures_identical_and_orthogonal():
    psi = qubit(0.6, 0.8j)
    assert bures_distance(psi.projector(), psi.projector()) == pytest.approx(0, abs=1e-7)
    plus, minus = bell_states()
    assert bures_distance(plus, minus) == pytest.approx(np.sqrt(2))


def test_bures_of_optimal_symmetrizer():
    psi = qubit(0.6, 0.8)
    rho = ent.apply_optimal_entangler(psi)
    f = (9 + 3 * np.sqrt(2)) / 14
    assert bures_distance(rho, symmetrized_ideal(psi, ZERO)) == pytest.approx(np.sqrt(2 - 2 * np.sqrt(f)), abs=1e-12)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_bures_routes_agree_on_pure_targets(seed):
    rng = make_rng(seed)
    rho = DensityMatrix(random_density(rng, 4))
    target = PureState.normalized(rng.normal(size=4) + 1j * rng.normal(size=4))
    general = bures_distance(rho, target.projector())
    assert general == pytest.approx(bures_distance(rho, target), abs=1e-9)


def test_bures_is_symmetric():
    rng = make_rng(11)
    a, b = random_density(rng, 3), random_density(rng, 3)
    assert bures_distance(a, b) == pytest.approx(bures_distance(b, a), abs=1e-10)


def test_root_fidelity_commuting_states():
    a = np.diag([0.7, 0.3]).astype(complex)
    b = np.diag([0.2, 0.8]).astype(complex)
    assert root_fidelity(a, b) == pytest.approx(np.sqrt(0.14) + np.sqrt(0.24), abs=1e-14)


def test_hs_distance_routes_agree():
    rng = make_rng(12)
    rho = random_density(rng, 4)
    t = PureState.normalized(rng.normal(size=4))
    assert hs_distance(rho, t.projector()) == pytest.approx(hs_distance_to_pure(rho, t), abs=1e-12)


def test_entropy_values():
    assert von_neumann_entropy(np.eye(2) / 2) == pytest.approx(np.log(2))
    assert von_neumann_entropy(ZERO.projector()) == pytest.approx(0.0, abs=1e-15)
    assert von_neumann_entropy(np.eye(4) / 4) == pytest.approx(np.log(4))


def test_ppt_separable_and_entangled():
    assert ppt_min_eigenvalue(np.eye(4) / 4) == pytest.approx(0.25)
    assert ppt_min_eigenvalue(bell_states()[1].projector()) == pytest.approx(-0.5, abs=1e-14)
    rho = bell_states()[0].projector()
    assert ppt_min_eigenvalue(rho, 0) == pytest.approx(ppt_min_eigenvalue(rho, 1), abs=1e-14)


def test_ppt_requires_two_qubits():
    with pytest.raises(DimensionError):
        ppt_min_eigenvalue(np.eye(9) / 9)
