"""The three-qubit U-NOT network as a psi -> {psi, psi_perp} entangler."""

# %%
import numpy as np

from entangler_lab import experiments as exp
from entangler_lab.entanglers import apply_unot_entangler, charlie_protocol, unot_target
from entangler_lab.linalg import partial_trace
from entangler_lab.metrics import bures_distance, fidelity_pure, ppt_min_eigenvalue
from entangler_lab.states import KET0, KET1, PureState, make_rng, orthogonal_state, random_qubits, symmetrized_ideal

# %% Every figure of merit is input independent
for psi in random_qubits(make_rng(1), 3):
    ab, c, _ = apply_unot_entangler(psi)
    clone = partial_trace(np.asarray(ab), (2, 2), (0,))
    print(f"entangling {fidelity_pure(ab, unot_target(psi)):.6f}  "
          f"flip {fidelity_pure(c, orthogonal_state(psi)):.6f}  clone {fidelity_pure(clone, psi):.6f}  "
          f"PPT {ppt_min_eigenvalue(ab):+.6f}  Bures {bures_distance(ab, unot_target(psi)):.6f}")

# %% Its AB output saturates the covariant no-signaling bound
ab, _, _ = apply_unot_entangler(PureState(KET0))
print("(eta, t, t_xy) of the output:", np.round(exp.nosignaling_parameters(np.asarray(ab)), 12))
res = exp.nosignaling_bound_search(1001)
print(f"search: F* = {res.fidelity:.9f} at t = {res.t:.9f}")

# %% Measuring C in the computational basis teleports a perfect symmetrization
psi = PureState([0.6, 0.8j])
for outcome, known in ((1, PureState(KET0)), (0, PureState(KET1))):
    state, p = charlie_protocol(psi, outcome)
    print(f"outcome {outcome}: p = {p:.4f}, |<ideal|AB>| = {abs(state.overlap(symmetrized_ideal(psi, known))):.15f}")
