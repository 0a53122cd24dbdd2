"""The optimal universal symmetrizer: one fidelity for every input."""

# %%
import numpy as np

from entangler_lab import apply_optimal_entangler, bures_distance, fidelity_pure, make_rng, symmetrized_ideal
from entangler_lab.entanglers import optimal_entangler_machine
from entangler_lab.metrics import hs_distance_to_pure, ppt_min_eigenvalue
from entangler_lab.states import KET0, PureState, random_qubits

ref = PureState(KET0)

# %% The machine is an isometry into AB plus a 3-dim ancilla
mv = optimal_entangler_machine()
print("unitarity residuals:", mv.unitarity_residuals())

# %% Fidelity to the symmetrized target over random inputs
rng = make_rng(0)
fids = []
for psi in random_qubits(rng, 500):
    fids.append(fidelity_pure(apply_optimal_entangler(psi), symmetrized_ideal(psi, ref)))
print(f"fidelity min {min(fids):.15f} max {max(fids):.15f}")
print(f"(9 + 3 sqrt 2)/14 = {(9 + 3 * np.sqrt(2)) / 14:.15f}")

# %% Bures distance is constant too; the HS distance is not
for a2 in (0.0, 0.5, 1.0):
    psi = PureState([np.sqrt(a2), np.sqrt(1 - a2)])
    rho, target = apply_optimal_entangler(psi), symmetrized_ideal(psi, ref)
    print(f"alpha^2={a2:.1f}  Bures {bures_distance(rho, target):.6f}  "
          f"HS {hs_distance_to_pure(rho, target):.6f}  PPT min eig {ppt_min_eigenvalue(rho):+.6f}")
