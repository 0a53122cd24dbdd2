"""Probabilistic symmetrization with a controlled-SWAP and post-selection."""

# %%
from entangler_lab.entanglers import swap_post_select
from entangler_lab.states import KET0, KET1, PureState, make_rng, random_qubit

# %% Success probability is (1 + |<psi|phi>|^2)/2
rng = make_rng(3)
for _ in range(5):
    psi, phi = random_qubit(rng), random_qubit(rng)
    plus, minus = swap_post_select(psi, phi)
    ov = abs(psi.overlap(phi)) ** 2
    print(f"|<psi|phi>|^2={ov:.4f}  p+={plus.probability:.6f} ({(1 + ov) / 2:.6f})  p-={minus.probability:.6f}")

# %% Orthogonal inputs split evenly; the scheme also works for qutrits
print([r.probability for r in swap_post_select(PureState(KET0), PureState(KET1))])
print([r.probability for r in swap_post_select(PureState.normalized([1, 1, 0]), PureState([1, 0, 0]))])
