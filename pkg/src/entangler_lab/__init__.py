"""Universal qubit entanglers: channels, diagnostics and reproduction drivers."""

from .entanglers import (
    MachineVectors,
    PostSelectionResult,
    antisymmetric_entangler,
    apply_optimal_entangler,
    apply_unot_entangler,
    charlie_protocol,
    controlled_swap,
    measurement_entangler_averaged,
    measurement_entangler_single,
    optimal_entangler_machine,
    swap_post_select,
)
from .linalg import (
    hermitian_eigenvalues,
    jacobi_eigh,
    kron,
    matrix_sqrt_psd,
    partial_trace,
    partial_transpose,
)
from .metrics import (
    bures_distance,
    fidelity_pure,
    hs_distance,
    ppt_min_eigenvalue,
    von_neumann_entropy,
)
from .states import (
    BlochAngles,
    DensityMatrix,
    PureState,
    antisymmetrized_ideal,
    bell_states,
    ket_from_bloch,
    make_rng,
    orthogonal_state,
    random_qubit,
    symmetrized_ideal,
)

__version__ = "0.1.0"
