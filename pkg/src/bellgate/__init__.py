"""bellgate: Bell-observable realizations via controlled-unitary transformations.

Finite dimension: clock/shift gate sets, shift-and-multiply Bell bases and the
controlled-shift gate that maps a local Fourier-product basis onto them.
Continuous variables: a truncated Fock-space realization of the optical SUM
gate decomposition (squeezers, a two-mode squeezer, beam splitters) cross
checked against its exact 4x4 symplectic representation.
"""

from .dket import (
    DoubleKet,
    apply_sandwich,
    hs_inner,
    is_maximally_entangled,
    ptrace_first,
    ptrace_second,
    unvec,
    vec,
)
from .fock import (
    FockOperator,
    RegularizedState,
    beam_splitter_5050,
    cutoff_convergence_defect,
    displacement,
    displaced_identity_doubleket,
    entbs_fidelity,
    entbs_fidelity_scan,
    heterodyne_eigen_residual,
    identity_doubleket,
    matched_lambda,
    mode_mixer,
    mode_ops,
    opa,
    phase_shift,
    quad_eigenstate_approx,
    quadrature,
    squeezer,
    sum_gate,
    sum_gate_block_distance,
    sum_gate_circuit,
)
from .gaussian import (
    DecompositionParams,
    HardwareParams,
    circuit_symplectic,
    circuit_vs_target_error,
    decomposition_params,
    hardware_params,
    su11_pauli_defect,
    sum_gate_symplectic,
    symplectic_defect,
    symplectic_of,
)
from .linalg import expm, frobenius_norm, kron, matmul
from .qudit import (
    QuditGateSet,
    bell_map_max_error,
    bell_vector,
    make_gateset,
    orthonormality_max_error,
    shift_multiply,
    v_from_bell_basis,
)
from .reports import CheckResult, VerificationReport

__version__ = "0.1.0"
