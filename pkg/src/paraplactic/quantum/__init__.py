from paraplactic.quantum.hecke import (
    HeckeElement,
    HeckeReport,
    eulerian_idempotent,
    gamma_basis,
    multiply,
    verify_ideal_action,
    verify_idempotent,
)
from paraplactic.quantum.permutation import Permutation, all_permutations
from paraplactic.quantum.rmatrix import (
    RMatrixOperator,
    RMatrixReport,
    TensorVector,
    build_rmatrix,
    compute_I3,
    eigen_multiplicities,
    gamma_elements,
    knuth_binomials,
    local_basis_limit,
    matches_binomials,
    pi_q_apply,
    verify_I3,
    verify_ybe_hecke,
)

__all__ = [
    "HeckeElement",
    "HeckeReport",
    "Permutation",
    "RMatrixOperator",
    "RMatrixReport",
    "TensorVector",
    "all_permutations",
    "build_rmatrix",
    "compute_I3",
    "eigen_multiplicities",
    "eulerian_idempotent",
    "gamma_basis",
    "gamma_elements",
    "knuth_binomials",
    "local_basis_limit",
    "matches_binomials",
    "multiply",
    "pi_q_apply",
    "verify_I3",
    "verify_ideal_action",
    "verify_idempotent",
    "verify_ybe_hecke",
]
