"""Hermite-function Ritz solver for one-dimensional Schrodinger operators."""

from ._core import (
    BracketingError,
    ConvergenceError,
    DegenerateInputError,
    NumericalError,
    Potential,
    RangeError,
    ValidationError,
    basis_derivative,
    basis_value,
    check_mhu,
    compare_with_oracle,
    count_nodes,
    eigh,
    element_oracle,
    gauss_hermite_rule,
    hamiltonian_matrix,
    hermite_eval,
    kinetic_matrix,
    minimize_alpha,
    numerov_eigenvalue,
    numerov_spectrum_below,
    potential_matrix,
    scan_alpha,
    solve_hamiltonian,
)

__all__ = [
    "BracketingError",
    "ConvergenceError",
    "DegenerateInputError",
    "NumericalError",
    "Potential",
    "RangeError",
    "ValidationError",
    "basis_derivative",
    "basis_value",
    "check_mhu",
    "compare_with_oracle",
    "count_nodes",
    "eigh",
    "element_oracle",
    "gauss_hermite_rule",
    "hamiltonian_matrix",
    "hermite_eval",
    "kinetic_matrix",
    "minimize_alpha",
    "numerov_eigenvalue",
    "numerov_spectrum_below",
    "potential_matrix",
    "scan_alpha",
    "solve_hamiltonian",
]
