"""Exact five-mode fermionic simulator for Alice + two-wedge entanglement.

The package builds the Unruh vacuum and mode operators on a 32-dimensional
fermionic Fock space, reduces Alice+wedge-I states along configurable
operator orderings, and measures entanglement negativity; see the module
docstrings of fock, unruh and entanglement for the conventions.
"""

from .fock import (A, C_I, C_II, D_I, D_II, DIM, MODE_LABELS, N_MODES,
                   OperatorExpr, annihilation, apply_annihilation,
                   apply_creation, apply_operator, basis_index,
                   coefficient_distance, creation, identity, inner_product,
                   ket, occupations, operator_matrix)
from .unruh import (QR_GRID, R_GRID, R_MAX, SQRT_HALF, StateFamily,
                    UnruhParams, build_state, random_family, random_params,
                    region_I_operator, region_modes, unruh_creation,
                    unruh_vacuum)
from .entanglement import (LEGACY_INTERLEAVED, ORDERING_PRESETS, PHYSICAL,
                           DensityMatrix, OperatorOrdering, OrderingSpread,
                           classify_orderings,
                           infinite_acceleration_reduced_state, negativity,
                           partial_transpose, qubit_partial_trace,
                           qubit_reduced_state, reduced_state,
                           subalgebra_reduced_state, to_qubit_basis)
from .sweep import SweepConfig, SweepRecord, r_grid, render_csv, sweep_records
from .checks import CheckResult, run_all

__version__ = "0.1.0"

__all__ = [
    "A", "C_I", "C_II", "D_I", "D_II", "DIM", "MODE_LABELS", "N_MODES",
    "OperatorExpr", "annihilation", "apply_annihilation", "apply_creation",
    "apply_operator", "basis_index", "coefficient_distance", "creation",
    "identity", "inner_product", "ket", "occupations", "operator_matrix",
    "QR_GRID", "R_GRID", "R_MAX", "SQRT_HALF", "StateFamily", "UnruhParams",
    "build_state", "random_family", "random_params", "region_I_operator",
    "region_modes", "unruh_creation", "unruh_vacuum",
    "LEGACY_INTERLEAVED", "ORDERING_PRESETS", "PHYSICAL", "DensityMatrix",
    "OperatorOrdering", "OrderingSpread", "classify_orderings",
    "infinite_acceleration_reduced_state", "negativity", "partial_transpose",
    "qubit_partial_trace", "qubit_reduced_state", "reduced_state",
    "subalgebra_reduced_state", "to_qubit_basis",
    "SweepConfig", "SweepRecord", "r_grid", "render_csv", "sweep_records",
    "CheckResult", "run_all",
]
