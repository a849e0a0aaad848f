"""Thermal pairwise entanglement of the 3-qubit XX ring with a magnetic impurity.

The closed-form route (exact spectrum, eigenstates, X-state reduced matrices,
Wootters concurrence) and a fully independent brute-force route (numeric
diagonalization, Gibbs state, partial trace, general concurrence) are both
exposed, together with a cross-validation harness and a CLI.
"""

from .entanglement import (
    PairSelector,
    XElements,
    c12_zero_t_limit,
    c13_approx_in_regime,
    c13_low_t_approx,
    concurrence_general,
    concurrence_pair,
    concurrence_x,
    eof_from_concurrence,
    partial_trace,
    reduced_elements,
    reduced_elements_12,
    reduced_elements_13,
)
from .linalg import EigenDecomposition, hermitian_eigen, kron, psd_sqrt
from .model import (
    EigenSystem,
    ModelParams,
    b_plus_minus,
    build_hamiltonian,
    closed_form_eigensystem,
    closed_form_spectrum,
    model_hamiltonian,
    spectrum_b_negation_map,
)
from .oracle import CrossCheckReport, cross_check, numeric_concurrence, threshold_scan
from .thermal import (
    GibbsState,
    ThermalParams,
    gibbs_state,
    ground_state_mixture,
    log_partition_function_closed,
    partition_function_closed,
    shifted_partition_function_closed,
)

__version__ = "0.1.0"

__all__ = [
    "CrossCheckReport",
    "EigenDecomposition",
    "EigenSystem",
    "GibbsState",
    "ModelParams",
    "PairSelector",
    "ThermalParams",
    "XElements",
    "b_plus_minus",
    "build_hamiltonian",
    "c12_zero_t_limit",
    "c13_approx_in_regime",
    "c13_low_t_approx",
    "closed_form_eigensystem",
    "closed_form_spectrum",
    "concurrence_general",
    "concurrence_pair",
    "concurrence_x",
    "cross_check",
    "eof_from_concurrence",
    "gibbs_state",
    "ground_state_mixture",
    "hermitian_eigen",
    "kron",
    "log_partition_function_closed",
    "model_hamiltonian",
    "numeric_concurrence",
    "partial_trace",
    "partition_function_closed",
    "psd_sqrt",
    "reduced_elements",
    "reduced_elements_12",
    "reduced_elements_13",
    "shifted_partition_function_closed",
    "spectrum_b_negation_map",
    "threshold_scan",
]
