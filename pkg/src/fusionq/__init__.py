"""Exact fusion rings of WZW models and their Q-system verification tools."""

from .cartan import (
    BetaChain,
    BetaChainError,
    DynkinType,
    RootSystem,
    WeightSystem,
    bilinear_form,
    build_root_system,
    verify_beta_chain,
    weight_multiplicities,
)
from .fusion import (
    FusionContext,
    FusionElement,
    ReducedWeight,
    ReductionLimitError,
    affinize,
    alcove_reduce,
    apply_outer,
    conjugate,
    element_from_json,
    element_to_json,
    enumerate_basis,
    fusion_product,
)
from .qsystem import (
    ConjectureReport,
    KNSReport,
    KRDataUnavailableError,
    RestrictedSolution,
    WGrid,
    admissibility_matrix,
    boundary_check,
    check_conjecture,
    check_unrestricted,
    coupling_matrix,
    generate_w_grid,
    kns_report,
    kr_classical_components,
    kr_element,
    open_index_set,
    period_multiplier,
    restricted_solution,
    solve_f_system,
    supported_vertices,
    uniqueness_check,
    zero_string_lemmas,
)
from .smatrix import (
    NumericDegradationError,
    OracleUnavailableError,
    SMatrix,
    build_smatrix,
    element_quantum_dimension,
    generalized_qdim,
    quantum_dimension,
    smatrix_entry,
    verlinde_coefficient,
    verlinde_matrix,
    weyl_group,
)

__version__ = "0.1.0"

__all__ = [
    "BetaChain",
    "BetaChainError",
    "ConjectureReport",
    "DynkinType",
    "FusionContext",
    "FusionElement",
    "KNSReport",
    "KRDataUnavailableError",
    "NumericDegradationError",
    "OracleUnavailableError",
    "ReducedWeight",
    "ReductionLimitError",
    "RestrictedSolution",
    "RootSystem",
    "SMatrix",
    "WGrid",
    "WeightSystem",
    "admissibility_matrix",
    "affinize",
    "alcove_reduce",
    "apply_outer",
    "bilinear_form",
    "boundary_check",
    "build_root_system",
    "build_smatrix",
    "check_conjecture",
    "check_unrestricted",
    "conjugate",
    "coupling_matrix",
    "element_from_json",
    "element_quantum_dimension",
    "element_to_json",
    "enumerate_basis",
    "fusion_product",
    "generalized_qdim",
    "generate_w_grid",
    "kns_report",
    "kr_classical_components",
    "kr_element",
    "open_index_set",
    "period_multiplier",
    "quantum_dimension",
    "restricted_solution",
    "smatrix_entry",
    "solve_f_system",
    "supported_vertices",
    "uniqueness_check",
    "verify_beta_chain",
    "verlinde_coefficient",
    "verlinde_matrix",
    "weight_multiplicities",
    "weyl_group",
    "zero_string_lemmas",
]
