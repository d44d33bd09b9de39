"""Toolkit for bipartite bound entangled Gaussian states.

Construction of a four-mode bound entangled family, entanglement
classification (PPT margin plus a separability semidefinite program),
normal-form decompositions, optical circuit synthesis, and parameter-space
sweeps.
"""

from . import errors
from .circuits import (
    BeamSplitter,
    OpticalCircuit,
    PhaseShift,
    Squeezer,
    build_preparation_circuit,
    decompose_unitary,
    elements_to_symplectic,
    elements_to_unitary,
    passive_to_unitary,
    simulate,
    unitary_to_passive,
)
from .core import (
    Bipartition,
    CovarianceMatrix,
    Ordering,
    SymplecticTransform,
    apply_symplectic,
    direct_sum,
    is_ppt,
    is_symplectic,
    is_valid_covariance,
    partial_transpose,
    ppt_margin,
    random_symplectic,
    random_valid_covariance,
    reorder,
    symplectic_form,
    thermal_state,
    vacuum_state,
    validity_margin,
)
from .decomp import (
    EulerForm,
    WilliamsonForm,
    euler_decompose,
    symplectic_eigenvalues,
    verify_reference_values,
    williamson,
)
from .family import (
    EXAMPLE_NAMES,
    FamilyParams,
    commutes_with_sign_symmetry,
    construct,
    example_params,
    family_bipartition,
    is_minimal_bound_entangled,
    random_admissible_params,
    sign_symmetry,
    validate_params,
)
from .sdp import (
    SEPARABILITY_TOL,
    EntanglementClass,
    EntanglementVerdict,
    SolverOptions,
    classify,
    is_separable,
    solve_min_slack,
)
from .sweep import (
    AsymptoteEstimate,
    BoundaryCurve,
    BoundaryKind,
    SweepGrid,
    SweepOptions,
    estimate_asymptote,
    find_boundary,
    scan,
    trace_boundary,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "apply_symplectic",
    "AsymptoteEstimate",
    "BeamSplitter",
    "Bipartition",
    "BoundaryCurve",
    "BoundaryKind",
    "build_preparation_circuit",
    "classify",
    "commutes_with_sign_symmetry",
    "construct",
    "CovarianceMatrix",
    "decompose_unitary",
    "direct_sum",
    "elements_to_symplectic",
    "elements_to_unitary",
    "EntanglementClass",
    "EntanglementVerdict",
    "errors",
    "estimate_asymptote",
    "euler_decompose",
    "EulerForm",
    "EXAMPLE_NAMES",
    "example_params",
    "family_bipartition",
    "FamilyParams",
    "find_boundary",
    "is_minimal_bound_entangled",
    "is_ppt",
    "is_separable",
    "is_symplectic",
    "is_valid_covariance",
    "OpticalCircuit",
    "Ordering",
    "partial_transpose",
    "passive_to_unitary",
    "PhaseShift",
    "ppt_margin",
    "random_admissible_params",
    "random_symplectic",
    "random_valid_covariance",
    "reorder",
    "scan",
    "SEPARABILITY_TOL",
    "sign_symmetry",
    "simulate",
    "solve_min_slack",
    "SolverOptions",
    "Squeezer",
    "SweepGrid",
    "SweepOptions",
    "symplectic_eigenvalues",
    "symplectic_form",
    "SymplecticTransform",
    "thermal_state",
    "trace_boundary",
    "unitary_to_passive",
    "vacuum_state",
    "validate_params",
    "validity_margin",
    "verify_reference_values",
    "williamson",
    "WilliamsonForm",
]
