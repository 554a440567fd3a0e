"""Distances between quantum states as operation-induced probability gaps.

Core objects: density matrices and Kraus-set quantum operations; the
trace distance/fidelity family of metrics; constructions that attain the
trace distance as a probability gap; matched state pairs for a given
operation; contraction bounds for normalized and subnormalized outputs;
triangle-statistics trials; and seeded verification suites behind the
``qopdist`` command.
"""

from ._kernels import kernel_backend
from .channels import (
    ContractivityReport,
    ExtremalPair,
    QuantumOperation,
    apply,
    cloner_distance_factor,
    cloner_outputs,
    contractivity_check,
    e_distance,
    is_trace_preserving,
    max_e_distance_over_states,
    normalize_output,
    occurrence_probability,
    random_operation,
    t_operator,
)
from .errors import (
    DegenerateInputError,
    DimensionMismatchError,
    MatrixFileError,
    NotMaximizingShapeError,
    NumericalError,
    PurityError,
    QopdistError,
    ReportParseError,
    ValidationError,
    ZeroProbabilityError,
)
from .linalg import (
    SpectralSplit,
    eig_hermitian,
    hermitian_part,
    projector_onto,
    psd_sqrt,
    random_hermitian,
    spectral_split,
    trace_norm_half,
)
from .matrixio import (
    load_kraus_set,
    load_matrix,
    load_state,
    save_kraus_set,
    save_matrix,
    save_state,
)
from .maximizers import (
    BoundReport,
    MaximizerCertificate,
    MaximizerMode,
    build_maximizing_operation,
    build_state_pair,
    certify_maximizer,
    extremal_trace_product,
    maximizing_projector,
    theorem3_report,
    theorem4_report,
)
from .metrics import (
    FvdgReport,
    QubitGapPoint,
    angle,
    check_fvdg_bounds,
    fidelity,
    max_qubit_gap,
    qubit_gap,
    sine_distance,
    trace_distance,
)
from .states import DensityMatrix, bloch_of, from_bloch, random_density, random_pure, validate_state
from .statlab import (
    BoundKind,
    DominanceResult,
    MomentCheck,
    TrialRecord,
    TrianglePoint,
    dominance_implies_moments,
    empirical_cdf,
    mean_output_distance_bound,
    moment_check,
    pair_for_point,
    run_trials,
    sample_triangle,
    sample_triangle_batch,
)
from .suites import SuiteReport, parse_report, run_all, run_suite, write_report

__version__ = "0.1.0"

__all__ = [
    "BoundKind",
    "BoundReport",
    "ContractivityReport",
    "DegenerateInputError",
    "DensityMatrix",
    "DimensionMismatchError",
    "DominanceResult",
    "ExtremalPair",
    "FvdgReport",
    "MatrixFileError",
    "MaximizerCertificate",
    "MaximizerMode",
    "MomentCheck",
    "NotMaximizingShapeError",
    "NumericalError",
    "PurityError",
    "QopdistError",
    "QuantumOperation",
    "QubitGapPoint",
    "ReportParseError",
    "SpectralSplit",
    "SuiteReport",
    "TrialRecord",
    "TrianglePoint",
    "ValidationError",
    "ZeroProbabilityError",
    "angle",
    "apply",
    "bloch_of",
    "build_maximizing_operation",
    "build_state_pair",
    "certify_maximizer",
    "check_fvdg_bounds",
    "cloner_distance_factor",
    "cloner_outputs",
    "contractivity_check",
    "dominance_implies_moments",
    "e_distance",
    "eig_hermitian",
    "empirical_cdf",
    "extremal_trace_product",
    "fidelity",
    "from_bloch",
    "hermitian_part",
    "is_trace_preserving",
    "kernel_backend",
    "load_kraus_set",
    "load_matrix",
    "load_state",
    "max_e_distance_over_states",
    "max_qubit_gap",
    "maximizing_projector",
    "mean_output_distance_bound",
    "moment_check",
    "normalize_output",
    "occurrence_probability",
    "pair_for_point",
    "parse_report",
    "projector_onto",
    "psd_sqrt",
    "qubit_gap",
    "random_density",
    "random_hermitian",
    "random_operation",
    "random_pure",
    "run_all",
    "run_suite",
    "run_trials",
    "sample_triangle",
    "sample_triangle_batch",
    "save_kraus_set",
    "save_matrix",
    "save_state",
    "sine_distance",
    "spectral_split",
    "t_operator",
    "theorem3_report",
    "theorem4_report",
    "trace_distance",
    "trace_norm_half",
    "validate_state",
    "write_report",
]
