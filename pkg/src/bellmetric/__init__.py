"""Certified CHSH lower bounds and dense nonlocal-state constructions.

The package centers on the CHSH coefficient of a bipartite density
operator: the best Bell-operator expectation achievable with two
dichotomic observables per subsystem.  It provides

* dense operator arithmetic and spectral primitives,
* constructors for the named states (Werner states, two-level
  superpositions, the quiet-path family) and the conditioning map,
* a see-saw optimizer emitting replayable lower-bound certificates,
  with an exact two-qubit oracle to certify it,
* explicit approximating sequences whose steps violate the CHSH
  inequality outright, after local filtering, or provably never,
* a CLI (``bellmetric``) reproducing every experiment from a seed.
"""

from .config import (
    ASSERTION_TOL,
    CONDITION_TOL,
    OPTIMIZER_TOL,
    SIGN_TOL,
    STRUCTURAL_TOL,
)
from .validation import NullConditioningError
from .operators import (
    ComplexOperator,
    DensityOperator,
    DichotomicObservable,
    HermitianOperator,
    Projection,
    PureVector,
    basis_projection,
    best_dichotomic,
    expectation,
    identity,
    operator_norm,
    partial_trace,
    partial_transpose,
    spectral_sign,
    tensor,
    trace_norm,
)
from .states import (
    condition,
    conditioning_weight,
    embedded_werner,
    flip_operator,
    maximally_mixed,
    path_vector,
    reduced,
    singlet_projector,
    truncate,
    two_level_pure,
    werner22,
)
from .bell import (
    SQRT2,
    BellOperator,
    CorrelationSettings,
    bell_operator,
    chsh_value,
    compress_bell,
    horodecki_gamma_2x2,
    horodecki_settings_2x2,
    landau_residual,
    mixed_factor_bound,
    pauli_correlation_matrix,
    safe_radius,
    settings_from_matrices,
)
from .seesaw import BellBoundCertificate, SeesawGamma, seesaw_gamma
from .constructions import (
    DEFAULT_LAMBDA_GRID,
    FilterViolation,
    GammaCeiling,
    NoViolationFound,
    PathPoint,
    SequenceStep,
    hidden_nonlocal_step,
    hidden_nonlocality_check,
    insensitive_mixture_step,
    negativity,
    path_experiment,
    violating_step,
)
from . import sampling, serialization

__version__ = "0.1.0"

__all__ = [
    "ASSERTION_TOL",
    "CONDITION_TOL",
    "OPTIMIZER_TOL",
    "SIGN_TOL",
    "STRUCTURAL_TOL",
    "SQRT2",
    "BellBoundCertificate",
    "BellOperator",
    "ComplexOperator",
    "CorrelationSettings",
    "DEFAULT_LAMBDA_GRID",
    "DensityOperator",
    "DichotomicObservable",
    "FilterViolation",
    "GammaCeiling",
    "HermitianOperator",
    "NoViolationFound",
    "NullConditioningError",
    "PathPoint",
    "Projection",
    "PureVector",
    "SeesawGamma",
    "SequenceStep",
    "basis_projection",
    "bell_operator",
    "best_dichotomic",
    "chsh_value",
    "compress_bell",
    "condition",
    "conditioning_weight",
    "embedded_werner",
    "expectation",
    "flip_operator",
    "hidden_nonlocal_step",
    "hidden_nonlocality_check",
    "horodecki_gamma_2x2",
    "horodecki_settings_2x2",
    "identity",
    "insensitive_mixture_step",
    "landau_residual",
    "maximally_mixed",
    "mixed_factor_bound",
    "negativity",
    "operator_norm",
    "partial_trace",
    "partial_transpose",
    "path_experiment",
    "path_vector",
    "pauli_correlation_matrix",
    "reduced",
    "safe_radius",
    "sampling",
    "seesaw_gamma",
    "serialization",
    "settings_from_matrices",
    "singlet_projector",
    "spectral_sign",
    "tensor",
    "trace_norm",
    "truncate",
    "two_level_pure",
    "violating_step",
    "werner22",
]
