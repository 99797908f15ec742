"""Closed-form toolkit for real tridiagonal Toeplitz matrices with a*c > 0.

Diagonal symmetrisation, explicit eigenpairs, Chebyshev determinants, a
semiseparable inverse kernel with O(n) apply and decay bounds, sharp
weighted condition numbers, and exact big-integer repunit identities --
all cross-checked against a naive dense oracle.
"""

from .cheby import ScaledValue, eval_U, eval_U_recurrence, eval_U_scaled, u_sequence_scaled
from .conditioning import (
    ConditionReport,
    weighted_condition,
    weighted_inner,
    weighted_norm,
    weighted_operator_norm,
)
from .core import (
    SymmetrisedForm,
    TriToeplitzSpec,
    apply_matvec,
    make_spec,
    symmetrise,
    weight_vector,
    weighted_selfadjoint_residual,
)
from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    InvalidBase,
    InvalidOrder,
    InvalidParameter,
    NearSingularPivot,
    NotInGappedRegime,
    NotSymmetrisable,
    SingularMatrix,
    TriToeplitzError,
    ZeroOffDiagonal,
    ZeroVector,
)
from .greens import (
    DecayEnvelope,
    GreenKernel,
    apply_inverse,
    build_kernel,
    decay_bound,
    decay_envelope,
    hyperbolic_inverse_entry,
    inverse_dense,
    inverse_entry,
    thomas_solve,
)
from .repunit import (
    ALT_SCALING_NOTE,
    RepunitInverseEntry,
    RepunitValue,
    cheb_repunit_identity_residual,
    cosine_product,
    cosine_product_log,
    inverse_entry_alt_scaling,
    log_repunit,
    repunit,
    repunit_condition,
    repunit_det_exact,
    repunit_inverse_entry,
    repunit_matrix_spec,
)
from .spectral import (
    EigenPair,
    SpectrumSummary,
    char_poly_eval,
    determinant,
    determinant_continuant,
    eigen_pair,
    eigenvalues,
    eigenvector,
    extremal_eigenvalues,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # core
    "TriToeplitzSpec", "SymmetrisedForm", "make_spec", "symmetrise",
    "weight_vector", "apply_matvec", "weighted_selfadjoint_residual",
    # cheby
    "ScaledValue", "eval_U", "eval_U_scaled", "u_sequence_scaled",
    "eval_U_recurrence",
    # spectral
    "EigenPair", "SpectrumSummary", "eigenvalues", "eigenvector", "eigen_pair",
    "extremal_eigenvalues", "determinant", "determinant_continuant",
    "char_poly_eval",
    # greens
    "GreenKernel", "DecayEnvelope", "build_kernel", "inverse_entry",
    "inverse_dense", "apply_inverse", "thomas_solve", "decay_envelope",
    "decay_bound", "hyperbolic_inverse_entry",
    # conditioning
    "ConditionReport", "weighted_inner", "weighted_norm", "weighted_condition",
    "weighted_operator_norm",
    # repunit
    "RepunitValue", "RepunitInverseEntry", "ALT_SCALING_NOTE", "repunit",
    "log_repunit", "repunit_matrix_spec", "repunit_det_exact", "cosine_product",
    "cosine_product_log", "repunit_condition", "repunit_inverse_entry",
    "inverse_entry_alt_scaling", "cheb_repunit_identity_residual",
    # errors
    "TriToeplitzError", "ZeroOffDiagonal", "InvalidOrder", "InvalidParameter",
    "NotSymmetrisable", "DimensionMismatch", "IndexOutOfRange", "SingularMatrix",
    "NearSingularPivot", "NotInGappedRegime", "InvalidBase", "ZeroVector",
]
