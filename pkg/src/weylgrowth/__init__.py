"""Exact enumeration of Kac-Moody Weyl groups by word length.

Builds generalized Cartan matrices for the classical, affine-A, and
over-extended HA families, enumerates their Weyl groups level by level
using canonical nonnegative root-lattice vectors, and analyzes the
resulting growth series: closed-form Poincare polynomials for finite and
affine types, and polynomial-quotient fits for the hyperbolic ones.
"""

from .algebra import (
    AlgebraDescriptor,
    CartanMatrixError,
    GeneralizedCartanMatrix,
    NotFiniteError,
    RankOutOfRangeError,
    SingularMatrixError,
    UnknownFamilyError,
    build_catalog,
    fundamental_weights,
    gcm_from_json,
    invariant_degrees,
    invert_cartan,
    load_gcm_file,
    validate_gcm,
    weyl_group_order,
)
from .series import (
    InsufficientOrderError,
    IntPolynomial,
    NonUnitConstantTermError,
    RatioFitResult,
    TruncatedSeries,
    affine_poincare,
    cyclotomic_polynomial,
    cyclotomic_trial_division,
    expand_factored,
    factors_from_json_list,
    finite_poincare,
    polynomial_from_json_dict,
    ratio_fit,
    series_div,
    series_mul,
)
from .weyl import (
    CheckpointMismatchError,
    GrowthSeries,
    LevelCheckpoint,
    enumerate_levels,
    gamma_reflect,
    gcm_digest,
    level_sets,
    weyl_orbit_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraDescriptor",
    "CartanMatrixError",
    "CheckpointMismatchError",
    "GeneralizedCartanMatrix",
    "GrowthSeries",
    "InsufficientOrderError",
    "IntPolynomial",
    "LevelCheckpoint",
    "NonUnitConstantTermError",
    "NotFiniteError",
    "RankOutOfRangeError",
    "RatioFitResult",
    "SingularMatrixError",
    "TruncatedSeries",
    "UnknownFamilyError",
    "affine_poincare",
    "build_catalog",
    "cyclotomic_polynomial",
    "cyclotomic_trial_division",
    "enumerate_levels",
    "expand_factored",
    "factors_from_json_list",
    "finite_poincare",
    "fundamental_weights",
    "gamma_reflect",
    "gcm_digest",
    "gcm_from_json",
    "invariant_degrees",
    "invert_cartan",
    "level_sets",
    "load_gcm_file",
    "polynomial_from_json_dict",
    "ratio_fit",
    "series_div",
    "series_mul",
    "validate_gcm",
    "weyl_group_order",
    "weyl_orbit_oracle",
]
