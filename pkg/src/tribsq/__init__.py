"""Exact generalized Tribonacci numbers and identities for their squares and cubes."""

from .discovery import build_sample_matrix, discover_identity, integer_kernel, random_specs
from .errors import (
    AmbiguousKernel,
    DenominatorZero,
    InsufficientRows,
    NonUnitConstantTerm,
    TribsqError,
    VariantSpecMismatch,
)
from .genfunc import (
    Polynomial,
    RationalFunction,
    convergence_radius_estimate,
    lemma2_generating_function,
    series_coefficients,
    theorem3_squares_genfunc,
    tribonacci_squares_genfunc,
)
from .identities import IdentityReport, IdentityTemplate, builtin_identities, residual, verify_range
from .recurrence import LinearRecurrence
from .sequence import TRIBONACCI, SequenceSpec, range_terms, term, term_alt, term_fast
from .sums import (
    SumReport,
    SumVariant,
    compare,
    direct_sum_oracle,
    lemma1_partial_sum,
    special_sum,
    theorem2_weighted_square_sum,
)

__version__ = "0.1.0"
