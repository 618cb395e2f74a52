"""Exact-arithmetic complete-intersection decision for simplicial toric ideals."""

from .certify import VerifyResult, exponent_matrix, is_dominating, is_mixed, verify_ci
from .cisolver import (
    CIResult,
    ci_projective,
    ci_simplicial,
    curve_family_expected,
    gen_family_curve,
    gen_family_surface,
)
from .errors import InternalInvariantError, ToricError, ValidationError
from .toric import (
    Binomial,
    Configuration,
    ReductionResult,
    SimplicialConfig,
    gcd_vec,
    height,
    reduce,
)

__all__ = [
    "Binomial",
    "CIResult",
    "Configuration",
    "InternalInvariantError",
    "ReductionResult",
    "SimplicialConfig",
    "ToricError",
    "ValidationError",
    "VerifyResult",
    "ci_projective",
    "ci_simplicial",
    "curve_family_expected",
    "exponent_matrix",
    "gcd_vec",
    "gen_family_curve",
    "gen_family_surface",
    "height",
    "is_dominating",
    "is_mixed",
    "reduce",
    "verify_ci",
]

__version__ = "0.1.0"
