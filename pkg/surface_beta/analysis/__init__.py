"""Closed-form logical error rates and code-effective thresholds."""

from .formulas import (
    alpha_bound_curve,
    alpha_coeff,
    asymptotic_slope_approx,
    logical_error_alpha_form,
    logical_error_asym,
    logical_error_beta,
    logical_error_beta_z,
    logical_error_bounded,
)
from .params import PUBLISHED_TABLE1, BetaVector, CodeParams, published_betas, table1_tolerance
from .threshold import code_effective_threshold_approx, code_effective_threshold_exact

__all__ = [
    "PUBLISHED_TABLE1",
    "BetaVector",
    "CodeParams",
    "alpha_bound_curve",
    "alpha_coeff",
    "asymptotic_slope_approx",
    "code_effective_threshold_approx",
    "code_effective_threshold_exact",
    "logical_error_alpha_form",
    "logical_error_asym",
    "logical_error_beta",
    "logical_error_beta_z",
    "logical_error_bounded",
    "published_betas",
    "table1_tolerance",
]
