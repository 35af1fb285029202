"""Closed-form logical error rates for i.i.d. Pauli channels.

Every evaluator sums the non-corrected tail directly instead of forming
1 - (corrected mass): the terms are all non-negative, so there is no
cancellation at small rho where the asymptotes matter.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional, Sequence

import numpy as np

from surface_beta.core.exceptions import ChannelError
from .params import BetaVector, CodeParams, as_beta_vector


def _check_rho(rho: float) -> None:
    if not 0.0 <= rho <= 1.0:
        raise ChannelError(f"rho must lie in [0, 1], got {rho}")


def binomial_term(n: int, j: int, p: float) -> float:
    """C(n, j) p^j (1-p)^(n-j)."""
    return math.comb(n, j) * p**j * (1.0 - p) ** (n - j)


def logical_error_bounded(n: int, t: int, rho: float) -> float:
    """Bounded-distance decoder: every weight > t pattern fails."""
    _check_rho(rho)
    return math.fsum(binomial_term(n, j, rho) for j in range(t + 1, n + 1))


def logical_error_asym(n: int, e_g: int, e_Z: int, p_Z: float, rho: float) -> float:
    """Weight-j patterns are corrected when at most e_g of their errors are X or Y and j <= e_g + e_Z."""
    _check_rho(rho)
    if p_Z < 0 or p_Z > rho + 1e-15:
        raise ChannelError(f"p_Z must lie in [0, rho], got p_Z={p_Z}, rho={rho}")
    p_xy = max(rho - p_Z, 0.0)
    cap = e_g + e_Z
    terms = []
    for j in range(0, n + 1):
        head = math.comb(n, j) * (1.0 - rho) ** (n - j)
        if j > cap:
            terms.append(head * rho**j)
            continue
        # i = number of Z errors; failures have more than e_g non-Z errors
        terms.extend(head * math.comb(j, i) * p_Z**i * p_xy ** (j - i) for i in range(0, max(j - e_g, 0)))
    return math.fsum(terms)


def _one_minus_alpha(j: int, e_g: int, A: float) -> float:
    if j <= e_g or math.isinf(A):
        return 0.0
    q = A / (A + 2.0)
    r = 2.0 / (A + 2.0)
    return math.fsum(math.comb(j, i) * q**i * r ** (j - i) for i in range(0, j - e_g))


def alpha_coeff(j: int, e_g: int, A: float) -> float:
    """Fraction of weight-j patterns with at most e_g non-Z errors under bias A (1 for A = inf)."""
    if A < 1:
        raise ChannelError(f"Bias A must be >= 1, got {A}")
    if j <= e_g or math.isinf(A):
        return 1.0
    q = A / (A + 2.0)
    r = 2.0 / (A + 2.0)
    return math.fsum(math.comb(j, i) * q**i * r ** (j - i) for i in range(j - e_g, j + 1))


def logical_error_alpha_form(n: int, e_g: int, e_Z: int, rho: float, A: float) -> float:
    _check_rho(rho)
    if A < 1:
        raise ChannelError(f"Bias A must be >= 1, got {A}")
    cap = e_g + e_Z
    terms = []
    for j in range(0, n + 1):
        miss = 1.0 if j > cap else _one_minus_alpha(j, e_g, A)
        if miss:
            terms.append(miss * binomial_term(n, j, rho))
    return math.fsum(terms)


def asymptotic_slope_approx(
    params: CodeParams,
    rho: float,
    beta_next: Optional[float] = None,
    A: float = 1.0,
) -> float:
    """Leading small-rho term of the logical error rate.

    With ``beta_next`` the weight t+1 term is scaled by 1 - beta_{t+1}. Over a
    phase-flip channel (A = inf) the leading weight is e_g + e_Z + 1; for finite
    A an asymmetric code keeps slope e_g + 1 with weight 1 - alpha_{e_g+1}.
    """
    if math.isinf(A):
        w = params.e_g + params.e_Z + 1
        scale = 1.0
    else:
        w = params.e_g + 1
        scale = _one_minus_alpha(w, params.e_g, A) if params.e_Z > 0 else 1.0
    if beta_next is not None:
        scale = 1.0 - beta_next
    return scale * math.comb(params.n, w) * rho**w


def logical_error_beta(n: int, t: int, rho: float, betas: "BetaVector | Sequence[float]") -> float:
    """Complete decoder over a depolarizing channel: weight j fails with fraction 1 - beta_j."""
    _check_rho(rho)
    bv = as_beta_vector(betas, t + 1)
    return math.fsum((1.0 - bv(j)) * binomial_term(n, j, rho) for j in range(t + 1, n + 1))


def logical_error_beta_z(n: int, t_Z: int, p_Z: float, betas_z: "BetaVector | Sequence[float]") -> float:
    _check_rho(p_Z)
    bv = as_beta_vector(betas_z, t_Z + 1)
    return math.fsum((1.0 - bv(j)) * binomial_term(n, j, p_Z) for j in range(t_Z + 1, n + 1))


def alpha_bound_curve(params: CodeParams, rhos: Iterable[float], A: float) -> np.ndarray:
    """Alpha-form bound evaluated over ``rhos``."""
    return np.array([logical_error_alpha_form(params.n, params.e_g, params.e_Z, float(r), A) for r in rhos])
