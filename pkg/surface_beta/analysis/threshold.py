"""Code-effective thresholds: where a logical error curve meets 10^-gamma rho.

The exact value comes from bracketing and bisecting the curve itself. The
approximate value keeps only the leading term (1 - beta_{t+1}) C(n, t+1) rho^{t+1}.
"""

from __future__ import annotations

import logging
import math
from typing import Callable, Optional

import numpy as np
from scipy.optimize import bisect

from surface_beta.core.exceptions import ConfigError, ThresholdNotFoundError
from surface_beta.core.utils import ThresholdConfig

logger = logging.getLogger(__name__)


def code_effective_threshold_exact(
    curve: Callable[[float], float],
    gamma: float = 0.0,
    config: Optional[ThresholdConfig] = None,
) -> float:
    """Largest rho with curve(rho) <= 10^-gamma * rho.

    The bracket is scanned on a log grid; the last grid cell where the curve
    crosses the shifted uncoded line upward is refined by bisection.
    """
    if gamma < 0:
        raise ConfigError(f"gamma must be >= 0, got {gamma}")
    config = config or ThresholdConfig()
    scale = 10.0 ** (-gamma)

    def gap(rho: float) -> float:
        return curve(rho) - scale * rho

    grid = np.geomspace(config.rho_min, config.rho_max, config.grid_points)
    values = np.array([gap(float(r)) for r in grid])
    if values[-1] <= 0:
        raise ThresholdNotFoundError(f"Curve stays below 10^-{gamma} rho up to the bracket top {config.rho_max}")
    below = np.nonzero(values <= 0)[0]
    if below.size == 0:
        raise ThresholdNotFoundError(f"Curve never drops below 10^-{gamma} rho in [{config.rho_min}, {config.rho_max}]")

    k = int(below[-1])
    lo, hi = float(grid[k]), float(grid[k + 1])
    if values[k] == 0:
        return lo
    root = bisect(gap, lo, hi, xtol=1e-15, rtol=config.rtol)
    logger.debug("Threshold (gamma=%s) bracketed in [%.4g, %.4g] -> %.6g", gamma, lo, hi, root)
    return float(root)


def code_effective_threshold_approx(n: int, t: int, beta_next: float, gamma: float = 0.0) -> float:
    """(1 / (10^gamma (1 - beta_{t+1}) C(n, t+1)))^(1/t)."""
    if t < 1:
        raise ConfigError(f"t must be >= 1, got {t}")
    if not 0.0 <= beta_next < 1.0:
        raise ConfigError(f"beta_next must lie in [0, 1) (beta = 1 gives no finite threshold), got {beta_next}")
    return (1.0 / (10.0**gamma * (1.0 - beta_next) * math.comb(n, t + 1))) ** (1.0 / t)
