"""Shared utilities (code and grid parsing, run configuration, env defaults)."""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from surface_beta.core.exceptions import ConfigError

_CLEAN_SPACES = re.compile(r"\s+")

ENV_WORKERS = "SURFACE_BETA_WORKERS"
ENV_REGISTRY = "SURFACE_BETA_REGISTRY"
DEFAULT_REGISTRY_DB = "data/registry/surface_beta.db"


def clean_text(s: str) -> str:
    return _CLEAN_SPACES.sub(" ", s or "").strip()


def default_workers() -> int:
    raw = os.getenv(ENV_WORKERS, "1")
    try:
        return max(1, int(raw))
    except ValueError as e:
        raise ConfigError(f"{ENV_WORKERS} must be an integer, got {raw!r}") from e


def default_registry_db() -> str:
    return os.getenv(ENV_REGISTRY, DEFAULT_REGISTRY_DB)


def parse_code_spec(text: str) -> tuple[int, int]:
    """Parse a code spec like '3,5' (d_X, d_Z) or '3' (square).

    Examples:
      - '3,5' -> (3, 5)
      - '5'   -> (5, 5)
    """
    t = clean_text(text).replace("x", ",").replace("/", ",")
    parts = [p for p in t.split(",") if p.strip()]
    try:
        dims = [int(p) for p in parts]
    except ValueError as e:
        raise ConfigError(f"Invalid code spec {text!r}; expected 'dX,dZ'") from e
    if len(dims) == 1:
        return dims[0], dims[0]
    if len(dims) != 2:
        raise ConfigError(f"Invalid code spec {text!r}; expected 'dX,dZ'")
    return dims[0], dims[1]


def parse_bias(text: Optional[str | float]) -> float:
    """Parse a bias value; 'inf' (any case) means a phase-flip channel."""
    if text is None:
        return 1.0
    if isinstance(text, (int, float)):
        return float(text)
    t = clean_text(text).lower()
    if t in {"inf", "infinity", "oo", "∞"}:
        return math.inf
    try:
        return float(t)
    except ValueError as e:
        raise ConfigError(f"Invalid bias {text!r}") from e


def parse_rho_grid(text: str) -> list[float]:
    """Parse a rho grid.

    Accepted forms:
      - 'log:1e-3:0.2:15' -> 15 log-spaced points
      - 'lin:0.02:0.16:8' -> 8 linearly spaced points
      - '0.01,0.023,0.047' -> explicit list
    """
    t = clean_text(text)
    if not t:
        raise ConfigError("Empty rho grid")
    head = t.split(":", 1)[0].lower()
    if head in {"log", "lin"}:
        try:
            _, lo, hi, num = t.split(":")
            lo_f, hi_f, num_i = float(lo), float(hi), int(num)
        except ValueError as e:
            raise ConfigError(f"Invalid rho grid {text!r}") from e
        if num_i < 1 or lo_f < 0 or hi_f < lo_f or (head == "log" and lo_f == 0):
            raise ConfigError(f"Invalid rho grid {text!r}")
        if head == "log":
            grid = np.geomspace(lo_f, hi_f, num_i)
        else:
            grid = np.linspace(lo_f, hi_f, num_i)
        return [float(x) for x in grid]
    try:
        grid = [float(p) for p in t.split(",") if p.strip()]
    except ValueError as e:
        raise ConfigError(f"Invalid rho grid {text!r}") from e
    if not grid:
        raise ConfigError("Empty rho grid")
    return grid


@dataclass
class SimConfig:
    trials: int = 100_000
    block_size: int = 1_000
    workers: int = field(default_factory=default_workers)
    confidence: float = 0.95


@dataclass
class EnumerationConfig:
    budget: int = 5_000_000
    workers: int = field(default_factory=default_workers)
    allow_large: bool = False


@dataclass
class ThresholdConfig:
    rho_min: float = 1e-6
    rho_max: float = 0.5
    grid_points: int = 400
    rtol: float = 1e-6
