"""i.i.d. single-qubit Pauli channels parametrised by (rho, A)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from surface_beta.core.exceptions import ChannelError
from .pauli import PauliOperator

_TOL = 1e-12


@dataclass(frozen=True)
class ChannelModel:
    p_X: float
    p_Y: float
    p_Z: float

    def __post_init__(self) -> None:
        if min(self.p_X, self.p_Y, self.p_Z) < 0:
            raise ChannelError(f"Negative probability in {self}")
        if self.rho > 1 + _TOL:
            raise ChannelError(f"p_X + p_Y + p_Z = {self.rho} exceeds 1")

    @property
    def rho(self) -> float:
        return self.p_X + self.p_Y + self.p_Z

    @property
    def A(self) -> float:
        rest = self.rho - self.p_Z
        if rest <= 0:
            return math.inf
        return 2 * self.p_Z / rest

    @property
    def is_phase_flip(self) -> bool:
        return self.p_X == 0 and self.p_Y == 0

    def probabilities(self) -> tuple[float, float, float, float]:
        """(P(I), P(X), P(Y), P(Z)) for one qubit."""
        return max(0.0, 1.0 - self.rho), self.p_X, self.p_Y, self.p_Z

    def as_dict(self) -> dict:
        return {"p_X": self.p_X, "p_Y": self.p_Y, "p_Z": self.p_Z, "rho": self.rho, "A": self.A}


def channel_from_bias(rho: float, A: float = 1.0) -> ChannelModel:
    """p_Z = A*rho/(A+2), p_X = p_Y = rho/(A+2); A = inf gives the phase-flip channel."""
    if not 0 <= rho <= 1:
        raise ChannelError(f"rho must lie in [0, 1], got {rho}")
    if math.isnan(A) or A < 1:
        raise ChannelError(f"Bias A must be >= 1 (or inf), got {A}")
    if math.isinf(A):
        return ChannelModel(0.0, 0.0, rho)
    p_xy = rho / (A + 2)
    return ChannelModel(p_xy, p_xy, A * rho / (A + 2))


def depolarizing(rho: float) -> ChannelModel:
    return channel_from_bias(rho, 1.0)


def phase_flip(rho: float) -> ChannelModel:
    return channel_from_bias(rho, math.inf)


def sample_errors(channel: ChannelModel, n: int, rng: np.random.Generator, size: int) -> tuple[np.ndarray, np.ndarray]:
    """Draw ``size`` i.i.d. errors as (x, z) uint8 arrays of shape (size, n)."""
    u = rng.random((size, n))
    px, py = channel.p_X, channel.p_Y
    x = u < px + py
    z = (u >= px) & (u < channel.rho)
    return x.astype(np.uint8), z.astype(np.uint8)


def sample_error(channel: ChannelModel, n: int, rng: np.random.Generator) -> PauliOperator:
    """Each qubit: X, Y, Z with p_X, p_Y, p_Z, identity otherwise."""
    x, z = sample_errors(channel, n, rng, 1)
    return PauliOperator.from_arrays(x[0], z[0])


def pattern_probability(channel: ChannelModel, error: PauliOperator) -> float:
    n_x, n_y, n_z = error.counts()
    w = n_x + n_y + n_z
    p_i, p_x, p_y, p_z = channel.probabilities()
    return p_i ** (error.n - w) * p_x**n_x * p_y**n_y * p_z**n_z


def pattern_probabilities(channel: ChannelModel, x: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Vectorised :func:`pattern_probability` over rows of (x, z) bit arrays."""
    x = np.asarray(x, dtype=bool)
    z = np.asarray(z, dtype=bool)
    n = x.shape[-1]
    n_y = np.sum(x & z, axis=-1)
    n_x = np.sum(x, axis=-1) - n_y
    n_z = np.sum(z, axis=-1) - n_y
    p_i, p_x, p_y, p_z = channel.probabilities()
    w = n_x + n_y + n_z
    return (
        np.power(p_i, n - w)
        * np.power(p_x, n_x)
        * np.power(p_y, n_y)
        * np.power(p_z, n_z)
    )
