"""Monte Carlo logical error rates.

Trials are cut into blocks of ``SimConfig.block_size``. Block b of grid point k
draws from a Philox stream keyed by (master_seed, k, b), so the counts depend
only on the seed and the parameters, never on how blocks are spread over
workers.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from multiprocessing import Pool
from typing import Optional, Sequence

import numpy as np
import pandas as pd

from surface_beta.core.exceptions import ConfigError
from surface_beta.core.utils import SimConfig
from surface_beta.codes.channels import ChannelModel, channel_from_bias, sample_errors
from surface_beta.codes.pauli import PauliOperator
from surface_beta.codes.surface import SurfaceCode, Syndrome, Variant, build_code
from surface_beta.decoders.judge import DecoderName, decode, decode_and_judge
from .stats import wilson_interval

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimEstimate:
    rho: float
    A: float
    code_id: str
    decoder: str
    trials: int
    failures: int
    p_hat: float
    ci_lo: float
    ci_hi: float
    seed: int = 0
    point_index: int = 0
    p_X: float = 0.0
    p_Y: float = 0.0
    p_Z: float = 0.0

    @property
    def ci_halfwidth(self) -> float:
        return (self.ci_hi - self.ci_lo) / 2

    def as_dict(self) -> dict:
        out = asdict(self)
        out["ci_halfwidth"] = self.ci_halfwidth
        return out


def block_rng(master_seed: int, point_index: int, block: int) -> np.random.Generator:
    ss = np.random.SeedSequence(master_seed, spawn_key=(point_index, block))
    return np.random.Generator(np.random.Philox(ss))


def _rows_to_ints(bits: np.ndarray) -> list[int]:
    n = bits.shape[1]
    if n <= 63:
        packed = (bits.astype(np.uint64) << np.arange(n, dtype=np.uint64)).sum(axis=1)
        return [int(v) for v in packed]
    return [sum(1 << i for i in np.flatnonzero(row)) for row in bits]


def _run_block(
    code_key: tuple[int, int, str],
    decoder: str,
    channel: ChannelModel,
    master_seed: int,
    point_index: int,
    block: int,
    size: int,
) -> int:
    d_X, d_Z, variant = code_key
    code = build_code(d_X, d_Z, xzzx=variant == Variant.XZZX.value)
    x, z = sample_errors(channel, code.n, block_rng(master_seed, point_index, block), size)
    failures = 0
    for xv, zv in zip(_rows_to_ints(x), _rows_to_ints(z)):
        if not decode_and_judge(code, channel, decoder, PauliOperator(code.n, xv, zv)).success:
            failures += 1
    return failures


def _blocks(trials: int, block_size: int) -> list[int]:
    full, rest = divmod(trials, block_size)
    return [block_size] * full + ([rest] if rest else [])


def simulate(
    code: SurfaceCode,
    decoder: "str | DecoderName",
    channel: ChannelModel,
    trials: int,
    master_seed: int,
    config: Optional[SimConfig] = None,
    point_index: int = 0,
    A: Optional[float] = None,
) -> SimEstimate:
    """Estimate the logical error rate of ``decoder`` under ``channel``.

    ``A`` is the bias reported with the estimate; it defaults to ``channel.A``,
    which is not defined by a noiseless channel.
    """
    if trials < 1:
        raise ConfigError(f"trials must be >= 1, got {trials}")
    config = config or SimConfig()
    if config.block_size < 1:
        raise ConfigError(f"block_size must be >= 1, got {config.block_size}")
    name = DecoderName.parse(decoder).value

    # fail fast on decoder/code incompatibility
    decode(code, channel, name, Syndrome((0,) * len(code.generators)))

    sizes = _blocks(trials, config.block_size)
    jobs = [(code.key, name, channel, master_seed, point_index, b, size) for b, size in enumerate(sizes)]
    if config.workers > 1 and len(jobs) > 1:
        with Pool(processes=config.workers) as pool:
            counts = pool.starmap(_run_block, jobs)
    else:
        counts = [_run_block(*job) for job in jobs]

    failures = int(sum(counts))
    lo, hi = wilson_interval(failures, trials, config.confidence)
    est = SimEstimate(
        rho=channel.rho,
        A=channel.A if A is None else A,
        code_id=code.code_id,
        decoder=name,
        trials=trials,
        failures=failures,
        p_hat=failures / trials,
        ci_lo=lo,
        ci_hi=hi,
        seed=master_seed,
        point_index=point_index,
        p_X=channel.p_X,
        p_Y=channel.p_Y,
        p_Z=channel.p_Z,
    )
    logger.info(
        "%s %s rho=%.4g A=%s: %d/%d (p_hat=%.3g, CI [%.3g, %.3g])",
        code.label, name, channel.rho, channel.A, failures, trials, est.p_hat, lo, hi,
    )
    return est


def sweep(
    code: SurfaceCode,
    decoder: "str | DecoderName",
    rho_grid: Sequence[float],
    A: float,
    trials_per_point: int,
    master_seed: int,
    config: Optional[SimConfig] = None,
) -> list[SimEstimate]:
    """One :func:`simulate` per grid point; point k uses stream index k."""
    if not len(rho_grid):
        raise ConfigError("Empty rho grid")
    out = []
    for k, rho in enumerate(rho_grid):
        channel = channel_from_bias(float(rho), A)
        out.append(simulate(code, decoder, channel, trials_per_point, master_seed, config, point_index=k, A=A))
    return out


def estimates_frame(estimates: Sequence[SimEstimate]) -> pd.DataFrame:
    cols = ["rho", "A", "code_id", "decoder", "trials", "failures", "p_hat", "ci_lo", "ci_hi", "ci_halfwidth", "seed", "point_index", "p_X", "p_Y", "p_Z"]
    return pd.DataFrame([e.as_dict() for e in estimates], columns=cols)
