from __future__ import annotations

from typing import Optional

import click

from surface_beta.core.exceptions import ConfigError
from surface_beta.core.utils import SimConfig, default_workers, parse_bias, parse_rho_grid
from surface_beta.decoders.judge import DecoderName
from surface_beta.montecarlo.engine import estimates_frame, simulate, sweep
from surface_beta.pipelines.writers import provenance, write_frame
from .common import handle_errors, load_code, registry_option, resolve_channel, tracked_run


@click.command()
@click.option("--code", "code_spec", default="3,3", show_default=True, help="Distances 'dX,dZ'.")
@click.option("--xzzx", is_flag=True, help="Hadamard-rotated XZZX variant.")
@click.option("--decoder", type=click.Choice([d.value for d in DecoderName]), default="mwpm", show_default=True)
@click.option("--rho", "rho_grid", default=None, help="'log:a:b:n', 'lin:a:b:n' or 'r1,r2,...'.")
@click.option("--bias", default="1", show_default=True, help="Bias A; 'inf' for phase flip.")
@click.option("--px", type=float, default=None, help="Explicit channel instead of --rho/--bias (one point).")
@click.option("--py", type=float, default=None)
@click.option("--pz", type=float, default=None)
@click.option("--trials", type=int, default=SimConfig.trials, show_default=True, help="Trials per grid point.")
@click.option("--seed", type=int, default=0, show_default=True, help="Master seed.")
@click.option("--block-size", type=int, default=SimConfig.block_size, show_default=True)
@click.option("--confidence", type=float, default=SimConfig.confidence, show_default=True)
@click.option("--workers", type=int, default=None, help="Worker processes (default: $SURFACE_BETA_WORKERS or 1).")
@click.option("--out", "out_path", required=True, help="Points file (.csv, .parquet or .json).")
@registry_option
@handle_errors
def main(
    code_spec: str,
    xzzx: bool,
    decoder: str,
    rho_grid: Optional[str],
    bias: str,
    px: Optional[float],
    py: Optional[float],
    pz: Optional[float],
    trials: int,
    seed: int,
    block_size: int,
    confidence: float,
    workers: Optional[int],
    out_path: str,
    registry_db: Optional[str],
) -> None:
    """Monte Carlo logical error rates with Wilson intervals over a rho grid or one explicit channel."""
    code = load_code(code_spec, xzzx)
    if rho_grid is not None and any(v is not None for v in (px, py, pz)):
        raise ConfigError("Give either --rho/--bias or --px/--py/--pz, not both")
    channel = resolve_channel(None, bias, px, py, pz)
    if channel is None and rho_grid is None:
        raise ConfigError("simulate needs --rho [--bias] or --px/--py/--pz")
    config = SimConfig(trials=trials, block_size=block_size, workers=workers or default_workers(), confidence=confidence)
    # results do not depend on the worker count, so it stays out of the hashed config
    run_config = {
        "code": code.code_id,
        "decoder": decoder,
        "trials": trials,
        "seed": seed,
        "block_size": block_size,
        "confidence": confidence,
    }
    if channel is not None:
        run_config["channel"] = channel.as_dict()
        points = 1
    else:
        A = parse_bias(bias)
        rhos = parse_rho_grid(rho_grid)
        run_config.update(rho=rhos, A=A)
        points = len(rhos)
    click.echo(f"[INFO] {code.label} {code.variant.value} {decoder}: {points} points x {trials} trials")

    with tracked_run(registry_db, "simulate", run_config) as tracker:
        if channel is not None:
            estimates = [simulate(code, decoder, channel, trials, seed, config)]
        else:
            estimates = sweep(code, decoder, rhos, A, trials, seed, config)
        for e in estimates:
            click.echo(f"[INFO] rho={e.rho:.4g} p_hat={e.p_hat:.4g} CI=[{e.ci_lo:.4g}, {e.ci_hi:.4g}]")
        frame = estimates_frame(estimates)
        tracker.record("points", write_frame(frame, out_path, provenance("simulate", run_config)), rows=len(frame))


if __name__ == "__main__":
    main()
