from __future__ import annotations

from pathlib import Path
from typing import Optional

import click

from surface_beta.core.utils import EnumerationConfig, SimConfig, default_workers
from surface_beta.reporting.figures import TARGETS, ReproduceOptions, reproduce
from .common import handle_errors, registry_option, tracked_run


def _kind(path: str) -> str:
    p = Path(path)
    return p.suffix.lstrip(".") or "file"


@click.command()
@click.argument("target", type=click.Choice([*TARGETS, "all"]))
@click.argument("out_dir")
@click.option("--trials", type=int, default=SimConfig.trials, show_default=True, help="Trials per simulated point.")
@click.option("--seed", type=int, default=ReproduceOptions.seed, show_default=True, help="Master seed.")
@click.option("--curve-points", type=int, default=ReproduceOptions.curve_points, show_default=True)
@click.option("--published-betas", is_flag=True, help="Use published beta values instead of enumerating them.")
@click.option("--allow-large", is_flag=True, help="Ignore the enumeration decode budget.")
@click.option("--workers", type=int, default=None, help="Worker processes (default: $SURFACE_BETA_WORKERS or 1).")
@registry_option
@handle_errors
def main(
    target: str,
    out_dir: str,
    trials: int,
    seed: int,
    curve_points: int,
    published_betas: bool,
    allow_large: bool,
    workers: Optional[int],
    registry_db: Optional[str],
) -> None:
    """Regenerate the beta table or a figure's curve bundle into OUT_DIR."""
    n_workers = workers or default_workers()
    opts = ReproduceOptions(
        seed=seed,
        sim=SimConfig(trials=trials, workers=n_workers),
        enumeration=EnumerationConfig(workers=n_workers, allow_large=allow_large),
        curve_points=curve_points,
        enumerate_betas=not published_betas,
    )
    targets = list(TARGETS) if target == "all" else [target]
    run_config = {
        "targets": targets,
        "trials": trials,
        "seed": seed,
        "curve_points": curve_points,
        "enumerate_betas": not published_betas,
    }

    with tracked_run(registry_db, "reproduce", run_config) as tracker:
        for name in targets:
            click.echo(f"[INFO] target {name}")
            for path in reproduce(name, out_dir, opts):
                tracker.record(f"{name}:{_kind(path)}", path)


if __name__ == "__main__":
    main()
