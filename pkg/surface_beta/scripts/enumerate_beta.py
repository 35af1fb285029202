from __future__ import annotations

from pathlib import Path
from typing import Optional

import click

from surface_beta.core.utils import EnumerationConfig, default_workers
from surface_beta.analysis.params import CodeParams
from surface_beta.decoders.judge import DecoderName
from surface_beta.enumeration.table import beta_table, table1_frame
from surface_beta.pipelines.writers import provenance, write_frame, write_json
from .common import handle_errors, load_code, registry_option, resolve_channel, tracked_run


@click.command()
@click.option("--code", "code_spec", default="3,3", show_default=True, help="Distances 'dX,dZ'.")
@click.option("--xzzx", is_flag=True, help="Hadamard-rotated XZZX variant.")
@click.option("--decoder", type=click.Choice([d.value for d in DecoderName]), default="mwpm", show_default=True)
@click.option("-j", "--weight", "weights", type=int, multiple=True, help="Error weight to enumerate (repeatable). Default t+1.")
@click.option("--max-weight", type=int, default=None, help="Enumerate every weight from t+1 up to this one.")
@click.option("--rho", type=float, default=None, help="Channel for the ML decoder.")
@click.option("--bias", default="1", show_default=True)
@click.option("--out", "out_path", required=True, help="BetaTable JSON (.json) or per-class rows (.csv/.parquet).")
@click.option("--table1", "table1_path", default=None, help="Also write the table layout (one row per weight) here.")
@click.option("--budget", type=int, default=EnumerationConfig.budget, show_default=True, help="Max decodes per job.")
@click.option("--allow-large", is_flag=True, help="Ignore the decode budget.")
@click.option("--workers", type=int, default=None, help="Worker processes (default: $SURFACE_BETA_WORKERS or 1).")
@registry_option
@handle_errors
def main(
    code_spec: str,
    xzzx: bool,
    decoder: str,
    weights: tuple[int, ...],
    max_weight: Optional[int],
    rho: Optional[float],
    bias: str,
    out_path: str,
    table1_path: Optional[str],
    budget: int,
    allow_large: bool,
    workers: Optional[int],
    registry_db: Optional[str],
) -> None:
    """Exhaustively enumerate error classes and write the beta coefficients."""
    code = load_code(code_spec, xzzx)
    channel = resolve_channel(rho, bias, None, None, None)
    t = CodeParams.from_code(code).t
    ws = list(weights)
    if max_weight is not None:
        ws += range(t + 1, max_weight + 1)
    ws = sorted(set(ws)) or [t + 1]

    config = EnumerationConfig(budget=budget, workers=workers or default_workers(), allow_large=allow_large)
    run_config = {
        "code": code.code_id,
        "decoder": decoder,
        "weights": ws,
        "channel": channel.as_dict() if channel else None,
    }
    click.echo(f"[INFO] {code.label} {decoder}: weights {ws}, workers={config.workers}")

    with tracked_run(registry_db, "enumerate-beta", run_config) as tracker:
        table = beta_table(code, decoder, ws, channel=channel, config=config)
        for r in table.rows:
            click.echo(f"[INFO] j={r.j} 1-beta={r.one_minus_beta:.4f} 1-beta_Z={r.one_minus_beta_z:.4f} ({r.total} patterns)")

        prov = provenance("enumerate-beta", run_config)
        if Path(out_path).suffix.lower() == ".json":
            tracker.record("beta_table", write_json(table.to_dict(), out_path, prov), rows=len(table.rows))
        else:
            frame = table.to_frame()
            tracker.record("beta_classes", write_frame(frame, out_path, prov), rows=len(frame))
        if table1_path:
            frame = table1_frame([table])
            tracker.record("table1", write_frame(frame, table1_path, prov), rows=len(frame))


if __name__ == "__main__":
    main()
