from __future__ import annotations

import json
import math
from typing import Optional

import click

from surface_beta.core.exceptions import ConfigError, ThresholdNotFoundError
from surface_beta.core.utils import ThresholdConfig
from surface_beta.analysis.params import CodeParams
from surface_beta.analysis.threshold import code_effective_threshold_approx, code_effective_threshold_exact
from surface_beta.pipelines.writers import provenance, write_json
from .analytic import formula_curve
from .common import beta_source, handle_errors, load_code, resolve_betas


@click.command()
@click.option("--code", "code_spec", default="3,3", show_default=True, help="Distances 'dX,dZ'.")
@click.option("--phase-flip", is_flag=True, help="Use beta^Z over a phase-flip channel (t = e_g + e_Z).")
@click.option("--betas", default=None, help="Comma-separated beta values from t+1 (or --beta-start).")
@click.option("--beta-start", type=int, default=None)
@click.option("--published", is_flag=True, help="Use the published beta set for this code.")
@click.option("--from-table", default=None, help="BetaTable JSON written by enumerate-beta.")
@click.option("-g", "--gamma", "gammas", type=float, multiple=True, help="Improvement exponent (repeatable). Default 0 and 1.")
@click.option("--rho-min", type=float, default=ThresholdConfig.rho_min, show_default=True)
@click.option("--rho-max", type=float, default=ThresholdConfig.rho_max, show_default=True)
@click.option("--out", "out_path", default=None, help="Write JSON here instead of stdout.")
@handle_errors
def main(
    code_spec: str,
    phase_flip: bool,
    betas: Optional[str],
    beta_start: Optional[int],
    published: bool,
    from_table: Optional[str],
    gammas: tuple[float, ...],
    rho_min: float,
    rho_max: float,
    out_path: Optional[str],
) -> None:
    """Exact (bisection) and approximate code-effective thresholds."""
    code = load_code(code_spec)
    params = CodeParams.from_code(code)
    t = params.e_g + params.e_Z if phase_flip else params.t
    bv = resolve_betas(code, t + 1, betas, beta_start, published, from_table, phase_flip=phase_flip)
    if bv is None:
        raise ConfigError("Thresholds need beta values: --betas, --published or --from-table")
    formula = "beta-z" if phase_flip else "beta"
    curve = formula_curve(formula, params, math.inf if phase_flip else 1.0, bv)
    config = ThresholdConfig(rho_min=rho_min, rho_max=rho_max)

    rows = []
    for gamma in gammas or (0.0, 1.0):
        try:
            exact: Optional[float] = code_effective_threshold_exact(curve, gamma, config)
        except ThresholdNotFoundError as e:
            click.echo(f"[WARN] gamma={gamma:g}: {e}", err=True)
            exact = None
        approx = code_effective_threshold_approx(params.n, t, bv(t + 1), gamma)
        rows.append({"gamma": gamma, "exact": exact, "approx": approx})

    source = beta_source(betas, published, from_table)
    payload = {
        "code": code.label,
        "formula": formula,
        "t": t,
        "beta_source": source,
        "betas": {"start": bv.start, "values": list(bv.values)},
        "thresholds": rows,
    }
    prov = provenance(
        "threshold",
        {"code": code.code_id, "formula": formula, "beta_source": source, "betas": payload["betas"], "rho_min": rho_min, "rho_max": rho_max},
    )
    if out_path:
        path = write_json(payload, out_path, prov)
        click.echo(f"[OK] thresholds -> {path}")
    else:
        click.echo(json.dumps({"provenance": prov, **payload}, indent=2))


if __name__ == "__main__":
    main()
