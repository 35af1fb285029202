from __future__ import annotations

import math
from typing import Callable, Optional

import click
import pandas as pd

from surface_beta.core.exceptions import ConfigError
from surface_beta.core.utils import parse_bias, parse_rho_grid
from surface_beta.analysis.formulas import (
    asymptotic_slope_approx,
    logical_error_alpha_form,
    logical_error_asym,
    logical_error_beta,
    logical_error_beta_z,
    logical_error_bounded,
)
from surface_beta.analysis.params import BetaVector, CodeParams
from surface_beta.codes.channels import channel_from_bias
from surface_beta.pipelines.writers import provenance, write_frame
from .common import beta_source, handle_errors, load_code, resolve_betas

FORMULAS = ("bounded", "asym", "alpha", "beta", "beta-z", "asymptote")


def formula_curve(name: str, params: CodeParams, A: float, betas: Optional[BetaVector]) -> Callable[[float], float]:
    """rho -> rho_L for one named closed form."""
    if name == "bounded":
        return lambda r: logical_error_bounded(params.n, params.t, r)
    if name == "asym":
        return lambda r: logical_error_asym(params.n, params.e_g, params.e_Z, channel_from_bias(r, A).p_Z, r)
    if name == "alpha":
        return lambda r: logical_error_alpha_form(params.n, params.e_g, params.e_Z, r, A)
    if name == "asymptote":
        beta_next = betas.next_beta if betas is not None else None
        return lambda r: asymptotic_slope_approx(params, r, beta_next, A=A)
    if betas is None:
        raise ConfigError(f"Formula {name!r} needs beta values: --betas, --published or --from-table")
    if name == "beta":
        return lambda r: logical_error_beta(params.n, params.t, r, betas)
    if name == "beta-z":
        # rho is p_Z over a phase-flip channel
        return lambda r: logical_error_beta_z(params.n, params.t_Z, r, betas)
    raise ConfigError(f"Unknown formula {name!r}; expected one of {list(FORMULAS)}")


def uses_z_betas(name: str, A: float) -> bool:
    return name == "beta-z" or (name == "asymptote" and math.isinf(A))


@click.command()
@click.argument("formula", type=click.Choice(FORMULAS))
@click.option("--code", "code_spec", default="3,3", show_default=True, help="Distances 'dX,dZ'.")
@click.option("--bias", default="1", show_default=True, help="Bias A; 'inf' for phase flip.")
@click.option("--rho", "rho_grid", default="log:1e-3:0.2:40", show_default=True, help="'log:a:b:n', 'lin:a:b:n' or 'r1,r2,...'.")
@click.option("--betas", default=None, help="Comma-separated beta values starting at --beta-start.")
@click.option("--beta-start", type=int, default=None, help="Weight of the first --betas value (default t+1).")
@click.option("--published", is_flag=True, help="Use the published beta set for this code.")
@click.option("--from-table", default=None, help="BetaTable JSON written by enumerate-beta.")
@click.option("--out", "out_path", required=True, help="Output CSV/Parquet/JSON with columns rho, rho_L.")
@handle_errors
def main(
    formula: str,
    code_spec: str,
    bias: str,
    rho_grid: str,
    betas: Optional[str],
    beta_start: Optional[int],
    published: bool,
    from_table: Optional[str],
    out_path: str,
) -> None:
    """Evaluate a closed-form logical error rate over a rho grid."""
    code = load_code(code_spec)
    params = CodeParams.from_code(code)
    A = parse_bias(bias)
    rhos = parse_rho_grid(rho_grid)
    z_only = uses_z_betas(formula, A)
    start = params.t_Z + 1 if z_only else params.t + 1
    bv = resolve_betas(code, start, betas, beta_start, published, from_table, phase_flip=z_only)

    curve = formula_curve(formula, params, A, bv)
    df = pd.DataFrame({"rho": rhos, "rho_L": [curve(r) for r in rhos]})
    df.insert(0, "series", f"{code.label} {formula} A={bias}")
    config = {
        "formula": formula,
        "code": code.code_id,
        "A": A,
        "rho_grid": rho_grid,
        "beta_source": beta_source(betas, published, from_table),
        "betas": {"start": bv.start, "values": list(bv.values)} if bv else None,
    }
    path = write_frame(df, out_path, provenance("analytic", config))
    click.echo(f"[OK] {formula} ({len(df)} points) -> {path}")


if __name__ == "__main__":
    main()
