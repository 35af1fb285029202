from __future__ import annotations

from typing import Optional

import click

from surface_beta.reporting.plotting import plot_emit
from .common import handle_errors


@click.command()
@click.argument("paths", nargs=-1, required=True)
@click.option("--out", "out_stem", required=True, help="Output stem; writes <stem>.dat and <stem>.gp.")
@click.option("--title", default=None)
@click.option("--uncoded", is_flag=True, help="Add the uncoded reference line rho_L = rho.")
@handle_errors
def main(paths: tuple[str, ...], out_stem: str, title: Optional[str], uncoded: bool) -> None:
    """Emit a log-log gnuplot script overlaying curve files from simulate/analytic."""
    art = plot_emit(paths, out_stem, title=title, uncoded=uncoded)
    if art.series == 0:
        click.echo("[WARN] no data series in the input; script has no plot lines", err=True)
    click.echo(f"[OK] data -> {art.data}")
    click.echo(f"[OK] script -> {art.script}")


if __name__ == "__main__":
    main()
