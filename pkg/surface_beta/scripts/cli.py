from __future__ import annotations

import click

from surface_beta import __version__
from . import analytic, decode, describe, enumerate_beta, plot_emit, reproduce, simulate, threshold
from .common import setup_logging


@click.group()
@click.version_option(__version__, prog_name="surface-beta")
@click.option("--debug", is_flag=True, help="DEBUG logging.")
@click.option("--quiet", is_flag=True, help="Only warnings and errors.")
def cli(debug: bool, quiet: bool) -> None:
    """Planar surface codes: decoding, beta coefficients, logical error rates."""
    setup_logging(debug=debug, quiet=quiet)


cli.add_command(describe.main, name="describe")
cli.add_command(decode.main, name="decode")
cli.add_command(enumerate_beta.main, name="enumerate-beta")
cli.add_command(analytic.main, name="analytic")
cli.add_command(threshold.main, name="threshold")
cli.add_command(simulate.main, name="simulate")
cli.add_command(reproduce.main, name="reproduce")
cli.add_command(plot_emit.main, name="plot-emit")


if __name__ == "__main__":
    cli()
