from __future__ import annotations

import json

import click

from surface_beta.codes.surface import render_lattice
from surface_beta.pipelines.writers import PROVENANCE_PREFIX, provenance
from .common import handle_errors, load_code


@click.command()
@click.option("--code", "code_spec", default="3,3", show_default=True, help="Distances 'dX,dZ' (or 'd').")
@click.option("--xzzx", is_flag=True, help="Hadamard-rotated XZZX variant.")
@click.option("--lattice", is_flag=True, help="Print the ASCII lattice instead of JSON.")
@handle_errors
def main(code_spec: str, xzzx: bool, lattice: bool) -> None:
    """Print generators, logical operators and parameters of a planar code."""
    code = load_code(code_spec, xzzx)
    prov = provenance("describe", {"code": code.code_id, "variant": code.variant.value, "lattice": lattice})
    if lattice:
        click.echo(PROVENANCE_PREFIX + json.dumps(prov, default=str))
        click.echo(f"# {code.label} {code.variant.value}")
        click.echo(render_lattice(code))
        return
    click.echo(json.dumps({"provenance": prov, **code.describe()}, indent=2))


if __name__ == "__main__":
    main()
