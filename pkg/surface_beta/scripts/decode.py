from __future__ import annotations

import json
from typing import Optional

import click

from surface_beta.core.exceptions import ConfigError
from surface_beta.codes.pauli import format_pauli, parse_pauli
from surface_beta.codes.surface import syndrome
from surface_beta.decoders.judge import DecoderName, decode_and_judge
from surface_beta.pipelines.writers import provenance
from .common import handle_errors, load_code, resolve_channel


@click.command()
@click.argument("error")
@click.option("--code", "code_spec", default="3,3", show_default=True, help="Distances 'dX,dZ'.")
@click.option("--xzzx", is_flag=True, help="Hadamard-rotated XZZX variant.")
@click.option("--decoder", type=click.Choice([d.value for d in DecoderName]), default="mwpm", show_default=True)
@click.option("--rho", type=float, default=None, help="Total error probability (with --bias).")
@click.option("--bias", default="1", show_default=True, help="Bias A = 2 p_Z / (p_X + p_Y); 'inf' for phase flip.")
@click.option("--px", type=float, default=None)
@click.option("--py", type=float, default=None)
@click.option("--pz", type=float, default=None)
@click.option("--spot-check", is_flag=True, help="Allow ML decoding of codes too large for full enumeration.")
@handle_errors
def main(
    error: str,
    code_spec: str,
    xzzx: bool,
    decoder: str,
    rho: Optional[float],
    bias: str,
    px: Optional[float],
    py: Optional[float],
    pz: Optional[float],
    spot_check: bool,
) -> None:
    """Decode one Pauli error (e.g. 'Z2 Z3') and print the outcome as JSON."""
    code = load_code(code_spec, xzzx)
    channel = resolve_channel(rho, bias, px, py, pz)
    if decoder == DecoderName.ML.value and channel is None:
        raise ConfigError("The ML decoder needs a channel: --rho [--bias] or --px/--py/--pz")
    err = parse_pauli(error, code.n)
    outcome = decode_and_judge(code, channel, decoder, err, spot_check=spot_check)
    payload = {
        "code": code.label,
        "variant": code.variant.value,
        "decoder": decoder,
        "error": format_pauli(err),
        "syndrome": "".join(str(b) for b in syndrome(code, err).bits),
        **outcome.as_dict(),
    }
    if channel is not None:
        payload["channel"] = channel.as_dict()
    config = {
        "code": code.code_id,
        "variant": code.variant.value,
        "decoder": decoder,
        "error": payload["error"],
        "channel": payload.get("channel"),
        "spot_check": spot_check,
    }
    click.echo(json.dumps({"provenance": provenance("decode", config), **payload}, indent=2, default=str))


if __name__ == "__main__":
    main()
