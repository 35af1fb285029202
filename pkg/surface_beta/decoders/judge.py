from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from surface_beta.core.exceptions import DecoderError
from surface_beta.codes.channels import ChannelModel
from surface_beta.codes.pauli import PauliOperator, format_pauli, multiply
from surface_beta.codes.surface import LogicalClass, SurfaceCode, Syndrome, logical_class, syndrome
from .ml import decode_ml
from .mwpm import decode_mwpm


class DecoderName(str, Enum):
    MWPM = "mwpm"
    ML = "ml"

    @classmethod
    def parse(cls, value: "str | DecoderName") -> "DecoderName":
        try:
            return cls(str(getattr(value, "value", value)).lower())
        except ValueError as e:
            raise DecoderError(f"Unknown decoder {value!r}; expected one of {[d.value for d in cls]}") from e


@dataclass(frozen=True)
class DecodeOutcome:
    correction: PauliOperator
    residual_class: LogicalClass
    success: bool

    def as_dict(self) -> dict:
        return {
            "correction": format_pauli(self.correction),
            "residual_class": self.residual_class.value,
            "success": self.success,
        }


def decode(
    code: SurfaceCode,
    channel: Optional[ChannelModel],
    decoder: "str | DecoderName",
    s: Syndrome,
    spot_check: bool = False,
) -> PauliOperator:
    """Dispatch a syndrome to the named decoder."""
    name = DecoderName.parse(decoder)
    if name is DecoderName.MWPM:
        return decode_mwpm(code, s)
    if channel is None:
        raise DecoderError("The ML decoder needs a channel model")
    return decode_ml(code, channel, s, spot_check=spot_check)


def decode_and_judge(
    code: SurfaceCode,
    channel: Optional[ChannelModel],
    decoder: "str | DecoderName",
    error: PauliOperator,
    spot_check: bool = False,
) -> DecodeOutcome:
    s = syndrome(code, error)
    correction = decode(code, channel, decoder, s, spot_check=spot_check)
    cls = logical_class(code, multiply(error, correction))
    return DecodeOutcome(correction, cls, cls is LogicalClass.I)
