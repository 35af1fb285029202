"""Pauli algebra, surface-code construction and Pauli channels."""

from .channels import ChannelModel, channel_from_bias, pattern_probability, sample_error
from .pauli import PauliOperator, commutes, multiply, parse_pauli, pauli_from_terms, weight
from .surface import (
    LogicalClass,
    SurfaceCode,
    Syndrome,
    Variant,
    build_code,
    build_surface_code,
    build_xzzx_code,
    logical_class,
    syndrome,
)

__all__ = [
    "ChannelModel",
    "LogicalClass",
    "PauliOperator",
    "SurfaceCode",
    "Syndrome",
    "Variant",
    "build_code",
    "build_surface_code",
    "build_xzzx_code",
    "channel_from_bias",
    "commutes",
    "logical_class",
    "multiply",
    "parse_pauli",
    "pattern_probability",
    "pauli_from_terms",
    "sample_error",
    "syndrome",
    "weight",
]
