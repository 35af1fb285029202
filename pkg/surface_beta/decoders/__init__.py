from .judge import DecodeOutcome, DecoderName, decode, decode_and_judge
from .matching import DP_LIMIT, DefectGraph, Pairing, min_weight_perfect_matching
from .ml import coset_weights, decode_ml, stabilizer_group, syndrome_representative
from .mwpm import decode_mwpm, pure_error

__all__ = [
    "DP_LIMIT",
    "DecodeOutcome",
    "DecoderName",
    "DefectGraph",
    "Pairing",
    "coset_weights",
    "decode",
    "decode_and_judge",
    "decode_ml",
    "decode_mwpm",
    "min_weight_perfect_matching",
    "pure_error",
    "stabilizer_group",
    "syndrome_representative",
]
