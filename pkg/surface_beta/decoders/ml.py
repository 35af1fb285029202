"""Exact maximum-likelihood coset decoder.

For a syndrome s a fixed representative E_s (product of boundary chains) is
multiplied by each logical class L, and the probability mass of the whole coset
E_s.L.S is summed over every stabilizer S. The class with the largest mass wins;
ties go to the first of (I, X, Y, Z).

The stabilizer group (2^(n-1) elements) is held as a low table of
``2**CHUNK_BITS`` elements and walked in chunks over the remaining generators.
"""

from __future__ import annotations

import logging
from typing import Iterator

import numpy as np

from surface_beta.core.exceptions import DecoderError, SyndromeError
from surface_beta.codes.channels import ChannelModel, pattern_probabilities
from surface_beta.codes.pauli import PauliOperator, identity, multiply
from surface_beta.codes.surface import CLASS_ORDER, LogicalClass, SurfaceCode, Syndrome
from .mwpm import pure_error

logger = logging.getLogger(__name__)

CHUNK_BITS = 12
FULL_ENUMERATION_MAX_N = 13
SPOT_CHECK_MAX_N = 23


def _symplectic(p: PauliOperator) -> np.ndarray:
    x, z = p.to_arrays()
    return np.concatenate([x, z]).astype(bool)


_TABLES: dict[tuple, tuple[np.ndarray, np.ndarray]] = {}


def _group_tables(code: SurfaceCode) -> tuple[np.ndarray, np.ndarray]:
    """(low table, high generators): every group element is low[i] ^ (XOR of a subset of high)."""
    if code.key in _TABLES:
        return _TABLES[code.key]
    gens = np.array([_symplectic(g) for g in code.generators], dtype=bool)
    b = min(CHUNK_BITS, len(gens))
    low = np.zeros((1, 2 * code.n), dtype=bool)
    for g in gens[:b]:
        low = np.vstack([low, low ^ g])
    logger.debug("Stabilizer table for %s: %d x %d low, %d high generators", code.label, *low.shape, len(gens) - b)
    _TABLES[code.key] = (low, gens[b:])
    return _TABLES[code.key]


def stabilizer_chunks(code: SurfaceCode) -> Iterator[np.ndarray]:
    """Yield the stabilizer group as boolean (rows, 2n) blocks; Gray-code walk over the high generators."""
    low, high = _group_tables(code)
    offset = np.zeros(2 * code.n, dtype=bool)
    yield low
    for step in range(1, 1 << len(high)):
        flip = (step & -step).bit_length() - 1
        offset = offset ^ high[flip]
        yield low ^ offset


def stabilizer_group(code: SurfaceCode) -> np.ndarray:
    return np.vstack(list(stabilizer_chunks(code)))


def coset_weight(code: SurfaceCode, channel: ChannelModel, op: PauliOperator) -> float:
    """Total probability of the coset op.S."""
    v = _symplectic(op)
    n = code.n
    total = 0.0
    for block in stabilizer_chunks(code):
        coset = block ^ v
        total += float(pattern_probabilities(channel, coset[:, :n], coset[:, n:]).sum())
    return total


def coset_weights(code: SurfaceCode, channel: ChannelModel, representative: PauliOperator) -> tuple[float, float, float, float]:
    """(W(I), W(X), W(Y), W(Z)) for the cosets representative.L.S."""
    return tuple(coset_weight(code, channel, multiply(representative, code.logical(L))) for L in CLASS_ORDER)


def syndrome_representative(code: SurfaceCode, s: Syndrome) -> PauliOperator:
    """A fixed operator with syndrome ``s``."""
    if len(s.bits) != len(code.generators):
        raise SyndromeError(f"Syndrome has {len(s.bits)} bits, code has {len(code.generators)} generators")
    rep = identity(code.n)
    for i in s.defects():
        rep = multiply(rep, pure_error(code, i))
    return rep


def _check_size(code: SurfaceCode, spot_check: bool) -> None:
    limit = SPOT_CHECK_MAX_N if spot_check else FULL_ENUMERATION_MAX_N
    if code.n > limit:
        mode = "spot-check" if spot_check else "full enumeration"
        raise DecoderError(f"ML decoding of {code.label} exceeds the {mode} limit n <= {limit}")


class MLDecoder:
    """Per-code ML decoder with a (channel, syndrome) result cache."""

    _instances: dict[tuple, "MLDecoder"] = {}

    def __init__(self, code: SurfaceCode):
        self.code = code
        self._cache: dict[tuple[ChannelModel, tuple[int, ...]], tuple[PauliOperator, LogicalClass]] = {}

    @classmethod
    def for_code(cls, code: SurfaceCode) -> "MLDecoder":
        dec = cls._instances.get(code.key)
        if dec is None:
            dec = cls(code)
            cls._instances[code.key] = dec
        return dec

    def best_class(self, channel: ChannelModel, s: Syndrome) -> tuple[PauliOperator, LogicalClass]:
        key = (channel, s.bits)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        rep = syndrome_representative(self.code, s)
        weights = coset_weights(self.code, channel, rep)
        # first maximum in (I, X, Y, Z) order
        k = int(np.argmax(weights))
        out = (multiply(rep, self.code.logical(CLASS_ORDER[k])), CLASS_ORDER[k])
        if len(self._cache) > 100_000:
            self._cache.clear()
        self._cache[key] = out
        return out


def decode_ml(code: SurfaceCode, channel: ChannelModel, s: Syndrome, spot_check: bool = False) -> PauliOperator:
    """Degenerate maximum-likelihood correction for syndrome ``s``.

    Full enumeration is allowed up to n = 13; ``spot_check`` lifts the limit to
    n = 23 for single syndromes.
    """
    _check_size(code, spot_check)
    return MLDecoder.for_code(code).best_class(channel, s)[0]
