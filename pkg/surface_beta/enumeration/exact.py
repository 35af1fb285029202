"""Exact logical error rates by summing over every syndrome.

All 4^n error patterns split into 2^(n-1) syndromes times four logical cosets,
so a syndrome-deterministic decoder succeeds with probability
sum_s W(C(s).S), where C(s) is its correction. Maximum likelihood takes the
heaviest coset per syndrome instead.
"""

from __future__ import annotations

import logging
import math
from typing import Optional

from surface_beta.core.exceptions import BudgetExceededError
from surface_beta.codes.channels import ChannelModel
from surface_beta.codes.surface import SurfaceCode, Syndrome
from surface_beta.decoders.judge import DecoderName, decode
from surface_beta.decoders.ml import FULL_ENUMERATION_MAX_N, coset_weight, coset_weights, syndrome_representative

logger = logging.getLogger(__name__)


def all_syndromes(code: SurfaceCode):
    m = len(code.generators)
    for v in range(1 << m):
        yield Syndrome(tuple((v >> i) & 1 for i in range(m)))


def exact_logical_error_rate(
    code: SurfaceCode,
    channel: ChannelModel,
    decoder: "str | DecoderName",
    max_n: Optional[int] = None,
) -> float:
    limit = max_n or FULL_ENUMERATION_MAX_N
    if code.n > limit:
        raise BudgetExceededError(f"Exact rate of {code.label} needs 2^{2 * (code.n - 1)} coset terms (limit n <= {limit})")
    name = DecoderName.parse(decoder)
    success = []
    for s in all_syndromes(code):
        if name is DecoderName.ML:
            success.append(max(coset_weights(code, channel, syndrome_representative(code, s))))
        else:
            success.append(coset_weight(code, channel, decode(code, channel, name, s)))
    rate = max(0.0, 1.0 - math.fsum(success))
    logger.info("Exact %s rate on %s at rho=%.4g, A=%s: %.6g", name.value, code.label, channel.rho, channel.A, rate)
    return rate
