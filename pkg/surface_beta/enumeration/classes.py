"""Exhaustive decoding of every error pattern in a class.

An error class fixes how many X, Z and Y letters a pattern carries. Patterns are
generated lexicographically over qubit combinations; within a combination the X
positions are chosen first, then Z, and the rest carry Y.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterator, Optional

from surface_beta.core.exceptions import BudgetExceededError
from surface_beta.core.utils import EnumerationConfig
from surface_beta.codes.channels import ChannelModel
from surface_beta.codes.pauli import PauliOperator, pauli_from_terms
from surface_beta.codes.surface import SurfaceCode, Variant, build_code
from surface_beta.decoders.judge import DecoderName, decode_and_judge

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class ErrorClass:
    n_x: int
    n_z: int
    n_y: int

    @property
    def j(self) -> int:
        return self.n_x + self.n_z + self.n_y

    @property
    def label(self) -> str:
        return "X" * self.n_x + "Z" * self.n_z + "Y" * self.n_y

    @classmethod
    def from_label(cls, label: str) -> "ErrorClass":
        t = label.upper()
        return cls(t.count("X"), t.count("Z"), t.count("Y"))

    def __str__(self) -> str:
        return self.label


def classes_of_weight(j: int) -> list[ErrorClass]:
    """All C(j+2, 2) classes of weight ``j`` in tabulation order (XX, XZ, XY, ZZ, ZY, YY for j = 2)."""
    return [ErrorClass.from_label("".join(c)) for c in itertools.combinations_with_replacement("XZY", j)]


def class_size(n: int, cls: ErrorClass) -> int:
    """c = C(n, n_x) C(n - n_x, n_z) C(n - n_x - n_z, n_y)."""
    return math.comb(n, cls.n_x) * math.comb(n - cls.n_x, cls.n_z) * math.comb(n - cls.n_x - cls.n_z, cls.n_y)


def class_patterns(n: int, cls: ErrorClass, start: int = 0, stop: Optional[int] = None) -> Iterator[PauliOperator]:
    """Patterns of ``cls`` whose qubit combination has index in [start, stop)."""
    combos = itertools.islice(itertools.combinations(range(1, n + 1), cls.j), start, stop)
    for qs in combos:
        for xs in itertools.combinations(qs, cls.n_x):
            rest = [q for q in qs if q not in xs]
            for zs in itertools.combinations(rest, cls.n_z):
                ys = [q for q in rest if q not in zs]
                terms = [(q, "X") for q in xs] + [(q, "Z") for q in zs] + [(q, "Y") for q in ys]
                yield pauli_from_terms(n, terms)


@dataclass(frozen=True)
class ClassResult:
    error_class: ErrorClass
    total: int
    failures: int

    @property
    def fraction(self) -> float:
        return self.failures / self.total if self.total else 0.0

    def as_dict(self) -> dict:
        return {
            "class": self.error_class.label,
            "n_x": self.error_class.n_x,
            "n_z": self.error_class.n_z,
            "n_y": self.error_class.n_y,
            "combinations": self.total,
            "failures": self.failures,
            "fraction": self.fraction,
        }


def _count_range(
    code_key: tuple[int, int, str],
    cls: ErrorClass,
    decoder: str,
    channel: Optional[ChannelModel],
    start: int,
    stop: int,
) -> tuple[int, int]:
    d_X, d_Z, variant = code_key
    code = build_code(d_X, d_Z, xzzx=variant == Variant.XZZX.value)
    total = failures = 0
    for error in class_patterns(code.n, cls, start, stop):
        total += 1
        if not decode_and_judge(code, channel, decoder, error).success:
            failures += 1
    return total, failures


def _ranges(count: int, parts: int) -> list[tuple[int, int]]:
    step = max(1, math.ceil(count / parts))
    return [(a, min(a + step, count)) for a in range(0, count, step)]


def check_budget(decodes: int, config: EnumerationConfig, what: str) -> None:
    if decodes > config.budget and not config.allow_large:
        raise BudgetExceededError(
            f"{what} needs {decodes:,} decodes, above the budget of {config.budget:,} (use allow_large to override)"
        )


def enumerate_class(
    code: SurfaceCode,
    decoder: "str | DecoderName",
    cls: ErrorClass,
    channel: Optional[ChannelModel] = None,
    config: Optional[EnumerationConfig] = None,
) -> ClassResult:
    """Decode every pattern of ``cls`` and count logical failures."""
    config = config or EnumerationConfig()
    name = DecoderName.parse(decoder).value
    size = class_size(code.n, cls)
    check_budget(size, config, f"Class {cls.label} on {code.label}")

    combos = math.comb(code.n, cls.j)
    ranges = _ranges(combos, config.workers * 4) if config.workers > 1 else [(0, combos)]
    jobs = [(code.key, cls, name, channel, a, b) for a, b in ranges]
    if config.workers > 1 and len(jobs) > 1:
        with Pool(processes=config.workers) as pool:
            parts = pool.starmap(_count_range, jobs)
    else:
        parts = [_count_range(*job) for job in jobs]

    total = sum(t for t, _ in parts)
    failures = sum(f for _, f in parts)
    logger.info("%s %s %s: %d/%d non-correctable", code.label, name, cls.label, failures, total)
    return ClassResult(cls, total, failures)


def beta_z(
    code: SurfaceCode,
    decoder: "str | DecoderName",
    j: int,
    channel: Optional[ChannelModel] = None,
    config: Optional[EnumerationConfig] = None,
) -> float:
    """1 - beta_j^(Z): the non-correctable fraction of the pure-Z class of weight ``j``."""
    return enumerate_class(code, decoder, ErrorClass(0, j, 0), channel, config).fraction
