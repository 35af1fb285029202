"""Code parameters, beta vectors and the published reference values.

The published class fractions were rounded to two digits and several of them
cannot come from one deterministic decoder that corrects the X and Z halves
separately: such a decoder gives XY == XX, ZY == ZZ, XXY == XXX and
ZZY == ZZZ exactly. ``table1_tolerance`` widens the comparison for those cells.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from surface_beta.core.exceptions import ConfigError
from surface_beta.codes.surface import SurfaceCode, expected_qubit_count


@dataclass(frozen=True)
class CodeParams:
    """Correction radii of a (d_X, d_Z) planar code.

    e_g = t_X generic errors are always corrected, plus e_Z = t_Z - t_X further
    Z errors.
    """

    n: int
    t: int
    e_g: int
    e_Z: int
    t_Z: int

    @classmethod
    def from_distances(cls, d_X: int, d_Z: int, n: int | None = None) -> "CodeParams":
        t_X = (d_X - 1) // 2
        t_Z = (d_Z - 1) // 2
        return cls(
            n=n if n is not None else expected_qubit_count(d_X, d_Z),
            t=(min(d_X, d_Z) - 1) // 2,
            e_g=t_X,
            e_Z=max(t_Z - t_X, 0),
            t_Z=t_Z,
        )

    @classmethod
    def from_code(cls, code: SurfaceCode) -> "CodeParams":
        return cls.from_distances(code.d_X, code.d_Z, code.n)


@dataclass(frozen=True)
class BetaVector:
    """beta_start, beta_start+1, ...; 1 below ``start`` and 0 past the last value."""

    start: int
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.start < 1:
            raise ConfigError(f"BetaVector must start at weight >= 1, got {self.start}")
        for v in self.values:
            if not 0.0 <= v <= 1.0:
                raise ConfigError(f"beta values must lie in [0, 1], got {v}")

    @classmethod
    def of(cls, start: int, values: Iterable[float]) -> "BetaVector":
        return cls(start, tuple(float(v) for v in values))

    def __call__(self, j: int) -> float:
        if j < self.start:
            return 1.0
        k = j - self.start
        return self.values[k] if k < len(self.values) else 0.0

    @property
    def next_beta(self) -> float:
        return self(self.start)


# beta sets quoted alongside the published curves: [[13,1,3]] depolarizing
# (beta_2..beta_6) and [[23,1,3/5]] phase-flip (beta^Z_3..beta^Z_7).
PUBLISHED_BETAS: dict[str, BetaVector] = {
    "3x3": BetaVector(2, (0.76, 0.48, 0.48, 0.46, 0.5)),
    "3x5": BetaVector(3, (0.92, 0.76, 0.59, 0.52, 0.49)),
}

# Published non-correctable fractions under MWPM, rounded to two digits
# (three for [[41,1,5]]): code_id -> j -> column -> value.
PUBLISHED_TABLE1: dict[str, dict[int, dict[str, float]]] = {
    "3x3": {
        2: {"1-beta_j": 0.24, "1-beta_j^Z": 0.27, "XX": 0.27, "XZ": 0.0, "XY": 0.28, "ZZ": 0.27, "ZY": 0.26, "YY": 0.51},
        3: {
            "1-beta_j": 0.52, "1-beta_j^Z": 0.53, "XXX": 0.52, "XXZ": 0.27, "XXY": 0.53, "XZZ": 0.27,
            "XZY": 0.45, "XYY": 0.67, "ZZZ": 0.53, "ZZY": 0.53, "ZYY": 0.68, "YYY": 0.78,
        },
    },
    "3x5": {
        2: {"1-beta_j": 0.07, "1-beta_j^Z": 0.0, "XX": 0.16, "XZ": 0.0, "XY": 0.16, "ZZ": 0.0, "ZY": 0.0, "YY": 0.15},
        3: {
            "1-beta_j": 0.20, "1-beta_j^Z": 0.08, "XXX": 0.39, "XXZ": 0.15, "XXY": 0.38, "XZZ": 0.0,
            "XZY": 0.15, "XYY": 0.39, "ZZZ": 0.08, "ZZY": 0.08, "ZYY": 0.22, "YYY": 0.45,
        },
    },
    "5x5": {
        3: {
            "1-beta_j": 0.014, "1-beta_j^Z": 0.024, "XXX": 0.023, "XXZ": 0.0, "XXY": 0.023, "XZZ": 0.0,
            "XZY": 0.0, "XYY": 0.023, "ZZZ": 0.024, "ZZY": 0.024, "ZYY": 0.024, "YYY": 0.046,
        },
    },
}


TABLE1_TOL = 0.005
TABLE1_WIDE_TOL = 0.02

# cells off by more than rounding from every independent-halves decoder
TABLE1_WIDE_CELLS: dict[tuple[str, int], frozenset[str]] = {
    ("3x3", 2): frozenset({"XY", "ZY"}),
    ("3x3", 3): frozenset({"1-beta_j^Z", "XXX", "XXY", "XYY", "ZZZ", "ZZY", "ZYY", "YYY"}),
    ("3x5", 2): frozenset({"XX", "XY"}),
    ("3x5", 3): frozenset({"1-beta_j^Z", "XXX", "XXY", "ZZZ", "ZZY"}),
}

# rows whose printed 1-beta_j is the plain mean of the class columns, not the
# mean weighted by class size
TABLE1_UNWEIGHTED_ROWS: frozenset[tuple[str, int]] = frozenset({("3x3", 3)})


def table1_tolerance(code_id: str, j: int, column: str) -> float:
    """Absolute tolerance for comparing an enumerated cell with its published value."""
    if column in TABLE1_WIDE_CELLS.get((code_id, j), ()):
        return TABLE1_WIDE_TOL
    return TABLE1_TOL


def published_betas(code_id: str) -> BetaVector:
    try:
        return PUBLISHED_BETAS[code_id]
    except KeyError as e:
        raise ConfigError(f"No published beta set for code {code_id!r}; known: {sorted(PUBLISHED_BETAS)}") from e


def as_beta_vector(betas: "BetaVector | Sequence[float]", start: int) -> BetaVector:
    if isinstance(betas, BetaVector):
        return betas
    return BetaVector.of(start, betas)
