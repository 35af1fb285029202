"""Planar surface codes on the unrotated lattice, plus their XZZX twist.

Lattice convention (the drawing of the [[13,1,3]] code):

- cells (r, c) with 0 <= r < 2*d_X - 1 and 0 <= c < 2*d_Z - 1;
- data qubits sit where r + c is even, ancillas where r + c is odd;
- ancillas on even rows are X sites, on odd rows Z plaquettes;
- both are numbered row-major, which reproduces G1..G12 of the d=3 code.

Rough boundaries are left and right (3-body Z plaquettes), smooth boundaries
top and bottom (3-body X sites). Z_L is the top row (d_Z qubits), X_L the
left column (d_X qubits).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from surface_beta.core.exceptions import CodeConstructionError, SyndromeError
from .pauli import (
    PauliOperator,
    commutes,
    format_pauli,
    hadamard,
    identity,
    multiply,
    pauli_from_terms,
)


class Variant(str, Enum):
    CSS = "CSS"
    XZZX = "XZZX"


class LogicalClass(str, Enum):
    I = "I"
    X = "X"
    Y = "Y"
    Z = "Z"


CLASS_ORDER = (LogicalClass.I, LogicalClass.X, LogicalClass.Y, LogicalClass.Z)


@dataclass(frozen=True)
class Check:
    """One ancilla: lattice position, CSS type ('X' site / 'Z' plaquette), 1-based qubits."""

    row: int
    col: int
    kind: str
    qubits: tuple[int, ...]


@dataclass(frozen=True)
class Syndrome:
    bits: tuple[int, ...]

    @classmethod
    def from_string(cls, text: str) -> "Syndrome":
        t = "".join(ch for ch in text if ch in "01")
        return cls(tuple(int(ch) for ch in t))

    def defects(self) -> list[int]:
        """0-based indices of flipped generators."""
        return [i for i, b in enumerate(self.bits) if b]

    def is_trivial(self) -> bool:
        return not any(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


@dataclass(frozen=True)
class SurfaceCode:
    d_X: int
    d_Z: int
    variant: Variant
    generators: tuple[PauliOperator, ...]
    logical_X: PauliOperator
    logical_Z: PauliOperator
    coords: tuple[tuple[int, int], ...]
    checks: tuple[Check, ...]
    hadamard_qubits: tuple[int, ...] = ()

    @property
    def n(self) -> int:
        return self.logical_X.n

    @property
    def k(self) -> int:
        return 1

    @property
    def key(self) -> tuple[int, int, str]:
        return self.d_X, self.d_Z, self.variant.value

    @property
    def label(self) -> str:
        d = str(self.d_X) if self.d_X == self.d_Z else f"{self.d_X}/{self.d_Z}"
        base = f"[[{self.n},{self.k},{d}]]"
        return base if self.variant is Variant.CSS else f"{base} XZZX"

    @property
    def code_id(self) -> str:
        suffix = "" if self.variant is Variant.CSS else "-xzzx"
        return f"{self.d_X}x{self.d_Z}{suffix}"

    def logical(self, cls: LogicalClass) -> PauliOperator:
        if cls is LogicalClass.I:
            return identity(self.n)
        if cls is LogicalClass.X:
            return self.logical_X
        if cls is LogicalClass.Z:
            return self.logical_Z
        return multiply(self.logical_X, self.logical_Z)

    def describe(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d_X": self.d_X,
            "d_Z": self.d_Z,
            "variant": self.variant.value,
            "label": self.label,
            "generators": [format_pauli(g) for g in self.generators],
            "logical_X": format_pauli(self.logical_X),
            "logical_Z": format_pauli(self.logical_Z),
            "hadamard_qubits": list(self.hadamard_qubits),
        }


def expected_qubit_count(d_X: int, d_Z: int) -> int:
    return d_X * d_Z + (d_X - 1) * (d_Z - 1)


def _validate(d_X: int, d_Z: int) -> None:
    for name, d in (("d_X", d_X), ("d_Z", d_Z)):
        if not isinstance(d, int) or d < 3 or d % 2 == 0:
            raise CodeConstructionError(f"{name} must be an odd integer >= 3, got {d!r}")


@functools.lru_cache(maxsize=None)
def build_surface_code(d_X: int, d_Z: int) -> SurfaceCode:
    """Build the CSS planar code with X-distance d_X (vertical) and Z-distance d_Z (horizontal)."""
    _validate(d_X, d_Z)
    rows, cols = 2 * d_X - 1, 2 * d_Z - 1

    index: dict[tuple[int, int], int] = {}
    coords: list[tuple[int, int]] = []
    for r in range(rows):
        for c in range(cols):
            if (r + c) % 2 == 0:
                coords.append((r, c))
                index[(r, c)] = len(coords)
    n = len(coords)

    checks: list[Check] = []
    generators: list[PauliOperator] = []
    for r in range(rows):
        for c in range(cols):
            if (r + c) % 2 == 0:
                continue
            kind = "X" if r % 2 == 0 else "Z"
            nbrs = sorted(
                index[p]
                for p in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1))
                if p in index
            )
            checks.append(Check(r, c, kind, tuple(nbrs)))
            generators.append(pauli_from_terms(n, [(q, kind) for q in nbrs]))

    logical_Z = pauli_from_terms(n, [(index[(0, c)], "Z") for c in range(0, cols, 2)])
    logical_X = pauli_from_terms(n, [(index[(r, 0)], "X") for r in range(0, rows, 2)])

    return SurfaceCode(
        d_X=d_X,
        d_Z=d_Z,
        variant=Variant.CSS,
        generators=tuple(generators),
        logical_X=logical_X,
        logical_Z=logical_Z,
        coords=tuple(coords),
        checks=tuple(checks),
    )


def xzzx_hadamard_qubits(code: SurfaceCode) -> tuple[int, ...]:
    """Qubits at (r, c) with (r + c)/2 odd: every 4-body check then reads X-Z-Z-X clockwise."""
    return tuple(i + 1 for i, (r, c) in enumerate(code.coords) if ((r + c) // 2) % 2 == 1)


def relabel(code: SurfaceCode, qubits: Iterable[int], variant: Variant) -> SurfaceCode:
    """Apply X<->Z on ``qubits`` to every generator and logical operator."""
    qs = tuple(sorted(set(qubits)))
    return SurfaceCode(
        d_X=code.d_X,
        d_Z=code.d_Z,
        variant=variant,
        generators=tuple(hadamard(g, qs) for g in code.generators),
        logical_X=hadamard(code.logical_X, qs),
        logical_Z=hadamard(code.logical_Z, qs),
        coords=code.coords,
        checks=code.checks,
        hadamard_qubits=tuple(sorted(set(code.hadamard_qubits) ^ set(qs))),
    )


@functools.lru_cache(maxsize=None)
def build_xzzx_code(d_X: int, d_Z: int) -> SurfaceCode:
    base = build_surface_code(d_X, d_Z)
    return relabel(base, xzzx_hadamard_qubits(base), Variant.XZZX)


def build_code(d_X: int, d_Z: int, xzzx: bool = False) -> SurfaceCode:
    return build_xzzx_code(d_X, d_Z) if xzzx else build_surface_code(d_X, d_Z)


def syndrome(code: SurfaceCode, error: PauliOperator) -> Syndrome:
    if error.n != code.n:
        raise SyndromeError(f"Error acts on {error.n} qubits, code has {code.n}")
    return Syndrome(tuple(0 if commutes(error, g) else 1 for g in code.generators))


def logical_class(code: SurfaceCode, residual: PauliOperator) -> LogicalClass:
    if not syndrome(code, residual).is_trivial():
        raise SyndromeError("Residual operator has a nonzero syndrome")
    cz = commutes(residual, code.logical_Z)
    cx = commutes(residual, code.logical_X)
    if cz and cx:
        return LogicalClass.I
    if cx:
        return LogicalClass.X
    if cz:
        return LogicalClass.Z
    return LogicalClass.Y


def render_lattice(code: SurfaceCode) -> str:
    """ASCII drawing: data qubits by 1-based index, X sites 'x', Z plaquettes 'z'.

    For XZZX codes, Hadamard-rotated qubits are marked with '*'.
    """
    rows, cols = 2 * code.d_X - 1, 2 * code.d_Z - 1
    cells = [["" for _ in range(cols)] for _ in range(rows)]
    hq = set(code.hadamard_qubits)
    for i, (r, c) in enumerate(code.coords, start=1):
        cells[r][c] = f"{i}*" if i in hq else str(i)
    for ch in code.checks:
        cells[ch.row][ch.col] = ch.kind.lower()
    width = max(len(s) for row in cells for s in row) + 1
    return "\n".join("".join(s.rjust(width) for s in row) for row in cells)
