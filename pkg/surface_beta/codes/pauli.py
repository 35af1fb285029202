"""Phaseless n-qubit Pauli operators in binary symplectic form.

Qubits are numbered from 1 in every user-facing call and in the text form
(``X2 Y3``); internally qubit ``i`` is bit ``i - 1`` of two Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from surface_beta.core.exceptions import PauliError

LETTERS = ("X", "Y", "Z")


def _popcount(v: int) -> int:
    return v.bit_count()


@dataclass(frozen=True)
class PauliOperator:
    n: int
    x_bits: int
    z_bits: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise PauliError(f"Qubit count must be non-negative, got {self.n}")
        mask = (1 << self.n) - 1
        if (self.x_bits | self.z_bits) & ~mask:
            raise PauliError(f"Bit vectors exceed {self.n} qubits")

    def letter(self, qubit: int) -> str:
        """Letter acting on 1-based ``qubit`` ('I', 'X', 'Y' or 'Z')."""
        b = 1 << (qubit - 1)
        x, z = bool(self.x_bits & b), bool(self.z_bits & b)
        if x and z:
            return "Y"
        if x:
            return "X"
        if z:
            return "Z"
        return "I"

    def support(self) -> list[int]:
        v = self.x_bits | self.z_bits
        return [i + 1 for i in range(self.n) if (v >> i) & 1]

    def counts(self) -> tuple[int, int, int]:
        """Return (n_x, n_y, n_z): qubits carrying X, Y and Z."""
        y = self.x_bits & self.z_bits
        n_y = _popcount(y)
        return _popcount(self.x_bits) - n_y, n_y, _popcount(self.z_bits) - n_y

    def to_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        x = np.array([(self.x_bits >> i) & 1 for i in range(self.n)], dtype=np.uint8)
        z = np.array([(self.z_bits >> i) & 1 for i in range(self.n)], dtype=np.uint8)
        return x, z

    @classmethod
    def from_arrays(cls, x: Iterable[int], z: Iterable[int]) -> "PauliOperator":
        xs, zs = list(x), list(z)
        if len(xs) != len(zs):
            raise PauliError("x and z vectors differ in length")
        xv = sum(1 << i for i, b in enumerate(xs) if b)
        zv = sum(1 << i for i, b in enumerate(zs) if b)
        return cls(len(xs), xv, zv)

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        return multiply(self, other)

    def __str__(self) -> str:
        return format_pauli(self)


def identity(n: int) -> PauliOperator:
    return PauliOperator(n, 0, 0)


def pauli_from_terms(n: int, terms: Iterable[tuple[int, str]]) -> PauliOperator:
    """Build an operator from (1-based qubit, letter) pairs, identity elsewhere."""
    x = z = 0
    seen: set[int] = set()
    for qubit, letter in terms:
        if not 1 <= qubit <= n:
            raise PauliError(f"Qubit index {qubit} out of range [1, {n}]")
        if qubit in seen:
            raise PauliError(f"Qubit index {qubit} repeated")
        seen.add(qubit)
        L = letter.upper()
        if L not in LETTERS:
            raise PauliError(f"Unknown Pauli letter {letter!r}")
        b = 1 << (qubit - 1)
        if L in ("X", "Y"):
            x |= b
        if L in ("Z", "Y"):
            z |= b
    return PauliOperator(n, x, z)


def _check_dims(a: PauliOperator, b: PauliOperator) -> None:
    if a.n != b.n:
        raise PauliError(f"Dimension mismatch: {a.n} vs {b.n} qubits")


def commutes(a: PauliOperator, b: PauliOperator) -> bool:
    _check_dims(a, b)
    return _popcount((a.x_bits & b.z_bits) ^ (a.z_bits & b.x_bits)) % 2 == 0


def multiply(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    _check_dims(a, b)
    return PauliOperator(a.n, a.x_bits ^ b.x_bits, a.z_bits ^ b.z_bits)


def weight(p: PauliOperator) -> int:
    return _popcount(p.x_bits | p.z_bits)


def hadamard(p: PauliOperator, qubits: Iterable[int]) -> PauliOperator:
    """Exchange X and Z on the given 1-based qubits (Y is left as Y)."""
    mask = 0
    for q in qubits:
        if not 1 <= q <= p.n:
            raise PauliError(f"Qubit index {q} out of range [1, {p.n}]")
        mask |= 1 << (q - 1)
    swap = (p.x_bits ^ p.z_bits) & mask
    return PauliOperator(p.n, p.x_bits ^ swap, p.z_bits ^ swap)


def format_pauli(p: PauliOperator) -> str:
    """Text form: 'X2 Y3'; the identity is 'I'."""
    tokens = [f"{p.letter(q)}{q}" for q in p.support()]
    return " ".join(tokens) if tokens else "I"


def parse_pauli(text: str, n: int) -> PauliOperator:
    """Parse the text form produced by :func:`format_pauli`."""
    tokens = (text or "").split()
    if not tokens:
        raise PauliError("Empty Pauli string")
    if tokens == ["I"]:
        return identity(n)
    terms = []
    for tok in tokens:
        letter, num = tok[:1].upper(), tok[1:]
        if letter not in LETTERS or not num.isdigit():
            raise PauliError(f"Invalid Pauli token {tok!r}")
        terms.append((int(num), letter))
    return pauli_from_terms(n, terms)
