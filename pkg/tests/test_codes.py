import itertools

import pytest

from surface_beta.core.exceptions import CodeConstructionError, SyndromeError
from surface_beta.codes.pauli import commutes, format_pauli, identity, multiply, parse_pauli
from surface_beta.codes.surface import (
    LogicalClass,
    Variant,
    build_code,
    build_surface_code,
    build_xzzx_code,
    logical_class,
    relabel,
    render_lattice,
    syndrome,
)

D3_GENERATORS = [
    "X1 X2 X4",
    "X2 X3 X5",
    "Z1 Z4 Z6",
    "Z2 Z4 Z5 Z7",
    "Z3 Z5 Z8",
    "X4 X6 X7 X9",
    "X5 X7 X8 X10",
    "Z6 Z9 Z11",
    "Z7 Z9 Z10 Z12",
    "Z8 Z10 Z13",
    "X9 X11 X12",
    "X10 X12 X13",
]


def test_d3_generators():
    code = build_surface_code(3, 3)
    assert code.n == 13
    assert [format_pauli(g) for g in code.generators] == D3_GENERATORS
    assert format_pauli(code.logical_Z) == "Z1 Z2 Z3"
    assert format_pauli(code.logical_X) == "X1 X6 X11"
    assert code.label == "[[13,1,3]]"


@pytest.mark.parametrize("d_X,d_Z,n,label", [(3, 5, 23, "[[23,1,3/5]]"), (5, 5, 41, "[[41,1,5]]"), (3, 7, 33, "[[33,1,3/7]]")])
def test_qubit_counts(d_X, d_Z, n, label):
    code = build_surface_code(d_X, d_Z)
    assert code.n == n
    assert len(code.generators) == n - 1
    assert code.label == label
    assert weight_of(code.logical_Z) == d_Z
    assert weight_of(code.logical_X) == d_X


def weight_of(p):
    return len(p.support())


@pytest.mark.parametrize("xzzx", [False, True])
@pytest.mark.parametrize("d_X,d_Z", [(3, 3), (3, 5), (5, 5)])
def test_stabilizers_and_logicals_commute(d_X, d_Z, xzzx):
    code = build_code(d_X, d_Z, xzzx=xzzx)
    for a, b in itertools.combinations(code.generators, 2):
        assert commutes(a, b)
    for g in code.generators:
        assert commutes(g, code.logical_X)
        assert commutes(g, code.logical_Z)
    assert not commutes(code.logical_X, code.logical_Z)


@pytest.mark.parametrize("d_X,d_Z", [(2, 3), (3, 4), (1, 1)])
def test_invalid_distances(d_X, d_Z):
    with pytest.raises(CodeConstructionError):
        build_surface_code(d_X, d_Z)


def test_xzzx_code():
    code = build_xzzx_code(3, 3)
    assert code.variant is Variant.XZZX
    assert code.code_id == "3x3-xzzx"
    assert code.hadamard_qubits == (2, 4, 6, 8, 10, 12)
    assert format_pauli(code.generators[3]) == "X2 X4 Z5 Z7"
    for g in code.generators:
        if len(g.support()) == 4:
            n_x, n_y, n_z = g.counts()
            assert (n_x, n_y, n_z) == (2, 0, 2)
    back = relabel(code, code.hadamard_qubits, Variant.CSS)
    assert back.generators == build_surface_code(3, 3).generators
    assert back.hadamard_qubits == ()


def test_syndrome_of_worked_example():
    code = build_surface_code(3, 3)
    s = syndrome(code, parse_pauli("Z2 Z3", 13))
    assert str(s) == "100000000000"
    assert s.defects() == [0]
    assert syndrome(code, identity(13)).is_trivial()
    for g in code.generators:
        assert syndrome(code, g).is_trivial()
    with pytest.raises(SyndromeError):
        syndrome(code, identity(12))


def test_logical_class():
    code = build_surface_code(3, 3)
    stab = multiply(code.generators[0], code.generators[5])
    assert logical_class(code, stab) is LogicalClass.I
    assert logical_class(code, parse_pauli("Z1 Z2 Z3", 13)) is LogicalClass.Z
    assert logical_class(code, code.logical_X) is LogicalClass.X
    assert logical_class(code, code.logical(LogicalClass.Y)) is LogicalClass.Y
    with pytest.raises(SyndromeError):
        logical_class(code, parse_pauli("Z2", 13))


def test_render_lattice():
    text = render_lattice(build_surface_code(3, 3))
    lines = text.splitlines()
    assert len(lines) == 5
    assert lines[0].split() == ["1", "x", "2", "x", "3"]
    assert lines[1].split() == ["z", "4", "z", "5", "z"]
    assert "2*" in render_lattice(build_xzzx_code(3, 3))
