import math

import pytest

from surface_beta.core.exceptions import BudgetExceededError
from surface_beta.core.utils import EnumerationConfig
from surface_beta.analysis.params import (
    PUBLISHED_TABLE1,
    TABLE1_TOL,
    TABLE1_UNWEIGHTED_ROWS,
    TABLE1_WIDE_TOL,
    table1_tolerance,
)
from surface_beta.codes.pauli import weight
from surface_beta.codes.surface import build_surface_code
from surface_beta.enumeration.classes import (
    ErrorClass,
    beta_z,
    class_patterns,
    class_size,
    classes_of_weight,
    enumerate_class,
)
from surface_beta.enumeration.table import BetaTable, beta_row, beta_table, table1_frame


def test_classes_of_weight():
    assert [c.label for c in classes_of_weight(2)] == ["XX", "XZ", "XY", "ZZ", "ZY", "YY"]
    labels3 = [c.label for c in classes_of_weight(3)]
    assert labels3 == list(PUBLISHED_TABLE1["3x3"][3])[2:]
    assert ErrorClass.from_label("ZYX") == ErrorClass(1, 1, 1)


@pytest.mark.parametrize("n,j", [(13, 2), (13, 3), (23, 2)])
def test_class_sizes_cover_every_pattern(n, j):
    assert sum(class_size(n, c) for c in classes_of_weight(j)) == math.comb(n, j) * 3**j


def test_class_patterns():
    cls = ErrorClass.from_label("XZY")
    patterns = list(class_patterns(5, cls))
    assert len(patterns) == class_size(5, cls)
    assert len(set(patterns)) == len(patterns)
    assert all(p.counts() == (1, 1, 1) and weight(p) == 3 for p in patterns)
    head = list(class_patterns(5, cls, 0, 1))
    assert len(head) == 6


def published_class_mean(code_id, j, n):
    expected = PUBLISHED_TABLE1[code_id][j]
    sizes = {c.label: class_size(n, c) for c in classes_of_weight(j)}
    return math.fsum(expected[k] * s for k, s in sizes.items()) / sum(sizes.values())


def check_row(code_id, row, n):
    expected = PUBLISHED_TABLE1[code_id][row.j]
    for c in row.classes:
        label = c.error_class.label
        assert c.fraction == pytest.approx(expected[label], abs=table1_tolerance(code_id, row.j, label)), label
    assert row.one_minus_beta_z == pytest.approx(
        expected["1-beta_j^Z"], abs=table1_tolerance(code_id, row.j, "1-beta_j^Z")
    )

    weighted = math.fsum(c.fraction * c.total for c in row.classes) / row.total
    assert row.one_minus_beta == pytest.approx(weighted, rel=1e-12)
    assert row.one_minus_beta == pytest.approx(published_class_mean(code_id, row.j, n), abs=2 * TABLE1_TOL)
    if (code_id, row.j) in TABLE1_UNWEIGHTED_ROWS:
        plain = math.fsum(c.fraction for c in row.classes) / len(row.classes)
        assert plain == pytest.approx(expected["1-beta_j"], abs=TABLE1_TOL)
    else:
        assert row.one_minus_beta == pytest.approx(expected["1-beta_j"], abs=TABLE1_TOL)


def check_independent_halves(row, pairs):
    # a single X or Z is always corrected, so the extra Pauli leaves the class unchanged
    for mixed, plain in pairs:
        assert row.by_label(mixed).fraction == plain.fraction, mixed


def test_table_13_weight_2():
    row = beta_row(build_surface_code(3, 3), "mwpm", 2)
    check_row("3x3", row, 13)
    check_independent_halves(row, [("XY", row.by_label("XX")), ("ZY", row.by_label("ZZ"))])
    assert row.by_label("XZ").failures == 0
    assert row.total == 78 * 9
    assert row.one_minus_beta == pytest.approx(0.2365, abs=5e-4)


def test_table_13_weight_3():
    code = build_surface_code(3, 3)
    row = beta_row(code, "mwpm", 3)
    check_row("3x3", row, 13)
    two = beta_row(code, "mwpm", 2)
    check_independent_halves(
        row,
        [
            ("XXY", row.by_label("XXX")),
            ("ZZY", row.by_label("ZZZ")),
            ("XXZ", two.by_label("XX")),
            ("XZZ", two.by_label("ZZ")),
        ],
    )
    assert row.total == math.comb(13, 3) * 27
    assert row.beta == pytest.approx(0.5057, abs=5e-4)


def test_published_mean_disagrees_with_its_classes():
    # the printed 3x3 weight-3 aggregate is the unweighted class average
    assert published_class_mean("3x3", 3, 13) == pytest.approx(0.4956, abs=1e-4)
    assert PUBLISHED_TABLE1["3x3"][3]["1-beta_j"] == 0.52
    assert published_class_mean("3x3", 2, 13) == pytest.approx(PUBLISHED_TABLE1["3x3"][2]["1-beta_j"], abs=TABLE1_TOL)
    assert table1_tolerance("3x3", 2, "XY") == TABLE1_WIDE_TOL
    assert table1_tolerance("3x3", 2, "XX") == TABLE1_TOL
    assert table1_tolerance("5x5", 3, "ZZZ") == TABLE1_TOL


def test_table_23_weight_2():
    code = build_surface_code(3, 5)
    row = beta_row(code, "mwpm", 2)
    check_row("3x5", row, 23)
    check_independent_halves(row, [("XY", row.by_label("XX"))])
    assert beta_z(code, "mwpm", 2) == 0


@pytest.mark.slow
def test_table_23_weight_3():
    row = beta_row(build_surface_code(3, 5), "mwpm", 3)
    check_row("3x5", row, 23)
    check_independent_halves(row, [("XXY", row.by_label("XXX")), ("ZZY", row.by_label("ZZZ"))])


@pytest.mark.slow
def test_table_41_weight_3():
    check_row("5x5", beta_row(build_surface_code(5, 5), "mwpm", 3), 41)


def test_weights_up_to_t_are_always_corrected():
    assert beta_row(build_surface_code(3, 3), "mwpm", 1).one_minus_beta == 0
    assert beta_z(build_surface_code(3, 3), "mwpm", 1) == 0


def test_budget_guard():
    code = build_surface_code(5, 5)
    with pytest.raises(BudgetExceededError):
        beta_row(code, "mwpm", 4)
    small = EnumerationConfig(budget=50, workers=1)
    with pytest.raises(BudgetExceededError):
        enumerate_class(build_surface_code(3, 3), "mwpm", ErrorClass(0, 2, 0), config=small)
    big = EnumerationConfig(budget=50, workers=1, allow_large=True)
    assert enumerate_class(build_surface_code(3, 3), "mwpm", ErrorClass(0, 2, 0), config=big).total == 78


def test_workers_do_not_change_counts():
    code = build_surface_code(3, 3)
    cls = ErrorClass.from_label("YY")
    serial = enumerate_class(code, "mwpm", cls, config=EnumerationConfig(workers=1))
    parallel = enumerate_class(code, "mwpm", cls, config=EnumerationConfig(workers=2))
    assert serial == parallel


def test_beta_table_persistence_and_layout():
    table = beta_table(build_surface_code(3, 3), "mwpm", [3, 2])
    assert table.weights == [2, 3]
    assert table.betas(2) == pytest.approx([table.row(2).beta, table.row(3).beta])
    assert table.betas(2) == pytest.approx([0.7635, 0.5057], abs=5e-4)

    restored = BetaTable.from_json(table.to_json())
    assert restored.rows == table.rows
    assert restored.code_id == "3x3"

    frame = table1_frame([table], digits=2)
    assert list(frame.columns[:4]) == ["code", "j", "1-beta_j", "1-beta_j^Z"]
    assert frame.loc[0, "XZ"] == 0
    assert len(table.to_frame()) == 6 + 10
