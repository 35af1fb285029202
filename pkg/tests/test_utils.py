import math

import pytest

from surface_beta.core.exceptions import ConfigError
from surface_beta.core.utils import (
    ENV_WORKERS,
    default_workers,
    parse_bias,
    parse_code_spec,
    parse_rho_grid,
)


def test_parse_code_spec():
    assert parse_code_spec("3,5") == (3, 5)
    assert parse_code_spec("5") == (5, 5)
    assert parse_code_spec("3x7") == (3, 7)
    with pytest.raises(ConfigError):
        parse_code_spec("a,b")
    with pytest.raises(ConfigError):
        parse_code_spec("3,5,7")


def test_parse_bias():
    assert parse_bias(None) == 1.0
    assert parse_bias("10") == 10.0
    assert math.isinf(parse_bias("INF"))
    with pytest.raises(ConfigError):
        parse_bias("big")


def test_parse_rho_grid():
    grid = parse_rho_grid("log:1e-3:0.1:3")
    assert grid == pytest.approx([1e-3, 1e-2, 1e-1])
    assert parse_rho_grid("lin:0:0.2:3") == pytest.approx([0.0, 0.1, 0.2])
    assert parse_rho_grid("0.01, 0.02") == [0.01, 0.02]
    for bad in ("", "log:0:0.1:3", "lin:0.2:0.1:3", "log:a:b:c", "0.1,x"):
        with pytest.raises(ConfigError):
            parse_rho_grid(bad)


def test_default_workers(monkeypatch):
    monkeypatch.delenv(ENV_WORKERS, raising=False)
    assert default_workers() == 1
    monkeypatch.setenv(ENV_WORKERS, "4")
    assert default_workers() == 4
    monkeypatch.setenv(ENV_WORKERS, "many")
    with pytest.raises(ConfigError):
        default_workers()

