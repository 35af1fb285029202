import math

import numpy as np
import pytest

from surface_beta.core.exceptions import ConfigError, DecoderError
from surface_beta.core.utils import SimConfig
from surface_beta.analysis.formulas import logical_error_beta, logical_error_beta_z
from surface_beta.analysis.params import CodeParams, published_betas
from surface_beta.codes.channels import channel_from_bias, depolarizing, phase_flip
from surface_beta.codes.surface import build_code, build_surface_code
from surface_beta.montecarlo.engine import block_rng, estimates_frame, simulate, sweep
from surface_beta.montecarlo.stats import wilson_interval


def test_wilson_interval():
    lo, hi = wilson_interval(10, 100)
    assert lo == pytest.approx(0.05523, abs=1e-4)
    assert hi == pytest.approx(0.17437, abs=1e-4)
    assert wilson_interval(0, 100)[0] == 0.0
    assert wilson_interval(100, 100)[1] == 1.0
    lo, hi = wilson_interval(0, 1)
    assert lo == 0.0
    assert hi == pytest.approx(0.7935, abs=1e-4)
    lo, hi = wilson_interval(50, 100)
    assert 0.5 - lo == pytest.approx(hi - 0.5)
    with pytest.raises(ConfigError):
        wilson_interval(1, 0)
    with pytest.raises(ConfigError):
        wilson_interval(5, 4)
    with pytest.raises(ConfigError):
        wilson_interval(1, 10, confidence=1.5)


def test_block_streams_are_independent_of_order():
    a = block_rng(7, 2, 3).random(5)
    block_rng(7, 0, 0).random(100)
    assert np.array_equal(a, block_rng(7, 2, 3).random(5))
    assert not np.array_equal(a, block_rng(7, 2, 4).random(5))


def test_noiseless_channel():
    est = simulate(build_surface_code(3, 3), "mwpm", depolarizing(0.0), 500, master_seed=1)
    assert est.failures == 0
    assert est.p_hat == 0.0
    assert est.ci_lo == 0.0
    assert simulate(build_surface_code(3, 3), "mwpm", depolarizing(0.0), 10, master_seed=1, A=1.0).A == 1.0

    zero = sweep(build_surface_code(3, 3), "mwpm", [0.0, 0.05], 1.0, 100, 1, SimConfig(block_size=100, workers=1))
    assert [e.A for e in zero] == [1.0, 1.0]
    flip = sweep(build_surface_code(3, 5), "mwpm", [0.0], math.inf, 50, 1, SimConfig(workers=1))
    assert flip[0].A == math.inf


def test_deterministic_across_workers():
    code = build_surface_code(3, 3)
    ch = depolarizing(0.1)
    serial = simulate(code, "mwpm", ch, 3000, 42, SimConfig(block_size=500, workers=1))
    parallel = simulate(code, "mwpm", ch, 3000, 42, SimConfig(block_size=500, workers=3))
    assert serial == parallel
    other = simulate(code, "mwpm", ch, 3000, 43, SimConfig(block_size=500, workers=1))
    assert other.seed == 43


def test_incompatible_decoder_fails_fast():
    with pytest.raises(DecoderError):
        simulate(build_code(3, 3, xzzx=True), "mwpm", depolarizing(0.1), 100, 0)
    with pytest.raises(DecoderError):
        simulate(build_surface_code(3, 5), "ml", depolarizing(0.1), 100, 0)
    with pytest.raises(ConfigError):
        simulate(build_surface_code(3, 3), "mwpm", depolarizing(0.1), 0, 0)


def test_sweep_and_frame():
    est = sweep(build_surface_code(3, 3), "mwpm", [0.05, 0.1], 1.0, 400, 5, SimConfig(block_size=100, workers=1))
    assert [e.point_index for e in est] == [0, 1]
    df = estimates_frame(est)
    assert list(df.columns[:4]) == ["rho", "A", "code_id", "decoder"]
    assert {"trials", "failures", "p_hat", "ci_lo", "ci_hi"} <= set(df.columns)
    assert (df["ci_lo"] <= df["p_hat"]).all() and (df["p_hat"] <= df["ci_hi"]).all()
    with pytest.raises(ConfigError):
        sweep(build_surface_code(3, 3), "mwpm", [], 1.0, 10, 0)


def within(est, target, k=3.0):
    return abs(est.p_hat - target) <= k * max(est.ci_halfwidth, 1.0 / est.trials)


@pytest.mark.slow
@pytest.mark.parametrize("rho", [0.01, 0.023, 0.047])
def test_depolarizing_points_follow_beta_curve(rho):
    est = simulate(build_surface_code(3, 3), "mwpm", depolarizing(rho), 100_000, 2024)
    assert within(est, logical_error_beta(13, 1, rho, published_betas("3x3")))


@pytest.mark.slow
@pytest.mark.parametrize("rho", [0.01, 0.023, 0.047])
def test_phase_flip_points_follow_beta_z_curve(rho):
    params = CodeParams.from_distances(3, 5)
    est = simulate(build_surface_code(3, 5), "mwpm", phase_flip(rho), 100_000, 2024)
    assert within(est, logical_error_beta_z(params.n, params.t_Z, rho, published_betas("3x5")))


@pytest.mark.slow
def test_simulation_agrees_with_exact_rate():
    from surface_beta.enumeration.exact import exact_logical_error_rate

    code = build_surface_code(3, 3)
    ch = depolarizing(0.1)
    for decoder in ("mwpm", "ml"):
        est = simulate(code, decoder, ch, 100_000, 7, SimConfig(workers=4))
        assert within(est, exact_logical_error_rate(code, ch, decoder))


@pytest.mark.slow
def test_asymmetric_code_ordering():
    rho = 0.06

    def p(d_X, d_Z, A):
        return simulate(build_surface_code(d_X, d_Z), "mwpm", channel_from_bias(rho, A), 100_000, 99, SimConfig(workers=4))

    sym1, asym1, tall1 = p(5, 5, 1.0), p(3, 5, 1.0), p(3, 7, 1.0)
    assert sym1.ci_hi < asym1.ci_lo
    assert asym1.ci_hi < tall1.ci_lo

    sym10, asym10, tall10 = p(5, 5, 10.0), p(3, 5, 10.0), p(3, 7, 10.0)
    assert asym10.ci_hi < sym10.ci_lo
    assert tall10.ci_hi < min(asym10.ci_lo, sym10.ci_lo, p(3, 3, 10.0).ci_lo)
