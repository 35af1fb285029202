import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from surface_beta.core.exceptions import ChannelError, ConfigError
from surface_beta.analysis.formulas import (
    alpha_bound_curve,
    alpha_coeff,
    asymptotic_slope_approx,
    logical_error_alpha_form,
    logical_error_asym,
    logical_error_beta,
    logical_error_beta_z,
    logical_error_bounded,
)
from surface_beta.analysis.params import BetaVector, CodeParams, published_betas
from surface_beta.codes.channels import channel_from_bias

P13 = CodeParams.from_distances(3, 3)
P23 = CodeParams.from_distances(3, 5)


def test_code_params():
    assert P13 == CodeParams(n=13, t=1, e_g=1, e_Z=0, t_Z=1)
    assert P23 == CodeParams(n=23, t=1, e_g=1, e_Z=1, t_Z=2)
    assert CodeParams.from_distances(5, 5).n == 41
    assert CodeParams.from_distances(3, 7).e_Z == 2


def test_bounded_examples():
    assert logical_error_bounded(13, 1, 0.0) == 0.0
    assert logical_error_bounded(13, 1, 1.0) == pytest.approx(1.0)
    expected = 1 - (0.99**13 + 13 * 0.01 * 0.99**12)
    assert logical_error_bounded(13, 1, 0.01) == pytest.approx(expected, rel=1e-12)
    assert logical_error_bounded(13, 1, 0.01) == pytest.approx(7.249e-3, abs=1e-6)
    with pytest.raises(ChannelError):
        logical_error_bounded(13, 1, 1.5)


def test_bounded_is_increasing():
    grid = np.linspace(0.001, 0.9, 300)
    values = [logical_error_bounded(13, 1, float(r)) for r in grid]
    assert all(b > a for a, b in zip(values, values[1:]))


def test_asym_phase_flip_collapses_to_binomial_tail():
    rho = 0.07
    expected = 1 - sum(math.comb(23, j) * rho**j * (1 - rho) ** (23 - j) for j in range(3))
    assert logical_error_asym(23, 1, 1, rho, rho) == pytest.approx(expected, rel=1e-10)
    with pytest.raises(ChannelError):
        logical_error_asym(23, 1, 1, 0.2, 0.1)


@settings(max_examples=60)
@given(
    st.integers(min_value=3, max_value=41),
    st.integers(min_value=0, max_value=2),
    st.integers(min_value=0, max_value=2),
    st.floats(min_value=0.0, max_value=0.3),
    st.sampled_from([1.0, 2.0, 10.0, 100.0]),
)
def test_asym_equals_alpha_form(n, e_g, e_Z, rho, A):
    p_Z = channel_from_bias(rho, A).p_Z
    lhs = logical_error_asym(n, e_g, e_Z, p_Z, rho)
    rhs = logical_error_alpha_form(n, e_g, e_Z, rho, A)
    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-15)
    if e_Z == 0:
        assert lhs == pytest.approx(logical_error_bounded(n, e_g, rho), rel=1e-12, abs=1e-15)


def test_alpha_coeff():
    assert alpha_coeff(1, 1, 1.0) == 1.0
    assert alpha_coeff(2, 1, math.inf) == 1.0
    j, e_g = 2, 1
    expected = (2 / 3) ** j * sum(math.comb(j, i) * 0.5**i for i in range(j - e_g, j + 1))
    assert alpha_coeff(j, e_g, 1.0) == pytest.approx(expected)
    assert alpha_coeff(j, e_g, 1e6) == pytest.approx(1.0, abs=1e-5)
    with pytest.raises(ChannelError):
        alpha_coeff(2, 1, 0.5)


def test_alpha_form_examples():
    assert logical_error_alpha_form(13, 1, 0, 0.05, 1.0) == pytest.approx(logical_error_bounded(13, 1, 0.05))
    assert logical_error_alpha_form(23, 1, 1, 0.0, 10.0) == 0.0
    rho, A = 0.05, 100.0
    p_Z = channel_from_bias(rho, A).p_Z
    assert logical_error_alpha_form(23, 1, 1, rho, A) == pytest.approx(logical_error_asym(23, 1, 1, p_Z, rho), rel=1e-12)
    curve = alpha_bound_curve(P23, [0.01, 0.1], 10.0)
    assert curve.shape == (2,)
    assert curve[0] < curve[1]


def test_asymptote():
    assert asymptotic_slope_approx(P13, 0.001, beta_next=0.76) == pytest.approx(1.872e-5)
    assert asymptotic_slope_approx(P13, 0.001) == pytest.approx(7.8e-5)
    slope = math.log10(asymptotic_slope_approx(P13, 1e-3) / asymptotic_slope_approx(P13, 1e-4))
    assert slope == pytest.approx(2.0)
    # phase flip: leading weight e_g + e_Z + 1
    assert asymptotic_slope_approx(P23, 0.01, A=math.inf) == pytest.approx(math.comb(23, 3) * 1e-6)
    # finite bias on an asymmetric code keeps slope e_g + 1, scaled by 1 - alpha
    finite = asymptotic_slope_approx(P23, 0.01, A=10.0)
    assert finite == pytest.approx((1 - alpha_coeff(2, 1, 10.0)) * math.comb(23, 2) * 1e-4)


def test_beta_forms():
    zero_betas = BetaVector.of(2, [])
    for rho in (0.0, 0.01, 0.2):
        assert logical_error_beta(13, 1, rho, zero_betas) == pytest.approx(logical_error_bounded(13, 1, rho))
    all_ones = BetaVector.of(3, [1.0] * 21)
    assert logical_error_beta_z(23, 2, 0.1, all_ones) == 0.0
    assert logical_error_beta_z(23, 2, 0.0, published_betas("3x5")) == 0.0
    b = published_betas("3x3")
    for rho in np.linspace(0.0, 1.0, 21):
        assert 0.0 <= logical_error_beta(13, 1, float(rho), b) <= 1.0
    # a plain sequence starts at t + 1
    assert logical_error_beta(13, 1, 0.05, [0.76, 0.48]) == pytest.approx(
        logical_error_beta(13, 1, 0.05, BetaVector.of(2, [0.76, 0.48]))
    )


def test_beta_form_is_tight_at_small_rho():
    b = published_betas("3x3")
    for rho in (0.003, 0.001, 0.0003):
        ratio = logical_error_beta(13, 1, rho, b) / asymptotic_slope_approx(P13, rho, b.next_beta)
        assert abs(ratio - 1) <= 0.05


def test_beta_vector():
    b = BetaVector.of(2, [0.76, 0.48])
    assert b(1) == 1.0
    assert b(2) == 0.76
    assert b(4) == 0.0
    assert b.next_beta == 0.76
    with pytest.raises(ConfigError):
        BetaVector.of(2, [1.2])
    with pytest.raises(ConfigError):
        BetaVector.of(0, [0.5])
    with pytest.raises(ConfigError):
        published_betas("7x7")
