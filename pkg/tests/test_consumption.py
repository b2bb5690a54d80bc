"""MPC/IMPC construction against elementwise closed forms."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from regimevar.consumption import (
    LITERAL,
    STANDARD,
    ConsumptionInputs,
    discount_factor,
    discount_path,
    euler_residual,
    impc_series,
    mpc_series,
)
from regimevar.data_model import Period, TimeSeries
from regimevar.errors import (
    NonPositiveConsumption,
    RateOutOfDomain,
    ShapeMismatch,
    TooShort,
)

START = Period(2000, 1)


def make_inputs(c, y, r) -> ConsumptionInputs:
    return ConsumptionInputs(
        consumption=TimeSeries("C", START, np.asarray(c, dtype=float)),
        income=TimeSeries("Y", START, np.asarray(y, dtype=float)),
        interest_rate=TimeSeries("R", START, np.asarray(r, dtype=float)),
    )


def test_mpc_elementwise_oracle():
    c = [10.0, 12.0, 15.0, 14.0, 18.0]
    y = [20.0, 24.0, 30.0, 26.0, 34.0]
    series = mpc_series(make_inputs(c, y, [0.02] * 5))
    expected = [(c[t] - c[t - 1]) / (y[t] - y[t - 1]) for t in range(1, 5)]
    np.testing.assert_allclose(series.values, expected, rtol=0, atol=0)
    assert series.start == START + 1
    assert series.name == "MPC"


def test_mpc_zero_income_increment_is_nan_and_warns():
    inputs = make_inputs([1.0, 2.0, 3.0], [5.0, 5.0, 7.0], [0.0, 0.0, 0.0])
    with pytest.warns(UserWarning, match="zero income increment"):
        series = mpc_series(inputs)
    assert math.isnan(series.values[0])
    assert series.values[1] == pytest.approx(0.5)


def test_mpc_too_short():
    with pytest.raises(TooShort):
        mpc_series(make_inputs([1.0], [1.0], [0.0]))


def test_inputs_must_align():
    with pytest.raises(ShapeMismatch):
        ConsumptionInputs(
            consumption=TimeSeries("C", START, np.ones(4)),
            income=TimeSeries("Y", START + 1, np.ones(4)),
            interest_rate=TimeSeries("R", START, np.ones(4)),
        )
    with pytest.raises(ShapeMismatch):
        make_inputs([1.0, 2.0], [1.0, 2.0, 3.0], [0.0, 0.0])


@pytest.mark.parametrize("formula,shift", [(STANDARD, 1.0), (LITERAL, 2.0)])
def test_discount_factor_formulas(formula, shift):
    for rate in (-0.5, 0.0, 0.03, 0.25):
        assert discount_factor(rate, formula) == pytest.approx(1.0 / (shift + rate))
    with pytest.raises(RateOutOfDomain):
        discount_factor(-shift, formula)
    with pytest.raises(RateOutOfDomain):
        discount_factor(-shift - 0.1, formula)


@pytest.mark.parametrize("formula", [STANDARD, LITERAL])
def test_impc_elementwise_oracle(formula):
    c = np.array([10.0, 12.0, 15.0, 14.0, 18.0, 21.0])
    y = np.array([20.0, 24.0, 30.0, 26.0, 34.0, 40.0])
    r = np.array([0.01, 0.02, 0.05, 0.03, 0.04, 0.02])
    series = impc_series(make_inputs(c, y, r), formula)
    mpc = np.diff(c) / np.diff(y)
    expected = [
        mpc[t] + discount_factor(r[t + 2], formula) * mpc[t + 1]
        for t in range(len(mpc) - 1)
    ]
    np.testing.assert_allclose(series.values, expected, rtol=0, atol=0)
    assert series.start == START + 1
    assert len(series) == len(c) - 2


def test_impc_propagates_nan():
    with pytest.warns(UserWarning):
        series = impc_series(make_inputs([1.0, 2.0, 2.5, 3.0], [5.0, 6.0, 6.0, 8.0], [0.0] * 4))
    assert math.isnan(series.values[1])  # MPC_2 is NaN (dY = 0)
    assert math.isnan(series.values[0])  # and it contaminates IMPC_1


def test_impc_too_short():
    with pytest.raises(TooShort):
        impc_series(make_inputs([1.0, 2.0], [1.0, 2.0], [0.0, 0.0]))


def test_euler_residual_zero_iff_equation_holds():
    beta, rate = 0.96, 0.02
    c_now = 1.3
    residual = euler_residual(c_now, 3.1, beta, rate)
    assert residual == pytest.approx(math.log(c_now) - math.log(3.1) - math.log(beta) - rate)
    # The residual vanishes exactly when log C_next = log C_now - log beta - r.
    c_next = c_now * math.exp(-math.log(beta) - rate)
    assert euler_residual(c_now, c_next, beta, rate) == pytest.approx(0.0, abs=1e-12)


def test_euler_residual_antisymmetry():
    # Swapping now/next flips the consumption-ratio term exactly.
    beta, rate = 0.9, 0.05
    forward = euler_residual(2.0, 3.0, beta, rate)
    backward = euler_residual(3.0, 2.0, beta, rate)
    assert forward + backward == pytest.approx(2 * (-math.log(beta) - rate), abs=1e-12)


def test_euler_residual_domain_errors():
    with pytest.raises(NonPositiveConsumption):
        euler_residual(0.0, 1.0, 0.9, 0.0)
    with pytest.raises(NonPositiveConsumption):
        euler_residual(1.0, -2.0, 0.9, 0.0)
    with pytest.raises(RateOutOfDomain):
        euler_residual(1.0, 1.0, 0.0, 0.0)


def test_discount_path_aligns_to_next_period_rate():
    rates = TimeSeries("R", START, np.array([0.01, 0.02, 0.03, 0.04]))
    path = discount_path(rates)
    np.testing.assert_allclose(
        path.beta.values, [1 / 1.02, 1 / 1.03, 1 / 1.04], rtol=0, atol=0
    )
    assert path.beta.start == START


@given(
    st.lists(st.floats(min_value=0.1, max_value=50.0), min_size=3, max_size=12),
    st.floats(min_value=-0.4, max_value=0.4),
)
def test_mpc_scale_invariance(levels, rate):
    """Scaling C and Y by the same constant leaves MPC unchanged."""
    c = np.asarray(levels)
    y = np.cumsum(np.abs(np.diff(c, prepend=0.0)) + 1.0)  # strictly increasing income
    base = mpc_series(make_inputs(c, y, [rate] * len(c))).values
    scaled = mpc_series(make_inputs(7.5 * c, 7.5 * y, [rate] * len(c))).values
    np.testing.assert_allclose(scaled, base, rtol=1e-12, atol=1e-12)
