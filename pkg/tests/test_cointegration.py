"""Engle-Granger two-step test against statsmodels and invariances."""

from __future__ import annotations

import numpy as np
import pytest
from statsmodels.tsa.stattools import coint

from regimevar.data_model import Period, TimeSeries
from regimevar.errors import EmptyIntersection, ShapeMismatch, TooShort
from regimevar.stattests import cointegration_table_csv, engle_granger

START = Period(2000, 1)


def series(name: str, values) -> TimeSeries:
    return TimeSeries(name, START, np.asarray(values, dtype=float))


def cointegrated_pair(t: int, seed: int):
    rng = np.random.default_rng(seed)
    x = rng.standard_normal((t, 2)).cumsum(axis=0)
    noise = np.zeros(t)
    for i in range(1, t):
        noise[i] = 0.3 * noise[i - 1] + rng.standard_normal() * 0.5
    y = 2.0 * x[:, 0] - 0.8 * x[:, 1] + noise
    return y, x


@pytest.mark.parametrize("spec,trend", [("constant", "c"), ("constant_trend", "ct")])
def test_tau_matches_statsmodels(spec, trend):
    for seed in range(5):
        y, x = cointegrated_pair(150, seed)
        mine = engle_granger(
            series("y", y), [series("x0", x[:, 0]), series("x1", x[:, 1])],
            spec, residual_lags=0,
        )
        tau, p, _ = coint(y, x, trend=trend, maxlag=0, autolag=None)
        assert mine.tau == pytest.approx(tau, abs=1e-10)
        assert mine.p_value == pytest.approx(p, abs=1e-3)


def test_detects_constructed_cointegration():
    y, x = cointegrated_pair(200, 42)
    report = engle_granger(series("y", y), [series("x0", x[:, 0]), series("x1", x[:, 1])])
    assert report.p_value < 0.05
    assert report.dependent == "y"


def test_independent_walks_are_not_cointegrated():
    rng = np.random.default_rng(12)
    y = rng.standard_normal(200).cumsum()
    x = rng.standard_normal(200).cumsum()
    report = engle_granger(series("y", y), [series("x", x)])
    assert report.p_value > 0.05


def test_affine_invariance_of_regressors():
    # With a constant in the first-stage regression, shifting or scaling
    # any regressor re-parameterizes the fit without moving the residual.
    y, x = cointegrated_pair(160, 7)
    base = engle_granger(
        series("y", y), [series("a", x[:, 0]), series("b", x[:, 1])], residual_lags=1
    )
    moved = engle_granger(
        series("y", y),
        [series("a", 3.0 * x[:, 0] - 11.0), series("b", -0.5 * x[:, 1] + 4.0)],
        residual_lags=1,
    )
    assert moved.tau == pytest.approx(base.tau, rel=1e-9)
    assert moved.p_value == pytest.approx(base.p_value, rel=1e-9)


def test_dependent_shift_invariance():
    y, x = cointegrated_pair(160, 9)
    xs = [series("a", x[:, 0]), series("b", x[:, 1])]
    base = engle_granger(series("y", y), xs, residual_lags=0)
    shifted = engle_granger(series("y", y + 250.0), xs, residual_lags=0)
    assert shifted.tau == pytest.approx(base.tau, rel=1e-9)


def test_dimension_raises_with_regressor_count():
    # More regressors push the residual test into a higher-dimensional
    # MacKinnon surface, so the same tau becomes less significant.
    from regimevar.stattests import mackinnon_pvalue

    assert mackinnon_pvalue(-3.5, 2) < mackinnon_pvalue(-3.5, 4) < mackinnon_pvalue(-3.5, 8)


def test_validation_errors():
    y, x = cointegrated_pair(60, 0)
    with pytest.raises(ShapeMismatch):
        engle_granger(series("y", y), [])
    with pytest.raises(ShapeMismatch):  # plain arrays must share one length
        engle_granger(y, [x[:50, 0]])
    with pytest.raises(TooShort):
        engle_granger(series("y", y[:12]), [series("x", x[:12, 0])])
    with pytest.raises(EmptyIntersection):
        engle_granger(
            series("y", y),
            [TimeSeries("x", START + len(y) + 5, x[:, 0])],
        )


def test_time_series_inputs_align_to_common_window():
    y, x = cointegrated_pair(160, 21)
    full = engle_granger(series("y", y), [series("x", x[:, 0])], residual_lags=0)
    # Truncating the regressor forces both series onto the shorter window.
    short = engle_granger(series("y", y), [series("x", x[:140, 0])], residual_lags=0)
    direct = engle_granger(series("y", y[:140]), [series("x", x[:140, 0])], residual_lags=0)
    assert short.tau == pytest.approx(direct.tau, rel=1e-14)
    assert short.tau != pytest.approx(full.tau, rel=1e-6)


def test_cointegration_table_layout():
    y, x = cointegrated_pair(150, 3)
    grid = {
        "HR": {
            "GDP": engle_granger(series("GDP", y), [series("HC", x[:, 0])]),
            "HC": engle_granger(series("HC", x[:, 0]), [series("GDP", y)]),
        }
    }
    table = cointegration_table_csv(grid)
    lines = table.strip().splitlines()
    assert lines[0] == "Variable,HR"
    assert lines[1].startswith('"GDP","Tau: ')
    assert "p-value:" in lines[1]
    assert len(lines) == 3
