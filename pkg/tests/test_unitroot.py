"""ADF and PP against statsmodels and hand-computed formulas."""

from __future__ import annotations

import math

import numpy as np
import pytest
from statsmodels.tsa.stattools import adfuller

from regimevar.data_model import Period, TimeSeries
from regimevar.errors import InvalidParameter, TooShort, ZeroVariance
from regimevar.stattests import adf_test, pp_test
from regimevar.stattests.unitroot import (
    bartlett_long_run_variance,
    default_max_lags,
    newey_west_bandwidth,
    schwarz_lag_order,
    series_values,
)

SPEC_MAP = {"none": "n", "constant": "c", "constant_trend": "ct"}


def make_paths():
    rng = np.random.default_rng(7)
    paths = []
    for t in (75, 140, 200):
        paths.append(rng.standard_normal(t).cumsum())  # unit root
        ar = np.zeros(t)
        for i in range(1, t):
            ar[i] = 0.7 * ar[i - 1] + rng.standard_normal()
        paths.append(ar)  # stationary
        paths.append(rng.standard_normal(t).cumsum() + 0.05 * np.arange(t))  # drifting
    return paths


@pytest.mark.parametrize("spec", ["none", "constant", "constant_trend"])
@pytest.mark.parametrize("lags", [0, 1, 4])
def test_adf_statistic_matches_statsmodels(spec, lags):
    for x in make_paths():
        mine = adf_test(x, spec, lags=lags)
        stat, p, usedlag, nobs, *_ = adfuller(
            x, maxlag=lags, regression=SPEC_MAP[spec], autolag=None
        )
        assert mine.statistic == pytest.approx(stat, abs=1e-10)
        assert mine.observations == nobs
        assert mine.lags == lags
        # statsmodels interpolates the asymptotic MacKinnon surface; ours
        # is simulated at the finite sample size, so p-values agree only
        # to a couple of percent in the mid range.
        assert mine.p_value == pytest.approx(p, abs=0.02)


def test_adf_automatic_lag_is_the_schwarz_argmin():
    for x in make_paths():
        for spec in ("constant", "constant_trend"):
            report = adf_test(x, spec)
            t = len(x)
            ndet = 1 if spec == "constant" else 2
            cap = max(0, min(default_max_lags(t), (t - ndet - 6) // 2))
            assert report.lags == schwarz_lag_order(x, spec, cap)
            refit = adf_test(x, spec, lags=report.lags)
            assert report.statistic == refit.statistic


def test_schwarz_picks_known_order():
    # Differences follow an AR(1) with a strong coefficient, so one lag of
    # the difference carries real signal and lag 0 underfits.
    rng = np.random.default_rng(11)
    t = 400
    eps = rng.standard_normal(t)
    du = np.zeros(t)
    for i in range(1, t):
        du[i] = 0.6 * du[i - 1] + eps[i]
    x = du.cumsum()
    assert schwarz_lag_order(x, "constant", 6) == 1


def test_pp_statistic_matches_hand_formula():
    rng = np.random.default_rng(3)
    x = rng.standard_normal(150).cumsum()
    for spec in ("constant", "constant_trend"):
        report = pp_test(x, spec, bandwidth=6)
        dv, lv = np.diff(x), x[:-1]
        n = len(dv)
        det = [np.ones(n)] if spec == "constant" else [np.ones(n), np.arange(1.0, n + 1)]
        design = np.column_stack([lv] + det)
        beta, *_ = np.linalg.lstsq(design, dv, rcond=None)
        resid = dv - design @ beta
        s2 = resid @ resid / (n - design.shape[1])
        se0 = math.sqrt(s2 * np.linalg.inv(design.T @ design)[0, 0])
        gamma = [resid[j:] @ resid[: n - j] / n for j in range(7)]
        f0 = gamma[0] + 2 * sum((1 - j / 7.0) * gamma[j] for j in range(1, 7))
        z = beta[0] / se0 * math.sqrt(gamma[0] / f0) - n * (f0 - gamma[0]) * se0 / (
            2 * math.sqrt(f0) * math.sqrt(s2)
        )
        assert report.statistic == pytest.approx(z, abs=1e-12)
        assert report.lags == 6


def test_pp_reduces_to_df_when_residuals_are_white():
    # With bandwidth 0 the correction factor gamma0/f0 is exactly 1 and
    # the PP statistic collapses to the (non-augmented) DF t-ratio.
    rng = np.random.default_rng(5)
    x = rng.standard_normal(120).cumsum()
    pp = pp_test(x, "constant", bandwidth=0)
    adf = adf_test(x, "constant", lags=0)
    assert pp.statistic == pytest.approx(adf.statistic, rel=1e-12)


def test_newey_west_bandwidth_properties():
    rng = np.random.default_rng(9)
    white = rng.standard_normal(500)
    correlated = np.convolve(rng.standard_normal(520), np.ones(8) / 8.0, mode="valid")
    assert newey_west_bandwidth(correlated) > newey_west_bandwidth(white)
    assert newey_west_bandwidth(white) >= 0


def test_bartlett_long_run_variance_hand_check():
    resid = np.array([1.0, -2.0, 3.0, -1.0, 0.5])
    n = 5
    gamma = [float(resid[j:] @ resid[: n - j]) / n for j in range(3)]
    expected = gamma[0] + 2 * (2 / 3) * gamma[1] + 2 * (1 / 3) * gamma[2]
    assert bartlett_long_run_variance(resid, 2) == pytest.approx(expected, rel=1e-15)


def test_series_values_trims_edges_rejects_interior():
    series = TimeSeries("X", Period(2000), np.array([np.nan, 1.0, 2.0, 3.0, np.nan]))
    name, values = series_values(series)
    assert name == "X"
    np.testing.assert_array_equal(values, [1.0, 2.0, 3.0])
    with pytest.raises(InvalidParameter, match="interior"):
        series_values(np.array([1.0, np.nan, 3.0, 4.0]))


def test_adf_error_paths():
    with pytest.raises(ZeroVariance):
        adf_test(np.ones(50))
    with pytest.raises(TooShort):
        adf_test(np.arange(8.0) + np.random.default_rng(0).standard_normal(8), lags=2)
    with pytest.raises(InvalidParameter):
        adf_test(np.random.default_rng(0).standard_normal(50), "quadratic")
    with pytest.raises(InvalidParameter):
        adf_test(np.random.default_rng(0).standard_normal(50), lags=-1)


def test_pp_error_paths():
    rng = np.random.default_rng(1)
    with pytest.raises(TooShort):
        pp_test(rng.standard_normal(15))
    with pytest.raises(InvalidParameter):
        pp_test(rng.standard_normal(50), bandwidth=-2)
