"""Series-level unit-root tests: augmented Dickey-Fuller and Phillips-Perron.

Both regress the first difference on the lagged level plus deterministic
terms; ADF augments with lagged differences (lag order fixed or chosen by
the Schwarz criterion over a common sample), PP instead corrects the
t-ratio with a Bartlett long-run variance estimate (bandwidth fixed or
from the Newey-West automatic rule). p-values come from the simulated
response surfaces in :mod:`.mackinnon`, evaluated at the test
regression's own observation count.
"""

from __future__ import annotations

import math

import numpy as np

from ..data_model import TimeSeries
from ..errors import CollinearRegressors, InvalidParameter, TooShort, ZeroVariance
from .mackinnon import mackinnon_pvalue
from .reports import DETERMINISTIC_SPECS, TestReport


def series_values(series) -> tuple[str, np.ndarray]:
    """Name and finite observation vector of a series-like input.

    Leading/trailing NaN sentinels are trimmed; interior ones are an
    error because lagged regressions need a contiguous sample.
    """
    if isinstance(series, TimeSeries):
        name, values = series.name, np.asarray(series.values, dtype=float)
    else:
        name, values = "series", np.asarray(series, dtype=float)
    if values.ndim != 1:
        raise InvalidParameter(f"{name} must be one-dimensional, got shape {values.shape}")
    ok = np.isfinite(values)
    if not ok.any():
        raise TooShort(f"{name} has no finite observations")
    first, last = int(np.argmax(ok)), len(ok) - 1 - int(np.argmax(ok[::-1]))
    if not ok[first : last + 1].all():
        raise InvalidParameter(f"{name} has interior missing observations")
    return name, values[first : last + 1]


def check_spec(spec: str) -> int:
    if spec not in DETERMINISTIC_SPECS:
        raise InvalidParameter(
            f"deterministic spec must be one of {DETERMINISTIC_SPECS}, got {spec!r}"
        )
    return {"none": 0, "constant": 1, "constant_trend": 2}[spec]


def _det_columns(n: int, spec: str) -> list[np.ndarray]:
    cols = []
    if spec != "none":
        cols.append(np.ones(n))
    if spec == "constant_trend":
        cols.append(np.arange(1.0, n + 1.0))
    return cols


def df_regression(values: np.ndarray, spec: str, lags: int):
    """Dickey-Fuller regression with ``lags`` augmentation terms.

    Returns (t_ratio, se_of_level_coef, residuals, regression_std,
    n_observations, n_regressors). Degrees of freedom use n - k, matching
    the convention the response surfaces were simulated under.
    """
    dv = np.diff(values)
    n = len(values) - 1 - lags
    if n <= lags + 2 + len(_det_columns(1, spec)):
        raise TooShort(
            f"{len(values)} observations leave {n} for a regression with {lags} lags"
        )
    cols = [values[lags:-1]]
    for j in range(1, lags + 1):
        cols.append(dv[lags - j : len(dv) - j])
    cols.extend(_det_columns(n, spec))
    x = np.column_stack(cols)
    lhs = dv[lags:]
    xtx = x.T @ x
    try:
        beta = np.linalg.solve(xtx, x.T @ lhs)
        inv00 = np.linalg.inv(xtx)[0, 0]
    except np.linalg.LinAlgError:
        raise CollinearRegressors("test regression design is singular") from None
    resid = lhs - x @ beta
    k = x.shape[1]
    s2 = float(resid @ resid) / (n - k)
    se0 = math.sqrt(s2 * inv00)
    return float(beta[0] / se0), se0, resid, math.sqrt(s2), n, k


def schwarz_lag_order(values: np.ndarray, spec: str, max_lags: int) -> int:
    """Schwarz-criterion lag order over the common sample set by ``max_lags``.

    Every candidate regression drops the same ``max_lags`` initial rows so
    the criteria are comparable; the winner is then refit on its own full
    sample by the caller.
    """
    dv = np.diff(values)
    n = len(values) - 1 - max_lags
    ndet = len(_det_columns(1, spec))
    lhs = dv[max_lags:]
    best_k, best_ic = 0, math.inf
    for k in range(max_lags + 1):
        cols = [values[max_lags:-1]]
        for j in range(1, k + 1):
            cols.append(dv[max_lags - j : len(dv) - j])
        cols.extend(_det_columns(n, spec))
        x = np.column_stack(cols)
        coef, *_ = np.linalg.lstsq(x, lhs, rcond=None)
        resid = lhs - x @ coef
        rss = float(resid @ resid)
        if rss <= 0.0:
            rss = 1e-300
        ic = math.log(rss / n) + (1 + k + ndet) * math.log(n) / n
        if ic < best_ic - 1e-12:
            best_k, best_ic = k, ic
    return best_k


def default_max_lags(t: int) -> int:
    return int(math.floor(12.0 * (t / 100.0) ** 0.25))


def adf_test(series, spec: str = "constant", lags: int | None = None,
             max_lags: int | None = None) -> TestReport:
    """Augmented Dickey-Fuller test.

    ``lags`` fixes the augmentation order; when omitted the Schwarz
    criterion selects it up to ``max_lags`` (default
    floor(12*(T/100)^0.25)).
    """
    check_spec(spec)
    name, values = series_values(series)
    t = len(values)
    if np.ptp(values) == 0.0:
        raise ZeroVariance(f"{name} is constant")
    if lags is not None:
        if lags < 0:
            raise InvalidParameter("lags must be non-negative")
        if t < lags + 10:
            raise TooShort(f"{name}: {t} observations < lags + 10 = {lags + 10}")
        k = lags
    else:
        if t < 15:
            raise TooShort(f"{name}: {t} observations are too few for lag selection")
        ndet = len(_det_columns(1, spec))
        cap = default_max_lags(t) if max_lags is None else max_lags
        cap = max(0, min(cap, (t - ndet - 6) // 2))
        k = schwarz_lag_order(values, spec, cap)
    stat, _, _, _, n, _ = df_regression(values, spec, k)
    p = mackinnon_pvalue(stat, 1, spec, sample_size=n)
    return TestReport(
        test_name="adf",
        statistic=stat,
        p_value=p,
        cross_sections=1,
        observations=n,
        deterministic_spec=spec,
        lags=k,
    )


def newey_west_bandwidth(resid: np.ndarray) -> int:
    """Newey-West (1994) automatic Bartlett-kernel truncation lag."""
    n = len(resid)
    pilot = int(math.floor(4.0 * (n / 100.0) ** (2.0 / 9.0)))
    pilot = max(0, min(pilot, n - 2))
    gamma = np.array(
        [float(resid[j:] @ resid[: n - j]) / n for j in range(pilot + 1)]
    )
    s0 = gamma[0] + 2.0 * gamma[1:].sum()
    s1 = 2.0 * float(np.arange(1, pilot + 1) @ gamma[1:])
    if s0 <= 0.0:
        return 0
    rate = 1.1447 * (s1 / s0) ** 2 if s0 else 0.0
    return max(0, min(int(math.floor(rate ** (1.0 / 3.0) * n ** (1.0 / 3.0))), n - 1))


def bartlett_long_run_variance(resid: np.ndarray, bandwidth: int) -> float:
    n = len(resid)
    out = float(resid @ resid) / n
    for j in range(1, bandwidth + 1):
        weight = 1.0 - j / (bandwidth + 1.0)
        out += 2.0 * weight * float(resid[j:] @ resid[: n - j]) / n
    return max(out, 1e-300)


def pp_test(series, spec: str = "constant", bandwidth: int | None = None) -> TestReport:
    """Phillips-Perron test; ``bandwidth`` fixes the Bartlett truncation
    lag, otherwise the Newey-West automatic rule chooses it."""
    check_spec(spec)
    name, values = series_values(series)
    if len(values) < 20:
        raise TooShort(f"{name}: {len(values)} observations < 20")
    if np.ptp(values) == 0.0:
        raise ZeroVariance(f"{name} is constant")
    t_rho, se0, resid, s, n, _ = df_regression(values, spec, 0)
    b = newey_west_bandwidth(resid) if bandwidth is None else bandwidth
    if b < 0:
        raise InvalidParameter("bandwidth must be non-negative")
    b = min(b, n - 1)
    gamma0 = float(resid @ resid) / n
    f0 = bartlett_long_run_variance(resid, b)
    stat = t_rho * math.sqrt(gamma0 / f0) - n * (f0 - gamma0) * se0 / (
        2.0 * math.sqrt(f0) * s
    )
    p = mackinnon_pvalue(stat, 1, spec, sample_size=n)
    return TestReport(
        test_name="pp",
        statistic=float(stat),
        p_value=p,
        cross_sections=1,
        observations=n,
        deterministic_spec=spec,
        lags=b,
    )
