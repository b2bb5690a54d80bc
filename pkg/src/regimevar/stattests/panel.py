"""Panel unit-root tests and the Fisher p-value combination.

The pooled test standardizes each entity's innovation/level residuals,
pools the first-order autoregression of the former on the latter, and
centers/scales the pooled t-ratio with the simulated finite-sample
adjustments in ``_panel_moments`` (indexed by the per-entity regression
length). The group-mean test standardizes the cross-entity average ADF
t-ratio with simulated moments indexed by (observations, lag order). The
forward-orthogonalization test needs no nuisance tables: the transformed
score is asymptotically standard normal by construction.
"""

from __future__ import annotations

import math
import warnings

import numpy as np
from scipy.special import chdtrc, ndtr

from ..data_model import PanelDataset, TimeSeries
from ..errors import InvalidP, InvalidParameter, TooFewEntities, TooShort, ZeroVariance
from ._panel_moments import GROUP_MOMENTS, POOLED_ADJUSTMENTS
from .reports import TestReport
from .unitroot import (
    bartlett_long_run_variance,
    check_spec,
    _det_columns,
    default_max_lags,
    df_regression,
    schwarz_lag_order,
)

MIN_COMMON_OBSERVATIONS = 25
_POOLED_KEY = {"none": "none", "constant": "constant", "constant_trend": "trend"}
_GROUP_KEY = {"constant": "constant", "constant_trend": "trend"}


def _finite_span(series: TimeSeries) -> TimeSeries:
    values = np.asarray(series.values, dtype=float)
    ok = np.isfinite(values)
    if not ok.any():
        raise TooShort(f"{series.name} has no finite observations")
    first, last = int(np.argmax(ok)), len(ok) - 1 - int(np.argmax(ok[::-1]))
    if not ok[first : last + 1].all():
        raise InvalidParameter(f"{series.name} has interior missing observations")
    return series.window(series.start + first, series.start + last)


def common_panel_matrix(panel: PanelDataset, variable: str) -> tuple[list[str], np.ndarray]:
    """Entities holding ``variable`` and their observations over the
    maximal common period window, stacked as an (N, T) matrix."""
    entities = [e for e in panel.entities if panel.has(e, variable)]
    if len(entities) < 2:
        raise TooFewEntities(
            f"variable {variable!r} is present for {len(entities)} entities; need >= 2"
        )
    spans = [_finite_span(panel.series(e, variable)) for e in entities]
    start = max(s.start for s in spans)
    end = min(s.end for s in spans)
    t = end - start + 1
    if t < MIN_COMMON_OBSERVATIONS:
        raise TooShort(
            f"variable {variable!r}: {max(t, 0)} common observations "
            f"< {MIN_COMMON_OBSERVATIONS}"
        )
    rows = np.stack([s.window(start, end).values for s in spans])
    return entities, rows


def _interp_inverse(x: float, xp: np.ndarray, fp: np.ndarray) -> float:
    """Interpolate f at x, linear in 1/x between tabulated nodes, with
    end clamping."""
    x = min(max(x, float(xp[0])), float(xp[-1]))
    return float(np.interp(-1.0 / x, -1.0 / xp, fp))


def _pooled_adjustments(spec: str, t_tilde: float) -> tuple[float, float]:
    rows = np.asarray(POOLED_ADJUSTMENTS[_POOLED_KEY[spec]])
    return (
        _interp_inverse(t_tilde, rows[:, 0], rows[:, 1]),
        _interp_inverse(t_tilde, rows[:, 0], rows[:, 2]),
    )


def _group_moments(spec: str, n_obs: float, lag: int) -> tuple[float, float]:
    table = GROUP_MOMENTS[_GROUP_KEY[spec]]
    rows = np.asarray(table[min(lag, max(table))])
    return (
        _interp_inverse(n_obs, rows[:, 0], rows[:, 1]),
        _interp_inverse(n_obs, rows[:, 0], rows[:, 2]),
    )


def _residualize(lhs: np.ndarray, columns: list[np.ndarray]) -> np.ndarray:
    if not columns:
        return lhs
    x = np.column_stack(columns)
    coef, *_ = np.linalg.lstsq(x, lhs, rcond=None)
    return lhs - x @ coef


def _check_rows(entities: list[str], rows: np.ndarray) -> None:
    flat = np.ptp(rows, axis=1) == 0.0
    if flat.any():
        names = ", ".join(e for e, bad in zip(entities, flat) if bad)
        raise ZeroVariance(f"constant series for entities: {names}")


def llc_test(panel: PanelDataset, variable: str, spec: str = "constant") -> TestReport:
    """Pooled panel unit-root t* statistic (common-process null).

    Entity lag orders come from the Schwarz rule; the pooled t-ratio is
    centered and scaled by the simulated mu*/sigma* adjustments at the
    average per-entity regression length, then referred to the standard
    normal lower tail.
    """
    check_spec(spec)
    entities, rows = common_panel_matrix(panel, variable)
    _check_rows(entities, rows)
    t = rows.shape[1]
    ndet = len(_det_columns(1, spec))
    cap = max(0, min(default_max_lags(t), (t - ndet - 6) // 2))

    num = den = rss_total = 0.0
    ratio_sum = 0.0
    t_tildes: list[int] = []
    lags_used: list[int] = []
    parts: list[tuple[np.ndarray, np.ndarray]] = []
    for values in rows:
        p = schwarz_lag_order(values, spec, cap)
        dv = np.diff(values)
        n = t - 1 - p
        columns = [dv[p - j : len(dv) - j] for j in range(1, p + 1)]
        columns.extend(_det_columns(n, spec))
        e = _residualize(dv[p:], columns)
        v = _residualize(values[p:-1], columns)
        delta_i = float(e @ v) / float(v @ v)
        resid = e - delta_i * v
        dof = n - p - ndet - 1
        if dof <= 0:
            raise TooShort(f"variable {variable!r}: no degrees of freedom left")
        s_eps = math.sqrt(float(resid @ resid) / dof)
        # Long-run/innovation std ratio from the Bartlett kernel with the
        # truncation proposed for this statistic.
        u = dv if spec == "none" else dv - dv.mean()
        truncation = int(math.floor(3.21 * t ** (1.0 / 3.0)))
        s_long = math.sqrt(bartlett_long_run_variance(u, min(truncation, len(u) - 1)))
        ratio_sum += s_long / s_eps
        parts.append((e / s_eps, v / s_eps))
        t_tildes.append(n)
        lags_used.append(p)

    for e_t, v_t in parts:
        num += float(e_t @ v_t)
        den += float(v_t @ v_t)
    delta = num / den
    for e_t, v_t in parts:
        r = e_t - delta * v_t
        rss_total += float(r @ r)
    total_obs = sum(t_tildes)
    sigma2 = rss_total / total_obs
    std_delta = math.sqrt(sigma2 / den)
    t_delta = delta / std_delta

    n_entities = len(entities)
    t_tilde_bar = total_obs / n_entities
    s_bar = ratio_sum / n_entities
    mu_star, sigma_star = _pooled_adjustments(spec, t_tilde_bar)
    stat = (
        t_delta - n_entities * t_tilde_bar * s_bar * std_delta * mu_star / sigma2
    ) / sigma_star
    return TestReport(
        test_name="llc",
        statistic=float(stat),
        p_value=float(ndtr(stat)),
        cross_sections=n_entities,
        observations=total_obs,
        deterministic_spec=spec,
        lags=max(lags_used),
    )


def breitung_test(panel: PanelDataset, variable: str) -> TestReport:
    """Forward-orthogonalization panel unit-root statistic.

    Differences are Helmert-transformed (each observation minus the mean
    of its future, scaled to unit variance), levels are bridge-detrended
    under the null, and the pooled normalized score is asymptotically
    standard normal — no simulated moments enter.
    """
    entities, rows = common_panel_matrix(panel, variable)
    _check_rows(entities, rows)
    t = rows.shape[1]
    num = den = 0.0
    for values in rows:
        u = np.diff(values)
        length = len(u)
        sigma2 = float(np.sum((u - u.mean()) ** 2)) / (length - 1)
        if sigma2 <= 0.0:
            raise ZeroVariance(f"variable {variable!r} has a constant entity series")
        idx = np.arange(length - 1)
        future_sums = np.cumsum(u[::-1])[::-1]
        future_means = future_sums[1:] / (length - 1 - idx)
        u_star = np.sqrt((length - 1.0 - idx) / (length - idx)) * (u[:-1] - future_means)
        bridge = values[0] + np.arange(t) / (t - 1.0) * (values[-1] - values[0])
        v_star = (values - bridge)[: length - 1]
        num += float(u_star @ v_star) / sigma2
        den += float(v_star @ v_star) / sigma2
    stat = num / math.sqrt(den)
    return TestReport(
        test_name="breitung",
        statistic=float(stat),
        p_value=float(ndtr(stat)),
        cross_sections=len(entities),
        observations=len(entities) * (t - 2),
        deterministic_spec="constant_trend",
        lags=0,
    )


def ips_test(panel: PanelDataset, variable: str, spec: str = "constant") -> TestReport:
    """Group-mean W statistic (individual-process null): the average
    entity ADF t-ratio standardized by simulated moments.

    Constant entity series are excluded with a warning; fewer than two
    usable entities is an error.
    """
    check_spec(spec)
    if spec == "none":
        raise InvalidParameter(
            "the group-mean test requires entity intercepts: "
            "use spec='constant' or 'constant_trend'"
        )
    entities, rows = common_panel_matrix(panel, variable)
    t = rows.shape[1]
    flat = np.ptp(rows, axis=1) == 0.0
    if flat.any():
        dropped = [e for e, bad in zip(entities, flat) if bad]
        warnings.warn(
            f"excluding constant series for entities: {', '.join(dropped)}",
            stacklevel=2,
        )
        entities = [e for e, bad in zip(entities, flat) if not bad]
        rows = rows[~flat]
    if len(entities) < 2:
        raise TooFewEntities("fewer than two usable entities after exclusions")

    max_table_lag = max(GROUP_MOMENTS[_GROUP_KEY[spec]])
    ndet = len(_det_columns(1, spec))
    cap = max(0, min(default_max_lags(t), max_table_lag, (t - ndet - 6) // 2))
    stats, means, variances = [], [], []
    lags_used, total_obs = [], 0
    for values in rows:
        p = schwarz_lag_order(values, spec, cap)
        tau, _, _, _, n, _ = df_regression(values, spec, p)
        mean_t, var_t = _group_moments(spec, n, p)
        stats.append(tau)
        means.append(mean_t)
        variances.append(var_t)
        lags_used.append(p)
        total_obs += n
    n_entities = len(entities)
    t_bar = float(np.mean(stats))
    w = math.sqrt(n_entities) * (t_bar - float(np.mean(means))) / math.sqrt(
        float(np.mean(variances))
    )
    return TestReport(
        test_name="ips",
        statistic=float(w),
        p_value=float(ndtr(w)),
        cross_sections=n_entities,
        observations=total_obs,
        deterministic_spec=spec,
        lags=max(lags_used),
    )


def fisher_combine(p_values, test_name: str = "fisher") -> TestReport:
    """Combine independent test p-values: -2 * sum(log p) referred to the
    chi-square upper tail with 2N degrees of freedom."""
    cleaned = [float(p) for p in p_values]
    if not cleaned:
        raise InvalidP("at least one p-value is required")
    for p in cleaned:
        if not 0.0 < p <= 1.0:
            raise InvalidP(f"p-value {p} outside (0, 1]")
    stat = -2.0 * sum(math.log(p) for p in cleaned)
    n = len(cleaned)
    return TestReport(
        test_name=test_name,
        statistic=float(stat),
        p_value=float(chdtrc(2 * n, stat)),
        cross_sections=n,
        observations=n,
        deterministic_spec="none",
        lags=0,
    )
