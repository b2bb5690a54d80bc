"""FitResult serialization: machine JSON, the estimation table in the
published layout, and the regime-probability series.

The estimation table mirrors the published shape: a title line, one
column per equation, per-regime blocks of switching coefficients, a
Common block of lag (and any non-switching) coefficients, the
transition-parameter rows P11-C…, and footer statistics. Human tables
round to 4 decimals (the determinant cell uses scientific notation —
its scale is far below 1e-4); machine outputs print floats at 17
significant digits.
"""

from __future__ import annotations

import io
import json
import math

import numpy as np

from ..errors import InvalidParameter, ShapeMismatch
from ..serialize import format_sig, to_json
from .estimate import FitResult, regime_classify
from .model import MsVarParams, MsVarSpec, SwitchingFlags

TABLE_TITLE = "Markov Switching Intercepts VAR Estimates (BFGS / Marquardt steps)"
INTERCEPT_LABEL = "C"


def _variable_names(result: FitResult, variables) -> list[str]:
    n = result.spec.n_vars
    if variables is None:
        return [f"V{i + 1}" for i in range(n)]
    variables = [str(v) for v in variables]
    if len(variables) != n:
        raise ShapeMismatch(f"expected {n} variable names, got {len(variables)}")
    return variables


def _cell(text: str) -> str:
    if any(ch in text for ch in ',"\n'):
        return '"' + text.replace('"', '""') + '"'
    return text


def _row(out: io.StringIO, width: int, *cells: str) -> None:
    padded = list(cells) + [""] * (width - len(cells))
    out.write(",".join(_cell(c) for c in padded) + "\n")


def estimation_table_csv(
    result: FitResult, variables=None, exog_name: str = "COVID_SHOCK"
) -> str:
    """The estimation table as CSV, shaped like the published layout.

    Coefficient rows hold one value per equation (column); blocks that
    do not switch move from the regime sections to the Common section.
    """
    names = _variable_names(result, variables)
    spec, params = result.spec, result.params
    n, r = spec.n_vars, spec.n_regimes
    width = 1 + max(n, 4)
    out = io.StringIO()

    def coef_row(label: str, values: np.ndarray) -> None:
        _row(out, width, label, *(f"{v:.4f}" for v in values))

    _row(out, width, TABLE_TITLE)
    _row(out, width, "", *names)
    for s in range(r):
        _row(out, width, f"Regime {s + 1}")
        if spec.switching.intercept:
            coef_row(INTERCEPT_LABEL, params.intercepts[s])
        if spec.has_exog_dummy and spec.switching.exog_loading:
            coef_row(exog_name, params.exog_loadings[s])
    _row(out, width, "Common")
    if not spec.switching.intercept:
        coef_row(INTERCEPT_LABEL, params.intercepts[0])
    if spec.has_exog_dummy and not spec.switching.exog_loading:
        coef_row(exog_name, params.exog_loadings[0])
    for lag in range(spec.n_lags):
        for j in range(n):
            coef_row(f"{names[j]}(-{lag + 1})", params.lag_matrices[lag][:, j])

    _row(out, width, "Transition Matrix Parameters")
    _row(out, width, "Variable", "Coefficient", "Std. Error", "z-Statistic", "Prob.")
    for i in range(r):
        for j in range(r - 1):
            _row(out, width, f"P{i + 1}{j + 1}-C", f"{params.transition_logits[i, j]:.4f}")

    _row(out, width, "Determinant resid covariance", f"{math.exp(result.log_det_resid_cov):.4e}")
    _row(out, width, "Log likelihood", f"{result.loglik:.4f}")
    _row(out, width, "Akaike info criterion", f"{result.aic:.4f}")
    _row(out, width, "Schwarz criterion", f"{result.schwarz:.4f}")
    _row(out, width, "Number of coefficients", str(result.n_coefficients))
    return out.getvalue()


def regime_probability_csv(result: FitResult, periods=None) -> str:
    """Smoothed regime probabilities and the classified regime per
    effective observation, floats at full (17-digit) precision.

    ``periods`` optionally labels the rows; the default is the 1-based
    effective-observation index (observation 1 follows the lag window).
    """
    smoothed = result.filter.smoothed
    t_eff, r = smoothed.shape
    if periods is None:
        periods = [str(t + 1) for t in range(t_eff)]
    else:
        periods = [str(p) for p in periods]
        if len(periods) != t_eff:
            raise ShapeMismatch(f"expected {t_eff} period labels, got {len(periods)}")
    classified = regime_classify(result.filter)
    out = io.StringIO()
    header = ["t"] + [f"smoothed_regime_{s + 1}" for s in range(r)] + ["classified_regime"]
    out.write(",".join(header) + "\n")
    for t in range(t_eff):
        cells = [periods[t]]
        cells.extend(format_sig(smoothed[t, s]) for s in range(r))
        cells.append(str(int(classified[t])))
        out.write(",".join(_cell(c) for c in cells) + "\n")
    return out.getvalue()


def fit_result_to_json(result: FitResult, variables=None) -> str:
    """Machine-readable JSON for a fit: spec, parameters (including the
    implied transition matrix), fit statistics, and convergence info."""
    spec, params = result.spec, result.params
    payload = {
        "spec": {
            "n_vars": spec.n_vars,
            "n_regimes": spec.n_regimes,
            "n_lags": spec.n_lags,
            "has_exog_dummy": spec.has_exog_dummy,
            "switching": {
                "intercept": spec.switching.intercept,
                "exog_loading": spec.switching.exog_loading,
                "covariance": spec.switching.covariance,
                "lag_coeffs": spec.switching.lag_coeffs,
            },
        },
        "variables": _variable_names(result, variables),
        "params": {
            "intercepts": params.intercepts,
            "exog_loadings": params.exog_loadings,
            "lag_matrices": params.lag_matrices,
            "covariances": params.covariances,
            "transition_logits": params.transition_logits,
            "transition_matrix": params.transition_matrix(),
        },
        "loglik": result.loglik,
        "aic": result.aic,
        "schwarz": result.schwarz,
        "log_det_resid_cov": result.log_det_resid_cov,
        "det_resid_cov": math.exp(result.log_det_resid_cov),
        "n_coefficients": result.n_coefficients,
        "n_obs": result.filter.smoothed.shape[0],
        "convergence": {
            "iterations": result.convergence.iterations,
            "gradient_norm": result.convergence.gradient_norm,
            "status": result.convergence.status,
        },
    }
    return to_json(payload)


def params_from_json(text: str):
    """Parse :func:`fit_result_to_json` output back into model objects.

    Returns (spec, params, variable_names) — everything the dynamics
    stage and the comparison tables need from a stored fit.
    """
    try:
        payload = json.loads(text)
        raw_spec = payload["spec"]
        spec = MsVarSpec(
            n_vars=int(raw_spec["n_vars"]),
            n_regimes=int(raw_spec["n_regimes"]),
            n_lags=int(raw_spec["n_lags"]),
            has_exog_dummy=bool(raw_spec["has_exog_dummy"]),
            switching=SwitchingFlags(**raw_spec["switching"]),
        )
        raw = payload["params"]
        params = MsVarParams(
            intercepts=raw["intercepts"],
            exog_loadings=raw["exog_loadings"],
            lag_matrices=raw["lag_matrices"],
            covariances=raw["covariances"],
            transition_logits=raw["transition_logits"],
        )
        variables = [str(v) for v in payload["variables"]]
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise InvalidParameter(f"not a stored fit result: {exc}") from exc
    return spec, params, variables
