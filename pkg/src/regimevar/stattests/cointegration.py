"""Two-step residual-based cointegration test.

Step 1 regresses the dependent series on the regressors plus the chosen
deterministic terms; step 2 runs a Dickey-Fuller regression on the
residuals with no deterministic terms (the levels regression already
absorbed them). The tau p-value comes from the response surface for
dimension 1 + #regressors, which was simulated under exactly this
two-step protocol.
"""

from __future__ import annotations

import numpy as np

from ..data_model import TimeSeries
from ..errors import CollinearRegressors, EmptyIntersection, ShapeMismatch, TooShort
from .mackinnon import mackinnon_pvalue
from .reports import CointegrationReport
from .unitroot import (
    check_spec,
    _det_columns,
    default_max_lags,
    df_regression,
    schwarz_lag_order,
    series_values,
)


def _common_window(y, regressors):
    """Values of y and each regressor over their common period window."""
    all_series = [y, *regressors]
    if all(isinstance(s, TimeSeries) for s in all_series):
        start = max(s.start for s in all_series)
        end = min(s.end for s in all_series)
        if end - start < 0:
            raise EmptyIntersection("series share no common sample")
        windows = [s.window(start, end) for s in all_series]
        named = [series_values(w) for w in windows]
    else:
        named = [series_values(s) for s in all_series]
        lengths = {len(v) for _, v in named}
        if len(lengths) > 1:
            raise ShapeMismatch(
                f"plain-array inputs must share one length, got {sorted(lengths)}"
            )
    return named[0], named[1:]


def engle_granger(
    y,
    regressors,
    spec: str = "constant",
    residual_lags: int | None = None,
) -> CointegrationReport:
    """Residual-based cointegration test of ``y`` against ``regressors``.

    ``residual_lags`` fixes the augmentation order of the residual
    Dickey-Fuller regression; when omitted the Schwarz criterion selects
    it. The reported p-value is for the null of no cointegration.
    """
    check_spec(spec)
    regressors = list(regressors)
    if not regressors:
        raise ShapeMismatch("at least one regressor series is required")
    (name, yv), xs = _common_window(y, regressors)
    t = len(yv)
    if t < 20:
        raise TooShort(f"{name}: {t} common observations < 20")
    design = np.column_stack(_det_columns(t, spec) + [v for _, v in xs])
    singular = np.linalg.svd(design, compute_uv=False)
    if singular[-1] <= 1e-10 * singular[0]:
        raise CollinearRegressors(
            "levels regression design is singular; drop redundant regressors"
        )
    coef, *_ = np.linalg.lstsq(design, yv, rcond=None)
    resid = yv - design @ coef

    if residual_lags is None:
        cap = max(0, min(default_max_lags(t), (t - 8) // 2))
        k = schwarz_lag_order(resid, "none", cap)
    else:
        if residual_lags < 0:
            raise ShapeMismatch("residual_lags must be non-negative")
        k = residual_lags
    tau, _, _, _, n, _ = df_regression(resid, "none", k)
    p = mackinnon_pvalue(tau, 1 + len(xs), spec, sample_size=n)
    return CointegrationReport(dependent=name, tau=tau, p_value=p, residual_lags=k)
