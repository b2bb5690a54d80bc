"""Hamilton filter and Kim smoother for the switching VAR.

The filter consumes a raw data matrix of T rows; the first ``n_lags``
rows serve only as presample lags, so all probability outputs have
``T_eff = T - n_lags`` rows, aligned with data rows ``n_lags .. T-1``.

Per-observation likelihoods are accumulated in log space: at each step
the regime log-densities are rescaled by their maximum before
exponentiation, so only genuinely zero-probability observations (all
regime densities underflowing simultaneously) raise NumericalUnderflow —
nothing is silently clamped.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import solve_triangular

from ..errors import InvalidParameter, NumericalUnderflow, ShapeMismatch, SingularCovariance
from .model import MsVarParams, ergodic_distribution

_LOG2PI = float(np.log(2.0 * np.pi))


@dataclass(frozen=True, eq=False)
class FilterOutput:
    """Filtered/predicted/smoothed regime probabilities and the log-likelihood.

    All three matrices are (T_eff, n_regimes) with rows summing to one;
    ``predicted[t]`` is the one-step-ahead distribution before seeing
    observation t (row 0 holds the initial distribution).
    """

    filtered: np.ndarray = field(repr=False)
    smoothed: np.ndarray = field(repr=False)
    predicted: np.ndarray = field(repr=False)
    loglik: float
    per_obs_loglik: np.ndarray = field(repr=False)

    def __post_init__(self):
        for name in ("filtered", "smoothed", "predicted", "per_obs_loglik"):
            arr = np.asarray(getattr(self, name), dtype=float)
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    @property
    def n_obs(self) -> int:
        return self.filtered.shape[0]

    @property
    def n_regimes(self) -> int:
        return self.filtered.shape[1]


def design_matrices(data, exog, n_lags: int):
    """Split raw data into effective observations and stacked lag regressors.

    Returns (y, z, x): y is (T_eff, n); z is (T_eff, n_lags*n) with the
    lag-1 block first; x is the exogenous vector aligned to y (zeros when
    exog is None).
    """
    data = np.asarray(data, dtype=float)
    if data.ndim != 2:
        raise ShapeMismatch("data must be a T x n_vars matrix")
    t, n = data.shape
    if t <= n_lags:
        raise ShapeMismatch(f"need more than n_lags={n_lags} rows, got {t}")
    if not np.isfinite(data).all():
        raise InvalidParameter("data contains non-finite entries")
    te = t - n_lags
    y = data[n_lags:]
    z = np.empty((te, n_lags * n))
    for l in range(1, n_lags + 1):
        z[:, (l - 1) * n : l * n] = data[n_lags - l : t - l]
    if exog is None:
        x = np.zeros(te)
    else:
        x = np.asarray(exog, dtype=float)
        if x.shape != (t,):
            raise ShapeMismatch(f"exog must be a vector of length {t}")
        if not np.isfinite(x).all():
            raise InvalidParameter("exog contains non-finite entries")
        x = x[n_lags:]
    return y, z, x


def log_density_matrix(y, z, x, params: MsVarParams) -> np.ndarray:
    """Gaussian log-density of each observation under each regime: (T_eff, R)."""
    te, n = y.shape
    r = params.n_regimes
    amat = params.lag_matrices.transpose(1, 0, 2).reshape(n, -1)
    base = y - z @ amat.T
    out = np.empty((te, r))
    for s in range(r):
        try:
            chol = np.linalg.cholesky(params.covariances[s])
        except np.linalg.LinAlgError:
            raise SingularCovariance(f"regime {s} covariance is singular") from None
        resid = base - params.intercepts[s] - np.outer(x, params.exog_loadings[s])
        w = solve_triangular(chol, resid.T, lower=True)
        logdet = 2.0 * np.log(np.diag(chol)).sum()
        out[:, s] = -0.5 * (n * _LOG2PI + logdet + (w * w).sum(axis=0))
    return out


def conditional_density(y_t, y_lag, exog_t: float, regime: int, params: MsVarParams) -> float:
    """Log-density of one observation given a regime (0-based index).

    ``y_lag`` stacks the lagged observations with the most recent first,
    matching the lag-block layout of ``params.lag_matrices``.
    """
    y_t = np.asarray(y_t, dtype=float).reshape(1, -1)
    z = np.asarray(y_lag, dtype=float).reshape(1, -1)
    n = params.n_vars
    if y_t.shape[1] != n or z.shape[1] != params.n_lags * n:
        raise ShapeMismatch("y_t / y_lag shapes inconsistent with params")
    if not 0 <= regime < params.n_regimes:
        raise InvalidParameter(f"regime index {regime} out of range")
    x = np.array([float(exog_t)])
    ld = log_density_matrix(y_t, z, x, params)
    return float(ld[0, regime])


def _initial_distribution(initial_dist, p: np.ndarray) -> np.ndarray:
    r = p.shape[0]
    if isinstance(initial_dist, str):
        if initial_dist == "ergodic":
            return ergodic_distribution(p)
        if initial_dist == "uniform":
            return np.full(r, 1.0 / r)
        raise InvalidParameter(f"unknown initial_dist {initial_dist!r}")
    rho = np.asarray(initial_dist, dtype=float)
    if rho.shape != (r,) or rho.min() < 0 or abs(rho.sum() - 1.0) > 1e-8:
        raise InvalidParameter("given initial distribution must be a probability vector")
    return rho / rho.sum()


def _forward(logdens: np.ndarray, p: np.ndarray, rho: np.ndarray):
    te, r = logdens.shape
    filtered = np.empty((te, r))
    predicted = np.empty((te, r))
    per_obs = np.empty(te)
    pred = rho
    for t in range(te):
        predicted[t] = pred
        m = logdens[t].max()
        if not np.isfinite(m):
            raise NumericalUnderflow(f"all regime densities underflow at observation {t}")
        a = pred * np.exp(logdens[t] - m)
        c = a.sum()
        if c <= 0.0 or not np.isfinite(c):
            raise NumericalUnderflow(f"zero predictive likelihood at observation {t}")
        per_obs[t] = m + np.log(c)
        f = a / c
        filtered[t] = f
        pred = f @ p
    return filtered, predicted, per_obs


def _smooth(filtered: np.ndarray, predicted: np.ndarray, p: np.ndarray) -> np.ndarray:
    te, r = filtered.shape
    smoothed = np.empty((te, r))
    smoothed[-1] = filtered[-1]
    for t in range(te - 2, -1, -1):
        pred = predicted[t + 1]
        ratio = np.where(pred > 0.0, smoothed[t + 1] / np.where(pred > 0.0, pred, 1.0), 0.0)
        row = filtered[t] * (p @ ratio)
        smoothed[t] = row / row.sum()
    return smoothed


def hamilton_filter(data, exog, params: MsVarParams, initial_dist="ergodic") -> FilterOutput:
    """Forward predict-update recursion plus the backward smoothing pass."""
    y, z, x = design_matrices(data, exog, params.n_lags)
    logdens = log_density_matrix(y, z, x, params)
    p = params.transition_matrix()
    rho = _initial_distribution(initial_dist, p)
    filtered, predicted, per_obs = _forward(logdens, p, rho)
    smoothed = _smooth(filtered, predicted, p)
    return FilterOutput(
        filtered=filtered,
        smoothed=smoothed,
        predicted=predicted,
        loglik=float(per_obs.sum()),
        per_obs_loglik=per_obs,
    )


def kim_smoother(filter_output: FilterOutput, transition) -> np.ndarray:
    """Backward recursion for P(S_t | all data); last row = last filtered row."""
    p = np.asarray(transition, dtype=float)
    return _smooth(np.asarray(filter_output.filtered), np.asarray(filter_output.predicted), p)
