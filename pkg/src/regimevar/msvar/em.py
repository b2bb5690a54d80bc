"""One expectation-maximization step for the switching VAR.

The step is an ECM variant with a guaranteed-ascent property:

1. E-step: smoothed regime probabilities and pairwise transition counts
   from the current parameters.
2. CM-step (coefficients): the regime-specific blocks (intercepts and
   exogenous loadings, where switching) and the common block (lag
   matrices plus any tied intercept/loading) are updated JOINTLY by
   exact weighted GLS — the cross-regime coupling through the different
   error covariances is solved via a Kronecker system rather than
   iterated.
3. CM-step (covariances): weighted residual moments per regime (or
   pooled when covariances are tied).
4. Transition matrix: the classical expected-count update is only a
   candidate here, because the initial distribution is tied to the
   transition matrix through its ergodic distribution and the count
   update ignores that term. The candidate is accepted only if it does
   not lower the actual log-likelihood; otherwise the old matrix is
   kept. Steps 1-3 are exact conditional maximizations, so the full
   step can never decrease the log-likelihood (beyond float noise).
"""

from __future__ import annotations

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from ..errors import DegenerateRegime, SingularCovariance
from .filter import _forward, _smooth, design_matrices, log_density_matrix
from .model import (
    MsVarParams,
    MsVarSpec,
    SwitchingFlags,
    ergodic_distribution,
    matrix_to_logits,
    transition_matrix,
)

_MIN_REGIME_WEIGHT = 1e-6
_RIDGE_SCALE = 1e-8


def _default_spec(params: MsVarParams, exog) -> MsVarSpec:
    return MsVarSpec(
        n_vars=params.n_vars,
        n_regimes=params.n_regimes,
        n_lags=params.n_lags,
        has_exog_dummy=exog is not None,
        switching=SwitchingFlags(),
    )


def _mstep_designs(z: np.ndarray, x: np.ndarray, spec: MsVarSpec):
    """Regime-specific columns u and common columns zf, plus column roles."""
    te = z.shape[0]
    u_cols = []
    if spec.switching.intercept:
        u_cols.append(np.ones(te))
    if spec.has_exog_dummy and spec.switching.exog_loading:
        u_cols.append(x)
    common_cols = [z]
    tied_intercept_col = tied_exog_col = None
    m = z.shape[1]
    if not spec.switching.intercept:
        common_cols.append(np.ones((te, 1)))
        tied_intercept_col = m
        m += 1
    if spec.has_exog_dummy and not spec.switching.exog_loading:
        common_cols.append(x[:, None])
        tied_exog_col = m
        m += 1
    u = np.column_stack(u_cols) if u_cols else np.empty((te, 0))
    zf = np.concatenate(common_cols, axis=1)
    return u, zf, tied_intercept_col, tied_exog_col


def _positive_definite(sigma: np.ndarray) -> np.ndarray:
    """Symmetrize and, when needed, ridge a covariance toward feasibility."""
    sigma = 0.5 * (sigma + sigma.T)
    try:
        np.linalg.cholesky(sigma)
        return sigma
    except np.linalg.LinAlgError:
        pass
    n = sigma.shape[0]
    ridge = _RIDGE_SCALE * max(np.trace(sigma) / n, 1.0)
    sigma = sigma + ridge * np.eye(n)
    try:
        np.linalg.cholesky(sigma)
    except np.linalg.LinAlgError:
        raise SingularCovariance("M-step covariance is singular even after ridging") from None
    return sigma


def _coefficient_update(y, u, zf, weights, covariances):
    """Joint GLS update of (theta_s, G) given per-regime covariances.

    Solves sum_s Omega_s G F_s = sum_s Omega_s H_s for the common block G
    (row-major vec / Kronecker form), then backs out each regime block
    theta_s = (P_s - G Q_s) S_s^{-1}.
    """
    te, n = y.shape
    r = weights.shape[1]
    ku = u.shape[1]
    m = zf.shape[1]
    omegas = []
    svecs = []
    kron_lhs = np.zeros((n * m, n * m))
    rhs = np.zeros((n, m))
    for s in range(r):
        w = weights[:, s]
        omega = cho_solve(cho_factor(covariances[s], lower=True), np.eye(n))
        omegas.append(omega)
        wz = zf * w[:, None]
        e_s = zf.T @ wz
        c_s = y.T @ wz
        if ku:
            wu = u * w[:, None]
            s_s = u.T @ wu
            p_s = y.T @ wu
            q_s = zf.T @ wu
            try:
                s_inv = np.linalg.solve(s_s, np.eye(ku))
            except np.linalg.LinAlgError:
                raise DegenerateRegime(
                    f"regime {s + 1} carries no information on one of its "
                    "switching columns (singular weighted design)"
                ) from None
            f_s = e_s - q_s @ s_inv @ q_s.T
            h_s = c_s - p_s @ s_inv @ q_s.T
            svecs.append((s_inv, p_s, q_s))
        else:
            f_s, h_s = e_s, c_s
            svecs.append(None)
        kron_lhs += np.kron(omega, f_s.T)
        rhs += omega @ h_s
    try:
        g = np.linalg.solve(kron_lhs, rhs.reshape(-1)).reshape(n, m)
    except np.linalg.LinAlgError:
        raise DegenerateRegime("common coefficient design is singular") from None
    thetas = np.zeros((r, n, ku))
    if ku:
        for s in range(r):
            s_inv, p_s, q_s = svecs[s]
            thetas[s] = (p_s - g @ q_s) @ s_inv
    return g, thetas


def _rebuild_params(g, thetas, spec, tied_i, tied_x, covariances, logits):
    n, r, l = spec.n_vars, spec.n_regimes, spec.n_lags
    lag_matrices = np.stack([g[:, i * n : (i + 1) * n] for i in range(l)])
    intercepts = np.zeros((r, n))
    loadings = np.zeros((r, n))
    col = 0
    if spec.switching.intercept:
        intercepts = thetas[:, :, col]
        col += 1
    elif tied_i is not None:
        intercepts = np.tile(g[:, tied_i], (r, 1))
    if spec.has_exog_dummy:
        if spec.switching.exog_loading:
            loadings = thetas[:, :, col]
        elif tied_x is not None:
            loadings = np.tile(g[:, tied_x], (r, 1))
    return MsVarParams(
        intercepts=intercepts,
        exog_loadings=loadings,
        lag_matrices=lag_matrices,
        covariances=covariances,
        transition_logits=logits,
    )


def _loglik_designs(y, z, x, params: MsVarParams, want_smooth: bool = False):
    logdens = log_density_matrix(y, z, x, params)
    p = params.transition_matrix()
    rho = ergodic_distribution(p)
    filtered, predicted, per_obs = _forward(logdens, p, rho)
    smoothed = _smooth(filtered, predicted, p) if want_smooth else None
    return float(per_obs.sum()), filtered, predicted, smoothed


def em_step_designs(y, z, x, params: MsVarParams, spec: MsVarSpec):
    """One EM step on prebuilt designs; returns (params, loglik of result)."""
    r = params.n_regimes
    te = y.shape[0]
    p_old = params.transition_matrix()
    loglik_old, filtered, predicted, smoothed = _loglik_designs(y, z, x, params, want_smooth=True)

    weights = smoothed
    totals = weights.sum(axis=0)
    if totals.min() < _MIN_REGIME_WEIGHT:
        s = int(totals.argmin())
        raise DegenerateRegime(f"regime {s} has smoothed weight {totals[s]:.2e}")

    u, zf, tied_i, tied_x = _mstep_designs(z, x, spec)
    g, thetas = _coefficient_update(y, u, zf, weights, params.covariances)

    base = y - zf @ g.T
    covs = np.empty((r, y.shape[1], y.shape[1]))
    if spec.switching.covariance:
        for s in range(r):
            resid = base - u @ thetas[s].T if u.shape[1] else base
            covs[s] = _positive_definite((resid * weights[:, s : s + 1]).T @ resid / totals[s])
    else:
        pooled = np.zeros((y.shape[1], y.shape[1]))
        for s in range(r):
            resid = base - u @ thetas[s].T if u.shape[1] else base
            pooled += (resid * weights[:, s : s + 1]).T @ resid
        pooled = _positive_definite(pooled / te)
        covs[:] = pooled

    params_a = _rebuild_params(g, thetas, spec, tied_i, tied_x, covs, params.transition_logits)
    loglik_a, *_ = _loglik_designs(y, z, x, params_a)
    if r == 1 or te < 2:
        return params_a, loglik_a

    # Expected-transition-count candidate for P, accepted only on improvement.
    pred = predicted[1:]
    ratio = np.where(pred > 0.0, smoothed[1:] / np.where(pred > 0.0, pred, 1.0), 0.0)
    xi = p_old * (filtered[:-1].T @ ratio)
    denom = xi.sum(axis=1, keepdims=True)
    p_cand = np.where(denom > 0.0, xi / np.where(denom > 0.0, denom, 1.0), p_old)
    params_b = _rebuild_params(g, thetas, spec, tied_i, tied_x, covs, matrix_to_logits(p_cand))
    loglik_b, *_ = _loglik_designs(y, z, x, params_b)
    if loglik_b > loglik_a:
        return params_b, loglik_b
    return params_a, loglik_a


def em_step(data, exog, params: MsVarParams, spec: MsVarSpec | None = None) -> MsVarParams:
    """One guaranteed-ascent EM update of all parameter blocks.

    ``spec`` defaults to the standard switching structure (intercepts,
    loadings and covariances regime-dependent, lags common) with an
    exogenous dummy iff ``exog`` is given.
    """
    if spec is None:
        spec = _default_spec(params, exog)
    spec.require_estimable()
    y, z, x = design_matrices(data, exog, params.n_lags)
    new_params, _ = em_step_designs(y, z, x, params, spec)
    return new_params
