"""Shared builders for randomized model tests."""

from __future__ import annotations

import numpy as np
import pytest

from regimevar.msvar import MsVarParams, MsVarSpec, SwitchingFlags, matrix_to_logits


def random_spec(
    rng: np.random.Generator,
    n_vars: int | None = None,
    n_regimes: int | None = None,
    n_lags: int | None = None,
    has_exog_dummy: bool | None = None,
    switching: SwitchingFlags | None = None,
) -> MsVarSpec:
    return MsVarSpec(
        n_vars=n_vars if n_vars is not None else int(rng.integers(1, 4)),
        n_regimes=n_regimes if n_regimes is not None else int(rng.integers(1, 4)),
        n_lags=n_lags if n_lags is not None else int(rng.integers(1, 3)),
        has_exog_dummy=bool(rng.integers(0, 2)) if has_exog_dummy is None else has_exog_dummy,
        switching=switching if switching is not None else SwitchingFlags(),
    )


def random_params(spec: MsVarSpec, rng: np.random.Generator, scale: float = 1.0) -> MsVarParams:
    """Draw a stable, well-conditioned parameter point for the spec."""
    r, n, l = spec.n_regimes, spec.n_vars, spec.n_lags
    intercepts = scale * rng.normal(size=(r, n))
    loadings = scale * rng.normal(size=(r, n))
    lags = 0.1 * rng.normal(size=(l, n, n))
    lags[0] += 0.4 * np.eye(n)
    covs = np.empty((r, n, n))
    for s in range(r):
        root = rng.normal(size=(n, n)) / np.sqrt(n)
        covs[s] = root @ root.T + 0.5 * np.eye(n)
    p = rng.uniform(0.2, 1.0, size=(r, r)) + 3.0 * np.eye(r)
    p /= p.sum(axis=1, keepdims=True)
    if not spec.switching.intercept:
        intercepts[:] = intercepts[0]
    if not spec.switching.exog_loading:
        loadings[:] = loadings[0]
    if not spec.switching.covariance:
        covs[:] = covs[0]
    return MsVarParams(
        intercepts=intercepts,
        exog_loadings=loadings,
        lag_matrices=lags,
        covariances=covs,
        transition_logits=matrix_to_logits(p),
    )


def simulate_raw(
    params: MsVarParams,
    spec: MsVarSpec,
    t: int,
    rng: np.random.Generator,
    exog: np.ndarray | None = None,
):
    """Plain simulator kept separate from the package's synthetic lab so the
    lab itself can be tested against it."""
    r, n, l = spec.n_regimes, spec.n_vars, spec.n_lags
    p = params.transition_matrix()
    roots = [np.linalg.cholesky(params.covariances[s]) for s in range(r)]
    if exog is None:
        exog = np.zeros(t)
    state = int(rng.integers(r))
    y = np.zeros((t, n))
    regimes = np.zeros(t, dtype=int)
    for t_now in range(t):
        if t_now:
            state = int(rng.choice(r, p=p[state]))
        regimes[t_now] = state
        mean = params.intercepts[state].copy()
        if spec.has_exog_dummy:
            mean = mean + params.exog_loadings[state] * exog[t_now]
        for lag in range(min(l, t_now)):
            mean = mean + params.lag_matrices[lag] @ y[t_now - 1 - lag]
        y[t_now] = mean + roots[state] @ rng.standard_normal(n)
    return y, regimes


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260814)
