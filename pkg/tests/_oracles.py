"""Brute-force reference computations for the switching-VAR tests.

Everything here is deliberately independent of the package's recursions:
densities come from scipy, path probabilities from explicit enumeration.
"""

from __future__ import annotations

import itertools

import numpy as np
from scipy.special import logsumexp
from scipy.stats import multivariate_normal

from regimevar.msvar import MsVarParams, MsVarSpec, ergodic_distribution


def conditional_means(data, exog, params: MsVarParams, spec: MsVarSpec) -> np.ndarray:
    """Regime-conditional means for each effective observation: (T_eff, R, n)."""
    l = spec.n_lags
    t_eff = data.shape[0] - l
    r = spec.n_regimes
    means = np.empty((t_eff, r, spec.n_vars))
    for t in range(t_eff):
        base = np.zeros(spec.n_vars)
        for lag in range(l):
            base = base + params.lag_matrices[lag] @ data[l + t - 1 - lag]
        for s in range(r):
            means[t, s] = base + params.intercepts[s]
            if spec.has_exog_dummy:
                means[t, s] = means[t, s] + params.exog_loadings[s] * exog[l + t]
    return means


def enumerate_paths(data, exog, params: MsVarParams, spec: MsVarSpec):
    """Exact loglik and smoothed marginals by summing over every regime path."""
    l, r = spec.n_lags, spec.n_regimes
    y = data[l:]
    t_eff = y.shape[0]
    means = conditional_means(data, exog, params, spec)
    log_density = np.empty((t_eff, r))
    for s in range(r):
        dist_cov = params.covariances[s]
        for t in range(t_eff):
            log_density[t, s] = multivariate_normal.logpdf(y[t], means[t, s], dist_cov)

    p = params.transition_matrix()
    log_p = np.log(p)
    log_pi = np.log(ergodic_distribution(p))

    paths = np.array(list(itertools.product(range(r), repeat=t_eff)))
    weights = log_pi[paths[:, 0]]
    for t in range(1, t_eff):
        weights = weights + log_p[paths[:, t - 1], paths[:, t]]
    for t in range(t_eff):
        weights = weights + log_density[t, paths[:, t]]

    loglik = float(logsumexp(weights))
    post = np.exp(weights - loglik)
    marginals = np.zeros((t_eff, r))
    for t in range(t_eff):
        for s in range(r):
            marginals[t, s] = post[paths[:, t] == s].sum()
    return loglik, marginals
