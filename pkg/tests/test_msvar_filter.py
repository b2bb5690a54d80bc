"""Hamilton filter and Kim smoother against exhaustive path enumeration."""

from __future__ import annotations

import math

import numpy as np
import pytest
from scipy.stats import multivariate_normal

from _oracles import enumerate_paths
from conftest import random_params, random_spec, simulate_raw
from regimevar.msvar import (
    FilterOutput,
    MsVarSpec,
    SwitchingFlags,
    conditional_density,
    ergodic_distribution,
    hamilton_filter,
    kim_smoother,
    matrix_to_logits,
    regime_classify,
    transition_matrix,
)


def test_filter_and_smoother_match_enumeration(rng):
    for _ in range(8):
        spec = random_spec(rng, n_vars=2, n_regimes=3, n_lags=1)
        params = random_params(spec, rng)
        exog = rng.integers(0, 2, size=7).astype(float)
        data, _ = simulate_raw(params, spec, 7, rng, exog if spec.has_exog_dummy else None)
        out = hamilton_filter(data, exog if spec.has_exog_dummy else None, params)
        loglik, marginals = enumerate_paths(
            data, exog if spec.has_exog_dummy else None, params, spec
        )
        assert out.loglik == pytest.approx(loglik, abs=1e-8)
        smoothed = kim_smoother(out, params.transition_matrix())
        np.testing.assert_allclose(smoothed, marginals, atol=1e-8)


def test_two_lag_systems_against_enumeration(rng):
    spec = random_spec(rng, n_vars=2, n_regimes=2, n_lags=2, has_exog_dummy=False)
    params = random_params(spec, rng)
    data, _ = simulate_raw(params, spec, 8, rng)
    out = hamilton_filter(data, None, params)
    loglik, marginals = enumerate_paths(data, None, params, spec)
    assert out.loglik == pytest.approx(loglik, abs=1e-8)
    np.testing.assert_allclose(kim_smoother(out, params.transition_matrix()), marginals, atol=1e-8)


def test_single_regime_filter_is_plain_gaussian_likelihood(rng):
    spec = random_spec(rng, n_vars=2, n_regimes=1, n_lags=1, has_exog_dummy=False)
    params = random_params(spec, rng)
    data, _ = simulate_raw(params, spec, 40, rng)
    out = hamilton_filter(data, None, params)
    direct = 0.0
    for t in range(1, 40):
        mean = params.intercepts[0] + params.lag_matrices[0] @ data[t - 1]
        direct += multivariate_normal.logpdf(data[t], mean, params.covariances[0])
    assert out.loglik == pytest.approx(direct, abs=1e-9)
    np.testing.assert_array_equal(out.smoothed, np.ones((39, 1)))


def test_probabilities_are_distributions(rng):
    spec = random_spec(rng, n_vars=3, n_regimes=3, n_lags=1, has_exog_dummy=False)
    params = random_params(spec, rng)
    data, _ = simulate_raw(params, spec, 60, rng)
    out = hamilton_filter(data, None, params)
    for block in (out.filtered, out.predicted, out.smoothed):
        assert block.shape == (59, 3)
        np.testing.assert_allclose(block.sum(axis=1), 1.0, atol=1e-12)
        assert (block >= 0).all()
    total = out.per_obs_loglik.sum()
    assert out.loglik == pytest.approx(total, rel=1e-12)


def test_filter_is_invariant_to_regime_relabelling(rng):
    spec = random_spec(rng, n_vars=2, n_regimes=3, n_lags=1, has_exog_dummy=False)
    params = random_params(spec, rng)
    data, _ = simulate_raw(params, spec, 50, rng)
    base = hamilton_filter(data, None, params)
    perm = [2, 0, 1]
    p = params.transition_matrix()
    shuffled = type(params)(
        intercepts=params.intercepts[perm],
        exog_loadings=params.exog_loadings[perm],
        lag_matrices=params.lag_matrices,
        covariances=params.covariances[perm],
        transition_logits=matrix_to_logits(p[np.ix_(perm, perm)]),
    )
    relabeled = hamilton_filter(data, None, shuffled)
    assert relabeled.loglik == pytest.approx(base.loglik, abs=1e-9)
    np.testing.assert_allclose(relabeled.smoothed[:, perm], base.smoothed, atol=1e-9)


def test_conditional_density_matches_scipy(rng):
    spec = random_spec(rng, n_vars=2, n_regimes=2, n_lags=1, has_exog_dummy=True)
    params = random_params(spec, rng)
    y_t = rng.normal(size=2)
    y_lag = rng.normal(size=2)
    for s in range(2):
        mean = params.intercepts[s] + params.exog_loadings[s] * 1.0 + params.lag_matrices[0] @ y_lag
        expected = multivariate_normal.logpdf(y_t, mean, params.covariances[s])
        assert conditional_density(y_t, y_lag, 1.0, s, params) == pytest.approx(
            expected, abs=1e-10
        )


def test_ergodic_distribution_is_the_stationary_point():
    p = np.array([[0.9, 0.08, 0.02], [0.2, 0.7, 0.1], [0.05, 0.15, 0.8]])
    pi = ergodic_distribution(p)
    np.testing.assert_allclose(pi @ p, pi, atol=1e-12)
    assert pi.sum() == pytest.approx(1.0, abs=1e-12)
    # Cyclic (periodic) chains still have a unique stationary vector.
    cycle = np.array([[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [1.0, 0.0, 0.0]])
    np.testing.assert_allclose(ergodic_distribution(cycle), [1 / 3] * 3, atol=1e-12)


def test_logits_transition_round_trip(rng):
    for _ in range(10):
        logits = rng.normal(scale=2.0, size=(3, 2))
        p = transition_matrix(logits)
        np.testing.assert_allclose(p.sum(axis=1), 1.0, atol=1e-14)
        assert (p > 0).all()
        np.testing.assert_allclose(matrix_to_logits(p), logits, atol=1e-10)


def test_transition_matrix_softmax_reference_column():
    # The last destination is the softmax reference: zero logits give a
    # uniform row, and each logit is the log odds against that column.
    p = transition_matrix(np.zeros((2, 1)))
    np.testing.assert_allclose(p, np.full((2, 2), 0.5), atol=1e-15)
    p = transition_matrix(np.array([[math.log(4.0)]]))
    np.testing.assert_allclose(p, [[0.8, 0.2]], atol=1e-12)


def test_regime_classify_takes_the_smoothed_argmax(rng):
    smoothed = np.array([[0.2, 0.5, 0.3], [0.9, 0.05, 0.05], [0.1, 0.1, 0.8]])
    out = FilterOutput(
        filtered=smoothed,
        smoothed=smoothed,
        predicted=smoothed,
        loglik=0.0,
        per_obs_loglik=np.zeros(3),
    )
    np.testing.assert_array_equal(regime_classify(out), [2, 1, 3])
