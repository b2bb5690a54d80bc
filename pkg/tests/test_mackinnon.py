"""Response-surface p-values against published anchor points."""

from __future__ import annotations

import numpy as np
import pytest
from statsmodels.tsa.adfvalues import mackinnonp

from regimevar.errors import DimensionOutOfRange, InvalidParameter
from regimevar.stattests import mackinnon_pvalue
from regimevar.stattests.mackinnon import MAX_DIMENSION


def test_extreme_left_tail_anchor():
    # A tau of -9.14 on an 8-series residual test over a short sample is
    # far beyond every tabulated node; the published table rounds the
    # p-value to 0.0008.
    p = mackinnon_pvalue(-9.14, 8, "constant", sample_size=22)
    assert p <= 0.001
    assert p == pytest.approx(0.0008, abs=5e-4)


def test_tau_zero_sits_in_the_upper_tail():
    # At tau = 0 the null is not even mildly challenged. MacKinnon's
    # published asymptotic quantiles put p(0) around 0.958 for the
    # dimension-1 constant case and above 0.99 once extra regressors
    # enter; the simulated surfaces must reproduce that shape.
    base = mackinnon_pvalue(0.0, 1, "constant", sample_size=10_000)
    assert base == pytest.approx(0.9585, abs=0.01)
    for dim in range(2, MAX_DIMENSION + 1):
        assert mackinnon_pvalue(0.0, dim, "constant", sample_size=10_000) >= 0.97
    for dim in range(1, MAX_DIMENSION + 1):
        assert mackinnon_pvalue(0.0, dim, "constant_trend", sample_size=10_000) >= 0.97


@pytest.mark.parametrize("spec", ["none", "constant", "constant_trend"])
def test_against_statsmodels_asymptotic_surface(spec):
    # statsmodels ships MacKinnon's published asymptotic response
    # surfaces for dimensions 1..12 except that 'none' only covers the
    # univariate test. Agreement is limited by our simulation noise and
    # their polynomial approximation.
    dims = [1] if spec == "none" else list(range(1, 4))
    smap = {"none": "n", "constant": "c", "constant_trend": "ct"}
    for dim in dims:
        for tau in (-4.5, -3.5, -2.5, -1.5, -0.5):
            mine = mackinnon_pvalue(tau, dim, spec, sample_size=10_000)
            ref = float(mackinnonp(tau, regression=smap[spec], N=dim))
            assert mine == pytest.approx(ref, abs=0.015), (spec, dim, tau)


def test_p_is_strictly_monotone_in_tau():
    taus = np.linspace(-12.0, 6.0, 181)
    for spec in ("none", "constant", "constant_trend"):
        for dim in (1, 4, 8):
            if spec == "none" and dim > 1:
                continue
            ps = [mackinnon_pvalue(t, dim, spec, sample_size=100) for t in taus]
            assert all(0.0 <= p <= 1.0 for p in ps)
            # Strict until the normal CDF saturates at the float
            # boundaries (exact 0 or 1); never decreasing anywhere.
            assert all(
                b > a or (b >= a and (b == 1.0 or a == 0.0))
                for a, b in zip(ps, ps[1:])
            )


def test_finite_sample_adjustment_moves_the_quantiles():
    # Small samples push the constant-case critical values leftward, so
    # the same tau is less significant at n = 25 than asymptotically.
    p_small = mackinnon_pvalue(-2.9, 1, "constant", sample_size=25)
    p_large = mackinnon_pvalue(-2.9, 1, "constant", sample_size=100_000)
    assert p_small > p_large


def test_validation():
    with pytest.raises(DimensionOutOfRange):
        mackinnon_pvalue(-2.0, 0, "constant")
    with pytest.raises(DimensionOutOfRange):
        mackinnon_pvalue(-2.0, MAX_DIMENSION + 1, "constant")
    with pytest.raises(InvalidParameter):
        mackinnon_pvalue(-2.0, 1, "with_bells")
