"""Panel unit-root tests: LLC, Breitung, IPS and Fisher combination."""

from __future__ import annotations

import math

import numpy as np
import pytest
from scipy.special import chdtrc

from regimevar.data_model import PanelDataset, Period, TimeSeries
from regimevar.errors import InvalidP, InvalidParameter, TooFewEntities
from regimevar.stattests import (
    breitung_test,
    fisher_combine,
    ips_test,
    llc_test,
)


def panel_of(values: dict[str, np.ndarray]) -> PanelDataset:
    grid = {(e, "X"): TimeSeries("X", Period(2000, 1), v) for e, v in values.items()}
    return PanelDataset(entities=tuple(values), variables=("X",), grid=grid)


def random_walk_panel(n: int, t: int, seed: int) -> PanelDataset:
    rng = np.random.default_rng(seed)
    return panel_of({f"E{i}": rng.standard_normal(t).cumsum() for i in range(n)})


def stationary_panel(n: int, t: int, seed: int, rho: float = 0.4) -> PanelDataset:
    rng = np.random.default_rng(seed)
    values = {}
    for i in range(n):
        x = np.zeros(t)
        for s in range(1, t):
            x[s] = rho * x[s - 1] + rng.standard_normal()
        values[f"E{i}"] = x
    return panel_of(values)


@pytest.mark.parametrize("test", [llc_test, breitung_test, ips_test])
def test_power_against_stationary_panel(test):
    report = test(stationary_panel(6, 120, 0), "X")
    assert report.p_value < 1e-6
    assert report.statistic < 0
    assert report.cross_sections == 6


@pytest.mark.parametrize("test", [llc_test, breitung_test, ips_test])
def test_no_rejection_on_random_walks(test):
    report = test(random_walk_panel(6, 120, 0), "X")
    assert report.p_value > 0.05


@pytest.mark.parametrize("test", [llc_test, breitung_test, ips_test])
def test_deterministic_across_calls(test):
    panel = random_walk_panel(5, 90, 3)
    first, second = test(panel, "X"), test(panel, "X")
    assert first.statistic == second.statistic
    assert first.p_value == second.p_value


def test_llc_reports_pooled_observations():
    report = llc_test(random_walk_panel(4, 100, 1), "X")
    # Each entity loses one observation to differencing plus its ADF lag
    # order; the pooled count is what the published tables print.
    assert 4 * 80 <= report.observations < 4 * 100
    assert report.test_name == "llc"


def test_llc_handles_unbalanced_windows():
    rng = np.random.default_rng(4)
    values = {
        "A": rng.standard_normal(90).cumsum(),
        "B": rng.standard_normal(120).cumsum(),
        "C": rng.standard_normal(150).cumsum(),
    }
    report = llc_test(panel_of(values), "X")
    assert math.isfinite(report.statistic)
    assert report.cross_sections == 3


def test_ips_requires_entity_intercepts():
    with pytest.raises(InvalidParameter, match="intercept"):
        ips_test(random_walk_panel(4, 80, 0), "X", "none")


def test_minimum_entities():
    lone = panel_of({"A": np.random.default_rng(0).standard_normal(60).cumsum()})
    for test in (llc_test, breitung_test, ips_test):
        with pytest.raises(TooFewEntities):
            test(lone, "X")


def test_breitung_is_trend_robust():
    # Heterogeneous linear trends must not masquerade as stationarity.
    rng = np.random.default_rng(8)
    values = {
        f"E{i}": rng.standard_normal(120).cumsum() + (0.2 + 0.1 * i) * np.arange(120)
        for i in range(6)
    }
    report = breitung_test(panel_of(values), "X")
    assert report.p_value > 0.01


def test_fisher_combine_matches_chi_square_formula():
    ps = [0.3, 0.01, 0.72, 0.055]
    report = fisher_combine(ps, test_name="adf_fisher")
    stat = -2.0 * sum(math.log(p) for p in ps)
    assert report.statistic == pytest.approx(stat, rel=1e-15)
    assert report.p_value == pytest.approx(float(chdtrc(8, stat)), rel=1e-12)
    assert report.cross_sections == 4
    assert report.test_name == "adf_fisher"


def test_fisher_combine_paper_scale_fixture():
    # Eight p-values combining to a statistic of 30.9694 on 16 degrees of
    # freedom must land at p = 0.0136 (the published panel-ADF row).
    target = 30.9694
    ps = [math.exp(-target / 16.0)] * 8
    report = fisher_combine(ps)
    assert report.statistic == pytest.approx(target, abs=1e-10)
    assert report.p_value == pytest.approx(0.0136, abs=5e-4)


def test_fisher_combine_domain_errors():
    with pytest.raises(InvalidP):
        fisher_combine([])
    with pytest.raises(InvalidP):
        fisher_combine([0.5, 0.0])
    with pytest.raises(InvalidP):
        fisher_combine([0.5, 1.2])
    assert fisher_combine([1.0, 1.0]).statistic == 0.0
