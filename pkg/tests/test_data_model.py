"""Periods, series, panels and the long-CSV round trip."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from regimevar.data_model import (
    ANNUAL,
    QUARTERLY,
    PanelDataset,
    Period,
    TimeSeries,
    align,
    difference,
    emit_csv,
    load_csv,
)
from regimevar.errors import (
    DuplicateObservation,
    MissingColumn,
    MixedFrequency,
    MissingVariable,
    NonBinaryDummy,
    OrderTooLarge,
    UnparseablePeriod,
    UnparseableValue,
)

periods = st.one_of(
    st.builds(Period, st.integers(1800, 2200)),
    st.builds(Period, st.integers(1800, 2200), st.integers(1, 4)),
)


@given(periods, st.integers(-200, 200), st.integers(-200, 200))
def test_period_arithmetic_is_a_torsor(p, a, b):
    assert (p + a) + b == p + (a + b)
    assert (p + a) - p == a
    assert p + 0 == p


@given(periods)
def test_period_parse_str_round_trip(p):
    assert Period.parse(str(p)) == p


def test_period_parse_formats():
    assert Period.parse("1995Q3") == Period(1995, 3)
    assert Period.parse("1995") == Period(1995)
    assert Period(1995, 4) + 1 == Period(1996, 1)
    assert Period(1995) + 3 == Period(1998)
    # Period.parse is the low-level primitive (plain ValueError);
    # load_csv wraps failures into UnparseablePeriod with the row number.
    with pytest.raises(ValueError):
        Period.parse("1995Q5")
    with pytest.raises(ValueError):
        Period.parse("browser")


def test_period_frequencies_do_not_mix():
    with pytest.raises(MixedFrequency):
        Period(2000, 1) - Period(2000)
    assert Period(2000).frequency == ANNUAL
    assert Period(2000, 1).frequency == QUARTERLY


def test_window_is_inclusive():
    series = TimeSeries("X", Period(2000, 1), np.arange(8.0))
    cut = series.window(Period(2000, 3), Period(2001, 2))
    assert cut.start == Period(2000, 3)
    np.testing.assert_array_equal(cut.values, [2.0, 3.0, 4.0, 5.0])
    assert cut.end == Period(2001, 2)


def test_period_at_and_end():
    series = TimeSeries("X", Period(1990), np.arange(5.0))
    assert series.period_at(3) == Period(1993)
    assert series.end == Period(1994)


def test_difference_matches_numpy():
    series = TimeSeries("X", Period(2000), np.array([1.0, 4.0, 9.0, 16.0, 25.0]))
    d1 = difference(series, 1)
    np.testing.assert_array_equal(d1.values, np.diff(series.values))
    assert d1.start == Period(2001)
    d2 = difference(series, 2)
    np.testing.assert_array_equal(d2.values, np.diff(series.values, 2))
    assert len(d2) == 3
    with pytest.raises(OrderTooLarge):
        difference(series, 5)


def make_panel() -> PanelDataset:
    grid = {
        ("HR", "GDP"): TimeSeries("GDP", Period(2000), np.array([1.0, 2.0, np.nan, 4.0])),
        ("HR", "HC"): TimeSeries("HC", Period(2001), np.array([5.0, 6.0, 7.0])),
        ("PL", "GDP"): TimeSeries("GDP", Period(2000), np.array([9.0, 8.0, 7.0, 6.0])),
        ("PL", "COVID"): TimeSeries("COVID", Period(2000), np.array([0.0, 0.0, 1.0, 1.0])),
    }
    return PanelDataset(entities=("HR", "PL"), variables=("COVID", "GDP", "HC"), grid=grid)


def test_panel_lookup_and_errors():
    panel = make_panel()
    assert panel.has("HR", "GDP")
    assert not panel.has("PL", "HC")
    assert panel.series("HR", "HC").values[0] == 5.0
    with pytest.raises(MissingVariable, match="PL.*HC"):
        panel.series("PL", "HC")


def test_covid_dummy_validation():
    panel = make_panel()
    dummy = panel.covid_dummy("PL", "COVID")
    np.testing.assert_array_equal(dummy.values, [0.0, 0.0, 1.0, 1.0])
    with pytest.raises(NonBinaryDummy):
        panel.covid_dummy("HR", "GDP")


@pytest.mark.filterwarnings("ignore:entity 'HR'")
def test_align_trims_each_entity_to_its_common_window():
    aligned = align(make_panel())
    # HR: GDP covers 2000-2003, HC covers 2001-2003 -> window 2001-2003.
    for variable in ("GDP", "HC"):
        series = aligned.series("HR", variable)
        assert series.start == Period(2001)
        assert len(series) == 3
    # PL: both series already share 2000-2003; nothing is trimmed.
    assert aligned.series("PL", "GDP").start == Period(2000)
    assert len(aligned.series("PL", "COVID")) == 4


def test_csv_round_trip(tmp_path):
    panel = make_panel()
    path = tmp_path / "panel.csv"
    emit_csv(panel, path)
    loaded = load_csv(path)
    assert loaded.entities == panel.entities
    assert loaded.variables == panel.variables
    for key, series in panel.grid.items():
        other = loaded.grid[key]
        assert other.start == series.start
        np.testing.assert_array_equal(
            np.isnan(other.values), np.isnan(series.values)
        )
        mask = ~np.isnan(series.values)
        np.testing.assert_array_equal(other.values[mask], series.values[mask])


def test_csv_round_trip_preserves_extreme_floats(tmp_path):
    values = np.array([1e-300, -1.2345678901234567e17, 3.0000000000000004, 2**-40])
    panel = PanelDataset(
        entities=("A",),
        variables=("X",),
        grid={("A", "X"): TimeSeries("X", Period(2000), values)},
    )
    path = tmp_path / "x.csv"
    emit_csv(panel, path)
    np.testing.assert_array_equal(load_csv(path).series("A", "X").values, values)


def test_load_csv_schema_and_errors(tmp_path):
    path = tmp_path / "odd.csv"
    path.write_text(
        "country;when;series;reading\nHR;2001;GDP;3.5\nHR;2002;GDP;3.75\n".replace(";", ",")
    )
    schema = {"entity": "country", "period": "when", "variable": "series", "value": "reading"}
    panel = load_csv(path, schema)
    assert panel.series("HR", "GDP").values[1] == 3.75

    bad = tmp_path / "bad.csv"
    bad.write_text("entity,period,value\nHR,2001,1.0\n")
    with pytest.raises(MissingColumn):
        load_csv(bad)

    dup = tmp_path / "dup.csv"
    dup.write_text(
        "entity,period,variable,value\nHR,2001,GDP,1.0\nHR,2001,GDP,2.0\n"
    )
    with pytest.raises(DuplicateObservation):
        load_csv(dup)

    unparseable = tmp_path / "val.csv"
    unparseable.write_text("entity,period,variable,value\nHR,2001,GDP,abc\n")
    with pytest.raises(UnparseableValue):
        load_csv(unparseable)

    badperiod = tmp_path / "per.csv"
    badperiod.write_text("entity,period,variable,value\nHR,2001Q9,GDP,1.0\n")
    with pytest.raises(UnparseablePeriod, match="row 2"):
        load_csv(badperiod)


def test_load_csv_is_order_insensitive(tmp_path):
    forward = tmp_path / "f.csv"
    forward.write_text(
        "entity,period,variable,value\nA,2000,X,1.0\nA,2001,X,2.0\nB,2000,X,3.0\n"
    )
    backward = tmp_path / "b.csv"
    backward.write_text(
        "entity,period,variable,value\nB,2000,X,3.0\nA,2001,X,2.0\nA,2000,X,1.0\n"
    )
    first, second = load_csv(forward), load_csv(backward)
    assert first.entities == second.entities
    for key in first.grid:
        np.testing.assert_array_equal(first.grid[key].values, second.grid[key].values)
