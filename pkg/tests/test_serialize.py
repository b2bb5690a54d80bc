"""Float rendering and the deterministic JSON writer."""

from __future__ import annotations

import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from regimevar.errors import InvalidParameter
from regimevar.serialize import format_sig, to_json


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_format_sig_round_trips_every_double(x):
    assert float(format_sig(x)) == x


def test_format_sig_examples():
    assert format_sig(0.1) == "0.10000000000000001"
    assert format_sig(1.0) == "1"  # 'g' strips trailing zeros; round trip stays exact
    assert format_sig(-2.5e-300) == "-2.5e-300"
    assert format_sig(2.0 / 3.0) == "0.66666666666666663"
    assert format_sig(3.25, digits=4) == "3.25"


def test_format_sig_rejects_non_finite():
    for bad in (math.nan, math.inf, -math.inf):
        with pytest.raises(InvalidParameter):
            format_sig(bad)


def test_to_json_matches_stdlib_layout_for_exact_types():
    payload = {
        "b": [1, 2, {"x": None, "y": True}],
        "a": "quote\"and\nnewline",
        "c": {"nested": [False, "s"]},
    }
    assert to_json(payload) == json.dumps(payload, indent=2, sort_keys=True)


def test_to_json_renders_floats_at_17_significant_digits():
    text = to_json({"v": 0.1})
    assert '"v": 0.10000000000000001' in text
    assert json.loads(text)["v"] == 0.1


def test_to_json_numpy_types():
    payload = {
        "arr": np.array([[1.5, 2.5]]),
        "i": np.int64(7),
        "f": np.float64(0.25),
        "flag": np.bool_(True),
    }
    decoded = json.loads(to_json(payload))
    assert decoded == {"arr": [[1.5, 2.5]], "i": 7, "f": 0.25, "flag": True}


def test_to_json_sorts_and_stringifies_keys():
    assert json.loads(to_json({2: "b", 1: "a"})) == {"1": "a", "2": "b"}


def test_to_json_rejects_nan_and_unknown_types():
    with pytest.raises(InvalidParameter):
        to_json({"v": float("nan")})
    with pytest.raises(InvalidParameter):
        to_json({"v": object()})


@given(
    st.recursive(
        st.one_of(
            st.none(),
            st.booleans(),
            st.integers(-(2**50), 2**50),
            st.floats(allow_nan=False, allow_infinity=False),
            st.text(max_size=20),
        ),
        lambda children: st.one_of(
            st.lists(children, max_size=4),
            st.dictionaries(st.text(max_size=8), children, max_size=4),
        ),
        max_leaves=12,
    )
)
def test_to_json_is_loadable_and_value_preserving(payload):
    decoded = json.loads(to_json(payload))

    def check(a, b):
        if isinstance(a, dict):
            assert sorted(a) == sorted(b)
            for k in a:
                check(a[k], b[k])
        elif isinstance(a, list):
            assert len(a) == len(b)
            for x, y in zip(a, b):
                check(x, y)
        elif isinstance(a, bool) or a is None or isinstance(a, str):
            assert a == b and type(a) is type(b)
        else:
            # Whole floats render without a decimal point ("0", not "0.0"),
            # so they load back as ints; the value is still exact.
            assert float(a) == float(b)

    check(payload, decoded)
