"""Key=value config parsing, overrides and typed getters."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from regimevar.config import Config
from regimevar.errors import ConfigError

SAMPLE = """
# pipeline settings
input = data.csv
out_dir = out
seed = 42
threads=4
allow = yes
ratio = 0.5
names = a, b , c,,
empty_list =
"""


def test_from_text_parses_and_strips():
    config = Config.from_text(SAMPLE)
    assert config.get_str("input") == "data.csv"
    assert config.get_int("seed") == 42
    assert config.get_int("threads") == 4
    assert config.get_bool("allow") is True
    assert config.get_float("ratio") == 0.5
    assert config.get_list("names") == ["a", "b", "c"]
    assert config.get_list("empty_list") == []


def test_later_assignments_win():
    config = Config.from_text("x = 1\nx = 2\n")
    assert config.get_int("x") == 2


def test_parse_errors_name_the_line():
    with pytest.raises(ConfigError, match="line 2"):
        Config.from_text("a = 1\nnot a pair\n")
    with pytest.raises(ConfigError, match="empty key"):
        Config.from_text("= 3\n")


def test_missing_key_behaviour():
    config = Config.from_text("a = 1\n")
    assert config.has("a") and not config.has("b")
    assert config.get_int("b", 7) == 7
    assert config.get_str("b", None) is None
    with pytest.raises(ConfigError, match="missing required config key"):
        config.get_str("b")


def test_type_errors_name_key_and_value():
    config = Config.from_text("n = soon\nflag = maybe\n")
    with pytest.raises(ConfigError, match="n.*soon"):
        config.get_int("n")
    with pytest.raises(ConfigError, match="flag.*maybe"):
        config.get_bool("flag")
    with pytest.raises(ConfigError, match="n.*soon"):
        config.get_float("n")


def test_bool_spellings():
    config = Config.from_text("a=true\nb=Yes\nc=ON\nd=1\ne=false\nf=no\ng=off\nh=0\n")
    for key in "abcd":
        assert config.get_bool(key) is True
    for key in "efgh":
        assert config.get_bool(key) is False


def test_with_overrides_skips_none_and_renders_bools():
    base = Config.from_text("a = 1\nb = keep\n")
    merged = base.with_overrides({"a": "2", "c": True, "d": 1.5, "skip": None})
    assert merged.get_int("a") == 2
    assert merged.get_str("b") == "keep"
    assert merged.get_bool("c") is True
    assert merged.get_float("d") == 1.5
    assert not merged.has("skip")
    assert base.get_int("a") == 1  # original untouched


def test_load_missing_file_is_config_error(tmp_path):
    with pytest.raises(ConfigError):
        Config.load(tmp_path / "nope.cfg")
    path = tmp_path / "ok.cfg"
    path.write_text("k = v\n")
    assert Config.load(path).get_str("k") == "v"


@given(
    st.dictionaries(
        st.text(
            alphabet=st.characters(whitelist_categories=("Ll", "Lu", "Nd"), whitelist_characters="_"),
            min_size=1,
            max_size=10,
        ),
        st.integers(-1000, 1000),
        max_size=6,
    )
)
def test_round_trip_through_text(values):
    text = "\n".join(f"{k} = {v}" for k, v in values.items())
    config = Config.from_text(text)
    for key, value in values.items():
        assert config.get_int(key) == value
