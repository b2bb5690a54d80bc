"""Structure checks on the dependency-free SVG writer."""

from __future__ import annotations

import xml.etree.ElementTree as ET

import numpy as np
import pytest

from regimevar.errors import InvalidParameter
from regimevar.svg import small_multiples


def render(panels, **kwargs) -> ET.Element:
    text = small_multiples("A Title", panels, **kwargs)
    return ET.fromstring(text)


def count(root: ET.Element, tag: str) -> int:
    return len(root.findall(f".//{{http://www.w3.org/2000/svg}}{tag}"))


def test_one_polyline_per_panel_and_grid_layout():
    panels = [(f"p{i}", np.sin(np.linspace(0, 3, 40)) + i) for i in range(6)]
    root = render(panels, columns=4)
    assert count(root, "polyline") == 6
    width, height = int(root.get("width")), int(root.get("height"))
    assert width > 4 * 200 and height > 2 * 100  # 4 columns, 2 rows plus margins


def test_title_and_subtitles_present():
    root = render([("alpha beta", [1.0, 2.0, 1.5])])
    texts = [t.text for t in root.iter("{http://www.w3.org/2000/svg}text")]
    assert "A Title" in texts
    assert "alpha beta" in texts


def test_zero_line_only_when_sign_changes():
    crossing = render([("x", [-1.0, 2.0])])
    positive = render([("x", [1.0, 2.0])])
    assert count(crossing, "line") == count(positive, "line") + 1


def test_flat_series_is_padded_not_degenerate():
    root = render([("flat", [3.0, 3.0, 3.0])])
    polyline = root.find(".//{http://www.w3.org/2000/svg}polyline")
    ys = {float(pt.split(",")[1]) for pt in polyline.get("points").split()}
    assert len(ys) == 1  # drawn flat, inside the axis box
    assert count(root, "rect") >= 2  # background plus axis frame


def test_escapes_markup_in_labels():
    text = small_multiples("a < b & c", [("s<t>", [0.0, 1.0])])
    assert "a &lt; b &amp; c" in text
    ET.fromstring(text)  # stays well-formed


def test_validation_errors():
    with pytest.raises(InvalidParameter):
        small_multiples("t", [])
    with pytest.raises(InvalidParameter):
        small_multiples("t", [("p", [])])
    with pytest.raises(InvalidParameter):
        small_multiples("t", [("p", [np.nan, 1.0])])


def test_columns_are_clamped_to_panel_count():
    one = render([("p", [1.0, 2.0])], columns=9)
    assert int(one.get("width")) == int(render([("p", [1.0, 2.0])], columns=1).get("width"))


def test_deterministic_output():
    panels = [("a", [0.1, 0.2, 0.15]), ("b", [5.0, -5.0, 2.0])]
    assert small_multiples("t", panels) == small_multiples("t", panels)
