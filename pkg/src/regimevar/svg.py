"""Hand-rolled SVG line charts — figures without a renderer dependency.

The one chart shape the pipeline needs is a small-multiples grid of
line panels (impulse responses: one panel per responding variable for a
given shock). Output is deterministic text with fixed-precision
coordinates, so emitted figures are byte-identical across runs. Data
behind every figure is always also emitted as CSV; the SVG is a
byproduct, not the contract.
"""

from __future__ import annotations

import math
from html import escape

from .errors import InvalidParameter

PANEL_WIDTH = 220
PANEL_HEIGHT = 150
MARGIN = 36
TITLE_BAND = 28

_STYLE = (
    "text{font-family:sans-serif}"
    ".title{font-size:13px;font-weight:bold}"
    ".subtitle{font-size:11px}"
    ".tick{font-size:9px;fill:#444}"
    ".axis{stroke:#222;stroke-width:1;fill:none}"
    ".zero{stroke:#999;stroke-width:0.5;stroke-dasharray:3 2;fill:none}"
    ".line{stroke:#1f77b4;stroke-width:1.5;fill:none}"
)


def _bounds(values) -> tuple[float, float]:
    lo, hi = min(values), max(values)
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise InvalidParameter("chart values must be finite")
    if hi == lo:
        pad = max(abs(hi), 1.0) * 0.1
        return lo - pad, hi + pad
    pad = (hi - lo) * 0.08
    return lo - pad, hi + pad


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _tick_label(value: float) -> str:
    return f"{value:.3g}"


def _panel(x0: float, y0: float, subtitle: str, values) -> list[str]:
    lo, hi = _bounds(values)
    inner_w = PANEL_WIDTH - 46
    inner_h = PANEL_HEIGHT - 40
    left, top = x0 + 38, y0 + 22

    def sx(i: int) -> float:
        span = max(len(values) - 1, 1)
        return left + inner_w * (i / span)

    def sy(v: float) -> float:
        return top + inner_h * (1.0 - (v - lo) / (hi - lo))

    parts = [
        f'<text class="subtitle" x="{_fmt(x0 + PANEL_WIDTH / 2)}" '
        f'y="{_fmt(y0 + 14)}" text-anchor="middle">{escape(subtitle)}</text>',
        f'<rect class="axis" x="{_fmt(left)}" y="{_fmt(top)}" '
        f'width="{inner_w}" height="{inner_h}"/>',
    ]
    if lo < 0.0 < hi:
        zy = _fmt(sy(0.0))
        parts.append(
            f'<line class="zero" x1="{_fmt(left)}" y1="{zy}" '
            f'x2="{_fmt(left + inner_w)}" y2="{zy}"/>'
        )
    for frac, v in ((0.0, hi), (1.0, lo)):
        parts.append(
            f'<text class="tick" x="{_fmt(left - 4)}" y="{_fmt(top + inner_h * frac + 3)}" '
            f'text-anchor="end">{escape(_tick_label(v))}</text>'
        )
    parts.append(
        f'<text class="tick" x="{_fmt(left)}" y="{_fmt(top + inner_h + 12)}" '
        f'text-anchor="middle">0</text>'
    )
    parts.append(
        f'<text class="tick" x="{_fmt(left + inner_w)}" y="{_fmt(top + inner_h + 12)}" '
        f'text-anchor="middle">{len(values) - 1}</text>'
    )
    points = " ".join(f"{_fmt(sx(i))},{_fmt(sy(v))}" for i, v in enumerate(values))
    parts.append(f'<polyline class="line" points="{points}"/>')
    return parts


def small_multiples(title: str, panels, columns: int = 4) -> str:
    """SVG document: a titled grid of line panels.

    ``panels`` is a sequence of (subtitle, values) pairs; values are
    plotted against their index (horizon). ``columns`` caps the grid
    width; panels fill row by row.
    """
    panels = [(str(s), [float(v) for v in vals]) for s, vals in panels]
    if not panels:
        raise InvalidParameter("need at least one panel")
    if any(len(vals) < 1 for _, vals in panels):
        raise InvalidParameter("every panel needs at least one value")
    columns = max(1, min(columns, len(panels)))
    rows = (len(panels) + columns - 1) // columns
    width = 2 * MARGIN + columns * PANEL_WIDTH
    height = TITLE_BAND + 2 * MARGIN + rows * PANEL_HEIGHT

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<style>{_STYLE}</style>",
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text class="title" x="{width / 2:.0f}" y="{MARGIN - 10}" '
        f'text-anchor="middle">{escape(title)}</text>',
    ]
    for k, (subtitle, values) in enumerate(panels):
        x0 = MARGIN + (k % columns) * PANEL_WIDTH
        y0 = TITLE_BAND + MARGIN + (k // columns) * PANEL_HEIGHT
        parts.extend(_panel(x0, y0, subtitle, values))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
