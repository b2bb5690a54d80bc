"""Numeric rendering shared by the machine-readable artifacts.

Machine outputs print floats at 17 significant digits — enough to pin
down a double exactly — so every emitted file round-trips bit-exactly
and is byte-identical across runs and thread counts. Human tables round
to 4 decimals and live with their emitters.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .errors import InvalidParameter


def format_sig(value: float, digits: int = 17) -> str:
    """``value`` at ``digits`` significant decimal digits.

    17 digits uniquely determine an IEEE double, so parsing the result
    recovers the original bit pattern.
    """
    value = float(value)
    if not math.isfinite(value):
        raise InvalidParameter(f"non-finite value {value!r} has no numeric rendering")
    return format(value, f".{digits}g")


def to_json(obj) -> str:
    """JSON text with dict keys sorted, two-space indent, and floats at
    17 significant digits (``json.dumps`` would use shortest-repr).

    Accepts the JSON scalar types plus numpy scalars/arrays, lists,
    tuples, and dicts with stringifiable keys.
    """
    return _render(obj, 0)


def _render(node, level: int) -> str:
    pad = "  " * level
    inner_pad = "  " * (level + 1)
    if node is None:
        return "null"
    if isinstance(node, (bool, np.bool_)):
        return "true" if node else "false"
    if isinstance(node, (int, np.integer)):
        return str(int(node))
    if isinstance(node, (float, np.floating)):
        return format_sig(float(node))
    if isinstance(node, str):
        return json.dumps(node)
    if isinstance(node, np.ndarray):
        node = node.tolist()
    if isinstance(node, (list, tuple)):
        if not node:
            return "[]"
        body = ",\n".join(inner_pad + _render(v, level + 1) for v in node)
        return "[\n" + body + "\n" + pad + "]"
    if isinstance(node, dict):
        if not node:
            return "{}"
        items = sorted((str(k), v) for k, v in node.items())
        body = ",\n".join(
            f"{inner_pad}{json.dumps(k)}: {_render(v, level + 1)}" for k, v in items
        )
        return "{\n" + body + "\n" + pad + "}"
    raise InvalidParameter(f"cannot serialize {type(node).__name__} to JSON")
