"""Response-surface p-values for Dickey-Fuller-type tau statistics.

The tables in ``_surfaces_data`` hold, for each deterministic spec and
test dimension (1 = plain unit-root test, d >= 2 = residual-based
cointegration test with d series), polynomial-in-1/n coefficients for the
tau quantile at each of 36 probability nodes. A p-value lookup evaluates
the node quantiles at the caller's regression sample size, then
interpolates the normal score of p linearly in tau between bracketing
nodes; beyond the outermost nodes the end-segment slope extrapolates, so
p is strictly monotone in tau everywhere.
"""

from __future__ import annotations

import numpy as np
from scipy.special import ndtr, ndtri

from ..errors import DimensionOutOfRange, InvalidParameter
from ._surfaces_data import N_MIN, P_NODES, SURFACES

_Z_NODES = ndtri(np.asarray(P_NODES))
MIN_DIMENSION = 1
MAX_DIMENSION = max(SURFACES["constant"])


def _node_quantiles(dimension: int, spec: str, sample_size: int) -> np.ndarray:
    if spec not in SURFACES:
        raise InvalidParameter(
            f"deterministic spec must be one of {tuple(SURFACES)}, got {spec!r}"
        )
    if not MIN_DIMENSION <= dimension <= MAX_DIMENSION:
        raise DimensionOutOfRange(
            f"dimension {dimension} outside [{MIN_DIMENSION}, {MAX_DIMENSION}]"
        )
    n = max(float(sample_size), float(N_MIN[spec][dimension]))
    coefs = np.asarray(SURFACES[spec][dimension])
    q = coefs[:, 0] + coefs[:, 1] / n + coefs[:, 2] / n**2 + coefs[:, 3] / n**3
    # Simulation noise can locally disorder neighbouring nodes; restore a
    # strictly increasing grid so the p-value is monotone in tau.
    q = np.maximum.accumulate(q)
    for i in range(1, q.size):
        if q[i] <= q[i - 1]:
            q[i] = q[i - 1] + 1e-9 * (1.0 + abs(q[i - 1]))
    return q


def mackinnon_pvalue(
    tau: float, dimension: int, spec: str = "constant", sample_size: int = 22
) -> float:
    """Left-tail p-value of ``tau`` for the given test dimension and
    deterministic spec, adjusted to ``sample_size`` regression
    observations (clamped below at the smallest simulated size)."""
    q = _node_quantiles(dimension, spec, sample_size)
    t = float(tau)
    if t <= q[0]:
        z = _Z_NODES[0] + (t - q[0]) * (_Z_NODES[1] - _Z_NODES[0]) / (q[1] - q[0])
    elif t >= q[-1]:
        z = _Z_NODES[-1] + (t - q[-1]) * (_Z_NODES[-1] - _Z_NODES[-2]) / (q[-1] - q[-2])
    else:
        z = float(np.interp(t, q, _Z_NODES))
    return float(ndtr(z))
