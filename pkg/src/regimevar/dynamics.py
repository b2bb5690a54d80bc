"""Post-estimation dynamics: stability, impulse responses, variance shares.

Lag coefficients are common across regimes in this model family, so
impulse responses and variance decompositions differ across regimes only
through the shock covariance. ``regime_for_cov`` selects a regime's
covariance by 0-based index, or (default) the ergodic-probability
weighted average of the regime covariances.

Orthogonalization is recursive (Cholesky) under a caller-chosen variable
ordering; results are reported in that ordering.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadOrdering, ShapeMismatch, UnstableSystem
from .msvar.model import MsVarParams, ergodic_distribution

_STABILITY_MARGIN = 1e-10


@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    spectral_radius: float


@dataclass(frozen=True)
class IrfResult:
    """Orthogonalized impulse responses.

    ``responses`` has shape (horizons + 1, n, n): ``responses[h][i][j]``
    is the response of variable i at horizon h to a one-standard-
    deviation orthogonalized shock to variable j, with variables indexed
    in ``ordering`` order. ``responses[0]`` is the lower-triangular
    orthogonalization factor itself.
    """

    horizons: int
    responses: np.ndarray
    ordering: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "responses", _frozen(self.responses))


@dataclass(frozen=True)
class FevdResult:
    """Forecast-error variance shares in percent.

    ``shares`` has shape (horizons, n, n): ``shares[h-1][i][j]`` is the
    percentage of variable i's h-step forecast-error variance attributed
    to orthogonalized shock j (periods run 1..horizons). ``std_errors``
    has shape (horizons, n): the h-step forecast standard error of each
    variable. Variables are indexed in ``ordering`` order.
    """

    horizons: int
    shares: np.ndarray
    std_errors: np.ndarray
    ordering: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "shares", _frozen(self.shares))
        object.__setattr__(self, "std_errors", _frozen(self.std_errors))


def _frozen(arr) -> np.ndarray:
    out = np.array(arr, dtype=float)
    out.setflags(write=False)
    return out


def companion(lag_matrices) -> np.ndarray:
    """Block-companion matrix of a VAR(L): top row of lag blocks over a
    shifted identity."""
    mats = np.asarray(lag_matrices, dtype=float)
    if mats.ndim != 3 or mats.shape[1] != mats.shape[2]:
        raise ShapeMismatch(f"lag matrices must be (L, n, n), got {mats.shape}")
    l, n, _ = mats.shape
    comp = np.zeros((l * n, l * n))
    comp[:n] = mats.transpose(1, 0, 2).reshape(n, l * n)
    if l > 1:
        comp[n:, : (l - 1) * n] = np.eye((l - 1) * n)
    return comp


def is_stable(lag_matrices) -> StabilityReport:
    """Spectral radius of the companion matrix against the unit circle."""
    comp = companion(lag_matrices)
    if comp.size == 0:
        return StabilityReport(stable=True, spectral_radius=0.0)
    radius = float(np.abs(np.linalg.eigvals(comp)).max())
    return StabilityReport(stable=radius < 1.0 - _STABILITY_MARGIN, spectral_radius=radius)


def _ma_matrices(lag_matrices: np.ndarray, horizons: int) -> np.ndarray:
    """MA(infinity) coefficients Psi_0..Psi_H from the VAR recursion."""
    l, n, _ = lag_matrices.shape
    psi = np.zeros((horizons + 1, n, n))
    psi[0] = np.eye(n)
    for h in range(1, horizons + 1):
        acc = np.zeros((n, n))
        for i in range(1, min(h, l) + 1):
            acc += lag_matrices[i - 1] @ psi[h - i]
        psi[h] = acc
    return psi


def _resolve_inputs(params: MsVarParams, regime_for_cov, horizons, ordering, allow_unstable):
    if horizons < 0:
        raise ValueError("horizons must be non-negative")
    n = params.n_vars
    if ordering is None:
        perm = tuple(range(n))
    else:
        perm = tuple(int(i) for i in ordering)
        if sorted(perm) != list(range(n)):
            raise BadOrdering(f"ordering {ordering} is not a permutation of 0..{n - 1}")
    if regime_for_cov in (None, "ergodic"):
        weights = ergodic_distribution(params.transition_matrix())
        sigma = np.einsum("s,sij->ij", weights, params.covariances)
    else:
        regime = int(regime_for_cov)
        if not 0 <= regime < params.n_regimes:
            raise ValueError(
                f"regime_for_cov must be in [0, {params.n_regimes - 1}] or 'ergodic', got {regime_for_cov}"
            )
        sigma = params.covariances[regime]
    report = is_stable(params.lag_matrices)
    if not report.stable and not allow_unstable:
        raise UnstableSystem(
            f"companion spectral radius {report.spectral_radius:.6f} is not below 1; "
            "pass allow_unstable to force dynamics anyway"
        )
    idx = np.array(perm)
    lags = params.lag_matrices[:, idx[:, None], idx[None, :]]
    sigma = sigma[idx[:, None], idx[None, :]]
    return lags, sigma, perm


def irf(
    params: MsVarParams,
    regime_for_cov="ergodic",
    horizons: int = 24,
    ordering=None,
    allow_unstable: bool = False,
) -> IrfResult:
    """Orthogonalized impulse responses out to ``horizons`` steps."""
    lags, sigma, perm = _resolve_inputs(params, regime_for_cov, horizons, ordering, allow_unstable)
    chol = np.linalg.cholesky(sigma)
    psi = _ma_matrices(lags, horizons)
    responses = np.empty_like(psi)
    responses[0] = chol
    for h in range(1, horizons + 1):
        responses[h] = psi[h] @ chol
    return IrfResult(horizons=horizons, responses=responses, ordering=perm)


def fevd(
    params: MsVarParams,
    regime_for_cov="ergodic",
    horizons: int = 24,
    ordering=None,
    allow_unstable: bool = False,
) -> FevdResult:
    """Forecast-error variance decomposition for periods 1..horizons.

    Period h shares are cumulative squared orthogonalized responses
    through Psi_{h-1}, normalized so each variable's row sums to 100.
    """
    if horizons < 1:
        raise ValueError("fevd needs horizons >= 1")
    impulse = irf(params, regime_for_cov, horizons - 1, ordering, allow_unstable)
    theta_sq = impulse.responses**2
    cumulative = np.cumsum(theta_sq, axis=0)
    variances = cumulative.sum(axis=2)
    shares = 100.0 * cumulative / variances[:, :, None]
    return FevdResult(
        horizons=horizons,
        shares=shares,
        std_errors=np.sqrt(variances),
        ordering=impulse.ordering,
    )


def fevd_csv(result: FevdResult, variable_names) -> str:
    """Human-readable decomposition table: Period, S.E., one column per
    variable in the decomposition ordering."""
    names = [variable_names[i] for i in result.ordering]
    if len(names) != result.shares.shape[1]:
        raise ShapeMismatch("variable_names length does not match decomposition size")
    lines = []
    for i, name in enumerate(names):
        lines.append(f"Variance Decomposition of {name}")
        lines.append("Period,S.E.," + ",".join(names))
        for h in range(result.horizons):
            cells = [str(h + 1), f"{result.std_errors[h, i]:.6f}"]
            cells.extend(f"{result.shares[h, i, j]:.2f}" for j in range(len(names)))
            lines.append(",".join(cells))
        lines.append("")
    return "\n".join(lines)


def irf_csv(result: IrfResult, variable_names) -> str:
    """Long-format machine output: horizon, shock, response_var, value."""
    names = [variable_names[i] for i in result.ordering]
    lines = ["horizon,shock,response_var,value"]
    for h in range(result.horizons + 1):
        for j, shock in enumerate(names):
            for i, resp in enumerate(names):
                lines.append(f"{h},{shock},{resp},{result.responses[h, i, j]:.17g}")
    return "\n".join(lines) + "\n"
