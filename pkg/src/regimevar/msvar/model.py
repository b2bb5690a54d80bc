"""Model specification and parameter containers for the switching VAR.

Conventions (pinned here, relied on everywhere else):

* The transition matrix is ROW-stochastic over destinations:
  ``P[i, j] = Pr(S_{t+1} = j | S_t = i)``.
* Transition parameters are unconstrained logits, one row per origin
  regime, with the LAST destination as the reference category:
  ``P[i, :] = softmax((logits[i, 0], ..., logits[i, R-2], 0))``.
* Lag matrices are common across regimes (the switching blocks are the
  intercepts, the exogenous-dummy loadings, and the error covariances,
  each individually toggleable).
* Regimes are indexed 0-based internally; reports label them 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import InvalidParameter, SingularCovariance


@dataclass(frozen=True)
class SwitchingFlags:
    """Which parameter blocks depend on the regime."""

    intercept: bool = True
    exog_loading: bool = True
    covariance: bool = True
    lag_coeffs: bool = False


@dataclass(frozen=True)
class MsVarSpec:
    """Dimensions and switching structure of the model."""

    n_vars: int
    n_regimes: int
    n_lags: int = 1
    has_exog_dummy: bool = True
    switching: SwitchingFlags = field(default_factory=SwitchingFlags)

    def __post_init__(self):
        if self.n_vars < 1 or self.n_regimes < 1 or self.n_lags < 1:
            raise InvalidParameter("n_vars, n_regimes and n_lags must all be >= 1")

    def require_estimable(self) -> None:
        """MsVarParams stores one common lag block, so a switching lag block
        is countable (see count_coefficients) but not estimable."""
        if self.switching.lag_coeffs:
            raise InvalidParameter("switching lag coefficients are not representable")


def _frozen(arr, shape, what: str) -> np.ndarray:
    a = np.array(arr, dtype=float)
    if a.shape != shape:
        raise InvalidParameter(f"{what} must have shape {shape}, got {a.shape}")
    if not np.isfinite(a).all():
        raise InvalidParameter(f"{what} contains non-finite entries")
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class MsVarParams:
    """Complete parameter point: intercepts (R, n), exog loadings (R, n),
    lag matrices (L, n, n), covariances (R, n, n), transition logits
    (R, R-1)."""

    intercepts: np.ndarray
    exog_loadings: np.ndarray
    lag_matrices: np.ndarray
    covariances: np.ndarray
    transition_logits: np.ndarray

    def __post_init__(self):
        r, n = np.shape(self.intercepts)
        l = np.shape(self.lag_matrices)[0]
        object.__setattr__(self, "intercepts", _frozen(self.intercepts, (r, n), "intercepts"))
        object.__setattr__(
            self, "exog_loadings", _frozen(self.exog_loadings, (r, n), "exog_loadings")
        )
        object.__setattr__(
            self, "lag_matrices", _frozen(self.lag_matrices, (l, n, n), "lag_matrices")
        )
        object.__setattr__(
            self, "covariances", _frozen(self.covariances, (r, n, n), "covariances")
        )
        object.__setattr__(
            self,
            "transition_logits",
            _frozen(self.transition_logits, (r, max(r - 1, 0)), "transition_logits"),
        )
        for s in range(r):
            c = self.covariances[s]
            if not np.allclose(c, c.T, rtol=0.0, atol=1e-8):
                raise SingularCovariance(f"covariance of regime {s} is not symmetric")
            try:
                np.linalg.cholesky(c)
            except np.linalg.LinAlgError:
                raise SingularCovariance(
                    f"covariance of regime {s} is not positive definite"
                ) from None

    @property
    def n_regimes(self) -> int:
        return self.intercepts.shape[0]

    @property
    def n_vars(self) -> int:
        return self.intercepts.shape[1]

    @property
    def n_lags(self) -> int:
        return self.lag_matrices.shape[0]

    def transition_matrix(self) -> np.ndarray:
        return transition_matrix(self.transition_logits)

    def permute_regimes(self, perm) -> "MsVarParams":
        """Relabel regimes: new regime k is old regime perm[k]."""
        perm = np.asarray(perm, dtype=int)
        p = self.transition_matrix()[np.ix_(perm, perm)]
        return MsVarParams(
            intercepts=self.intercepts[perm],
            exog_loadings=self.exog_loadings[perm],
            lag_matrices=self.lag_matrices,
            covariances=self.covariances[perm],
            transition_logits=matrix_to_logits(p),
        )


def transition_matrix(logits) -> np.ndarray:
    """Row-softmax over (logits_row, 0); the implied matrix is row-stochastic."""
    logits = np.asarray(logits, dtype=float)
    if not np.isfinite(logits).all():
        raise InvalidParameter("transition logits must be finite")
    r = logits.shape[0]
    full = np.concatenate([logits, np.zeros((r, 1))], axis=1)
    full -= full.max(axis=1, keepdims=True)
    e = np.exp(full)
    return e / e.sum(axis=1, keepdims=True)


def matrix_to_logits(p) -> np.ndarray:
    """Inverse of transition_matrix (last column as reference category).

    Zero probabilities are floored at 1e-300 so the logits stay finite;
    a row-stochastic input round-trips to 1e-10.
    """
    p = np.asarray(p, dtype=float)
    p = np.maximum(p, 1e-300)
    return np.log(p[:, :-1]) - np.log(p[:, -1:])


def ergodic_distribution(p: np.ndarray) -> np.ndarray:
    """Stationary distribution of a row-stochastic matrix.

    Solves pi' (I - P) = 0 with sum(pi) = 1 via the fundamental-matrix
    trick; falls back to the uniform distribution when the chain is
    reducible (singular system or negative solution).
    """
    r = p.shape[0]
    if r == 1:
        return np.ones(1)
    a = np.eye(r) - p.T + np.ones((r, r))
    try:
        pi = np.linalg.solve(a, np.ones(r))
    except np.linalg.LinAlgError:
        return np.full(r, 1.0 / r)
    if not np.isfinite(pi).all() or pi.min() < -1e-9:
        return np.full(r, 1.0 / r)
    pi = np.maximum(pi, 0.0)
    return pi / pi.sum()


def count_coefficients(spec: MsVarSpec) -> int:
    """Free-parameter count under the spec's switching flags.

    Blocks: intercepts, exog loadings (only with a dummy), lag matrices,
    covariance factors (n(n+1)/2 each), transition logits R(R-1). A block
    contributes one copy when common, R copies when switching.
    """
    r, n, l = spec.n_regimes, spec.n_vars, spec.n_lags
    sw = spec.switching
    k = (r if sw.intercept else 1) * n
    if spec.has_exog_dummy:
        k += (r if sw.exog_loading else 1) * n
    k += (r if sw.lag_coeffs else 1) * l * n * n
    k += (r if sw.covariance else 1) * (n * (n + 1) // 2)
    k += r * (r - 1)
    return k
