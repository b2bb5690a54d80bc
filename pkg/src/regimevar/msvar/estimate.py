"""Maximum-likelihood estimation: EM warm start + damped quasi-Newton.

The optimizer works on an unconstrained packed vector:

    [intercepts | exog loadings | lag matrices | covariance factors | logits]

with covariances parameterized by their lower Cholesky factor (diagonal
through an exponential map) and transitions by row logits, so BFGS never
has to respect constraints. Tied (non-switching) blocks are packed once.

The gradient is analytic, via the smoothed-probability identity: the
score of the observed-data log-likelihood equals the expected
complete-data score under the smoothed regime posterior. The initial
ergodic distribution's dependence on the transition matrix is handled by
implicit differentiation of pi'(I - P) = 0.

Multi-start: a wide candidate family (deterministic quantile/principal-
component/dynamic starts plus seeded k-means++ placements) is screened
with a few EM steps each; the top basins get the full EM + quasi-Newton
budget. Starts may run on a thread pool; screening ranks and final
results reduce by (loglik, start index), so the winner — and therefore
every output byte — is independent of scheduling.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..errors import (
    DegenerateRegime,
    InvalidParameter,
    NumericalUnderflow,
    ShapeMismatch,
    SingularCovariance,
    TooShort,
)
from .em import _positive_definite, em_step_designs
from .filter import FilterOutput, _forward, _smooth, design_matrices, hamilton_filter, log_density_matrix
from .model import (
    MsVarParams,
    MsVarSpec,
    count_coefficients,
    ergodic_distribution,
    matrix_to_logits,
    transition_matrix,
)

_FAILURE = (DegenerateRegime, SingularCovariance, NumericalUnderflow, np.linalg.LinAlgError)


# --- information criteria ----------------------------------------------------

@dataclass(frozen=True)
class InfoCriteria:
    aic: float
    schwarz: float


def info_criteria(loglik: float, n_coefficients: int, t: int) -> InfoCriteria:
    """Per-observation AIC and Schwarz criterion.

    aic = (-2 logL + 2 k) / T, schwarz = (-2 logL + k ln T) / T. T is the
    number of observations entering the likelihood (the effective sample
    after lags).
    """
    if t <= 0:
        raise ValueError("T must be positive")
    aic = (-2.0 * loglik + 2.0 * n_coefficients) / t
    schwarz = (-2.0 * loglik + n_coefficients * math.log(t)) / t if t > 0 else 0.0
    return InfoCriteria(aic=aic, schwarz=schwarz)


def regime_classify(filter_output: FilterOutput) -> np.ndarray:
    """Most probable regime per observation, as 1-based labels.

    Ties break toward the lower label (argmax picks the first maximum).
    """
    return np.argmax(filter_output.smoothed, axis=1) + 1


# --- parameter packing --------------------------------------------------------

class _Layout:
    """Slice bookkeeping for the packed parameter vector of a spec."""

    def __init__(self, spec: MsVarSpec):
        r, n, l = spec.n_regimes, spec.n_vars, spec.n_lags
        self.spec = spec
        self.r, self.n, self.l = r, n, l
        self.ni = (r if spec.switching.intercept else 1) * n
        self.nx = ((r if spec.switching.exog_loading else 1) * n) if spec.has_exog_dummy else 0
        self.na = l * n * n
        self.cov_block = n * (n + 1) // 2
        self.nc = (r if spec.switching.covariance else 1) * self.cov_block
        self.nt = r * (r - 1)
        ofs = np.cumsum([0, self.ni, self.nx, self.na, self.nc, self.nt])
        self.s_int = slice(ofs[0], ofs[1])
        self.s_exog = slice(ofs[1], ofs[2])
        self.s_lag = slice(ofs[2], ofs[3])
        self.s_cov = slice(ofs[3], ofs[4])
        self.s_trans = slice(ofs[4], ofs[5])
        self.size = int(ofs[5])


def _pack_chol(sigma: np.ndarray) -> np.ndarray:
    chol = np.linalg.cholesky(sigma)
    n = sigma.shape[0]
    out = [np.log(np.diag(chol))]
    out.extend(chol[i, :i] for i in range(n))
    return np.concatenate(out)


def _unpack_chol(block: np.ndarray, n: int) -> np.ndarray:
    chol = np.zeros((n, n))
    np.fill_diagonal(chol, np.exp(block[:n]))
    pos = n
    for i in range(n):
        chol[i, :i] = block[pos : pos + i]
        pos += i
    return chol @ chol.T


def pack_params(params: MsVarParams, spec: MsVarSpec) -> np.ndarray:
    lay = _Layout(spec)
    vec = np.empty(lay.size)
    r = spec.n_regimes
    ints = params.intercepts if spec.switching.intercept else params.intercepts[:1]
    vec[lay.s_int] = ints.reshape(-1)
    if lay.nx:
        loads = params.exog_loadings if spec.switching.exog_loading else params.exog_loadings[:1]
        vec[lay.s_exog] = loads.reshape(-1)
    vec[lay.s_lag] = params.lag_matrices.reshape(-1)
    blocks = range(r) if spec.switching.covariance else (0,)
    vec[lay.s_cov] = np.concatenate([_pack_chol(params.covariances[s]) for s in blocks])
    vec[lay.s_trans] = params.transition_logits.reshape(-1)
    return vec


def unpack_params(vec: np.ndarray, spec: MsVarSpec) -> MsVarParams:
    lay = _Layout(spec)
    r, n, l = lay.r, lay.n, lay.l
    ints = vec[lay.s_int].reshape(-1, n)
    if not spec.switching.intercept:
        ints = np.tile(ints, (r, 1))
    if spec.has_exog_dummy:
        loads = vec[lay.s_exog].reshape(-1, n)
        if not spec.switching.exog_loading:
            loads = np.tile(loads, (r, 1))
    else:
        loads = np.zeros((r, n))
    lags = vec[lay.s_lag].reshape(l, n, n)
    raw = vec[lay.s_cov].reshape(-1, lay.cov_block)
    covs = np.stack([_unpack_chol(raw[min(s, raw.shape[0] - 1)], n) for s in range(r)])
    logits = vec[lay.s_trans].reshape(r, r - 1)
    return MsVarParams(
        intercepts=ints,
        exog_loadings=loads,
        lag_matrices=lags,
        covariances=covs,
        transition_logits=logits,
    )


# --- likelihood and analytic score --------------------------------------------

def _loglik_designs_basic(y, z, x, params: MsVarParams) -> float:
    logdens = log_density_matrix(y, z, x, params)
    p = params.transition_matrix()
    rho = ergodic_distribution(p)
    _, _, per_obs = _forward(logdens, p, rho)
    return float(per_obs.sum())


def loglikelihood(data, exog, params: MsVarParams, initial_dist="ergodic") -> float:
    """Observed-data log-likelihood (ergodic initial distribution by default)."""
    return hamilton_filter(data, exog, params, initial_dist).loglik


def _loglik_and_score(y, z, x, params: MsVarParams, spec: MsVarSpec):
    """One filter/smoother pass giving the log-likelihood and its gradient
    with respect to the packed parameter vector."""
    te, n = y.shape
    r = params.n_regimes
    lay = _Layout(spec)

    logdens = log_density_matrix(y, z, x, params)
    p = params.transition_matrix()
    pi = ergodic_distribution(p)
    filtered, predicted, per_obs = _forward(logdens, p, pi)
    smoothed = _smooth(filtered, predicted, p)
    loglik = float(per_obs.sum())

    amat = params.lag_matrices.transpose(1, 0, 2).reshape(n, -1)
    base = y - z @ amat.T
    grad = np.zeros(lay.size)
    d_int = np.zeros((r, n))
    d_exog = np.zeros((r, n))
    d_lag = np.zeros((n, lay.l * n))
    d_sigma = np.zeros((r, n, n))
    for s in range(r):
        omega = np.linalg.inv(params.covariances[s])
        resid = base - params.intercepts[s] - np.outer(x, params.exog_loadings[s])
        q = resid @ omega
        wq = smoothed[:, s : s + 1] * q
        d_int[s] = wq.sum(axis=0)
        d_exog[s] = x @ wq
        d_lag += wq.T @ z
        m_s = (smoothed[:, s : s + 1] * resid).T @ resid
        w_s = smoothed[:, s].sum()
        d_sigma[s] = 0.5 * (omega @ m_s @ omega - w_s * omega)

    if spec.switching.intercept:
        grad[lay.s_int] = d_int.reshape(-1)
    else:
        grad[lay.s_int] = d_int.sum(axis=0)
    if lay.nx:
        if spec.switching.exog_loading:
            grad[lay.s_exog] = d_exog.reshape(-1)
        else:
            grad[lay.s_exog] = d_exog.sum(axis=0)
    grad[lay.s_lag] = d_lag.reshape(n, lay.l, n).transpose(1, 0, 2).reshape(-1)

    def chol_grad(d_sig, sigma):
        chol = np.linalg.cholesky(sigma)
        dl = 2.0 * d_sig @ chol
        parts = [np.diag(dl) * np.diag(chol)]
        parts.extend(dl[i, :i] for i in range(n))
        return np.concatenate(parts)

    if spec.switching.covariance:
        grad[lay.s_cov] = np.concatenate(
            [chol_grad(d_sigma[s], params.covariances[s]) for s in range(r)]
        )
    else:
        grad[lay.s_cov] = chol_grad(d_sigma.sum(axis=0), params.covariances[0])

    if r > 1:
        pred = predicted[1:]
        ratio = np.where(pred > 0.0, smoothed[1:] / np.where(pred > 0.0, pred, 1.0), 0.0)
        xi = p * (filtered[:-1].T @ ratio) if te > 1 else np.zeros((r, r))
        d_logit = xi[:, :-1] - xi.sum(axis=1, keepdims=True) * p[:, :-1]
        # Initial-distribution term: pi is the ergodic distribution of P,
        # differentiated implicitly through pi'(I - P) = 0, sum(pi) = 1.
        g_pi = smoothed[0] / pi
        b = np.eye(r) - p + np.outer(np.ones(r), pi)
        v = np.linalg.solve(b, g_pi)
        d_logit += (pi * p[:, :-1].T).T * (v[:-1] - (p @ v)[:, None])
        grad[lay.s_trans] = d_logit.reshape(-1)
    return loglik, grad


def score(data, exog, params: MsVarParams, spec: MsVarSpec | None = None) -> np.ndarray:
    """Analytic gradient of the log-likelihood in packed-vector order."""
    if spec is None:
        from .em import _default_spec

        spec = _default_spec(params, exog)
    y, z, x = design_matrices(data, exog, params.n_lags)
    _, grad = _loglik_and_score(y, z, x, params, spec)
    return grad


# --- damped BFGS ---------------------------------------------------------------

def _minimize_bfgs(value_fn, value_grad_fn, x0, gtol: float, max_iter: int):
    """BFGS on the inverse Hessian with Marquardt-style damped retries.

    When the quasi-Newton direction fails its backtracking line search,
    the inverse Hessian is blended toward the identity ((H + lam*I)/(1 +
    lam) for growing lam), interpolating between the BFGS step and plain
    gradient descent.
    """
    x = np.asarray(x0, dtype=float).copy()
    f, g = value_grad_fn(x)
    h = np.eye(x.size)
    iterations = 0
    status = "max_iterations"
    scaled = False
    for _ in range(max_iter):
        if np.abs(g).max() < gtol:
            status = "converged"
            break
        iterations += 1
        moved = False
        for lam in (0.0, 1.0, 10.0, 100.0, 1000.0):
            hd = h if lam == 0.0 else (h + lam * np.eye(x.size)) / (1.0 + lam)
            d = -hd @ g
            gd = float(g @ d)
            if gd >= 0.0 or not np.isfinite(gd):
                continue
            alpha = 1.0
            for _ in range(40):
                fn = value_fn(x + alpha * d)
                if np.isfinite(fn) and fn <= f + 1e-4 * alpha * gd:
                    moved = True
                    break
                alpha *= 0.5
            if moved:
                break
        if not moved:
            status = "stalled"
            break
        x_new = x + alpha * d
        f_new, g_new = value_grad_fn(x_new)
        s = x_new - x
        yv = g_new - g
        sy = float(s @ yv)
        if sy > 1e-10 * np.linalg.norm(s) * np.linalg.norm(yv):
            if not scaled:
                h = (sy / float(yv @ yv)) * np.eye(x.size)
                scaled = True
            rho = 1.0 / sy
            hy = h @ yv
            h = h - np.outer(hy, s) * rho - np.outer(s, hy) * rho
            h += np.outer(s, s) * (rho + rho * rho * float(yv @ hy))
        if abs(f - f_new) < 1e-12 * (1.0 + abs(f)):
            x, f, g = x_new, f_new, g_new
            status = "converged" if np.abs(g).max() < gtol else "stalled"
            break
        x, f, g = x_new, f_new, g_new
    else:
        status = "max_iterations"
    return x, f, g, iterations, status


# --- multi-start driver ---------------------------------------------------------

@dataclass(frozen=True)
class ConvergenceInfo:
    iterations: int
    gradient_norm: float
    status: str


@dataclass(frozen=True)
class FitOptions:
    n_starts: int = 4
    n_candidates: int = 8
    screen_iters: int = 8
    em_iters: int = 500
    em_tol: float = 1e-6
    qn_iters: int = 200
    qn_tol: float = 1e-5
    seed: int = 0
    threads: int = 1


@dataclass(frozen=True)
class FitResult:
    spec: MsVarSpec
    params: MsVarParams
    filter: FilterOutput
    loglik: float
    aic: float
    schwarz: float
    log_det_resid_cov: float
    n_coefficients: int
    convergence: ConvergenceInfo


def _ols_blocks(y, zf):
    coef, *_ = np.linalg.lstsq(zf, y, rcond=None)
    resid = y - zf @ coef
    sigma = _positive_definite(resid.T @ resid / max(y.shape[0], 1))
    return coef.T, resid, sigma


def _quantile_intercepts(mu, resid, r, key=None):
    """Regime intercepts from quantile groups of the residuals ordered by
    ``key`` (first-variable residual by default); groups see the full
    between-regime spread."""
    intercepts = np.tile(mu, (r, 1))
    order = np.argsort(resid[:, 0] if key is None else key, kind="stable")
    for s, rows in enumerate(np.array_split(order, r)):
        if rows.size:
            intercepts[s] = mu + resid[rows].mean(axis=0)
    return intercepts


def _kmeanspp_offsets(resid, r, rng):
    """Seeded k-means++ placement: regime mean offsets are observed
    residual rows, each pick weighted by squared distance to the nearest
    earlier pick. Means land on actual data so no regime starts in empty
    space, and the picks straddle well-separated clusters."""
    chosen = [int(rng.integers(resid.shape[0]))]
    for _ in range(1, r):
        d2 = np.min(
            [np.einsum("ij,ij->i", resid - resid[i], resid - resid[i]) for i in chosen],
            axis=0,
        )
        total = float(d2.sum())
        if total > 0.0:
            pick = int(np.searchsorted(np.cumsum(d2) / total, rng.random(), side="right"))
        else:
            pick = int(rng.integers(resid.shape[0]))
        chosen.append(min(pick, resid.shape[0] - 1))
    return resid[chosen]


def _make_start(index: int, y, z, x, spec: MsVarSpec, seed: int) -> MsVarParams:
    """Diversified start family.

    Start 0 ignores lag dynamics entirely: regime means come from
    quantile groups of static (intercept+dummy only) residuals and the
    lag matrices start at zero, so the first E-step classifies by level
    rather than letting least-squares lag estimates absorb the regime
    persistence. Start 1 groups the same static residuals along their
    first principal component, which separates regimes whose means agree
    on the first variable. Start 2 is the complementary dynamic start:
    quantile groups of full lag-regression residuals around the
    least-squares lag matrices. Later starts place the regime means on
    seeded k-means++ picks from the static residuals.
    """
    r, n, l = spec.n_regimes, spec.n_vars, spec.n_lags
    te = y.shape[0]
    static_cols = [np.ones((te, 1))]
    if spec.has_exog_dummy:
        static_cols.append(x[:, None])
    g0, resid0, sigma0 = _ols_blocks(y, np.hstack(static_cols))
    mu0 = g0[:, 0]
    beta0 = g0[:, 1] if spec.has_exog_dummy else np.zeros(n)
    spread = np.sqrt(np.clip(np.diag(sigma0), 1e-12, None))

    lags = np.zeros((l, n, n))
    intercepts = np.tile(mu0, (r, 1))
    loadings = np.tile(beta0, (r, 1))
    sigma = sigma0
    if index == 2 and l > 0:
        g1, resid1, sigma1 = _ols_blocks(y, np.hstack([z] + static_cols))
        lags = np.stack([g1[:, i * n : (i + 1) * n] for i in range(l)])
        intercepts = _quantile_intercepts(g1[:, l * n], resid1, r) if r > 1 else np.tile(
            g1[:, l * n], (r, 1)
        )
        loadings = np.tile(g1[:, l * n + 1] if spec.has_exog_dummy else np.zeros(n), (r, 1))
        sigma = sigma1
    elif r > 1 and index == 0:
        intercepts = _quantile_intercepts(mu0, resid0, r)
    elif r > 1 and index == 1:
        principal = np.linalg.svd(resid0, full_matrices=False)[2][0]
        intercepts = _quantile_intercepts(mu0, resid0, r, key=resid0 @ principal)
    elif r > 1:
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index])))
        intercepts = mu0 + _kmeanspp_offsets(resid0, r, rng)
        if spec.has_exog_dummy and spec.switching.exog_loading:
            loadings += 0.5 * spread * rng.standard_normal((r, n))

    if r > 1:
        p0 = np.full((r, r), 0.2 / (r - 1))
        np.fill_diagonal(p0, 0.8)
        logits = matrix_to_logits(p0)
    else:
        logits = np.zeros((1, 0))
    return MsVarParams(
        intercepts=intercepts,
        exog_loadings=loadings,
        lag_matrices=lags,
        covariances=np.tile(sigma, (r, 1, 1)),
        transition_logits=logits,
    )


def _screen_start(index: int, y, z, x, spec: MsVarSpec, options: FitOptions):
    """A few EM iterations from one candidate start; the resulting
    log-likelihood ranks the basin quality. Returns (loglik, params)."""
    params = _make_start(index, y, z, x, spec, options.seed)
    loglik = -math.inf
    for _ in range(max(options.screen_iters, 1)):
        params, loglik = em_step_designs(y, z, x, params, spec)
    return loglik, params


def _finalize_start(params: MsVarParams, y, z, x, spec: MsVarSpec, options: FitOptions):
    """EM to a neighborhood of a mode, then quasi-Newton polish. Returns
    (loglik, params, ConvergenceInfo) or raises on numerical failure."""
    loglik = -math.inf
    em_used = 0
    for _ in range(options.em_iters):
        params, new_loglik = em_step_designs(y, z, x, params, spec)
        em_used += 1
        done = new_loglik - loglik < options.em_tol and em_used > 1
        loglik = new_loglik
        if done:
            break

    def value(vec):
        try:
            return -_loglik_designs_basic(y, z, x, unpack_params(vec, spec))
        except _FAILURE:
            return math.inf

    def value_grad(vec):
        ll, grad = _loglik_and_score(y, z, x, unpack_params(vec, spec), spec)
        return -ll, -grad

    vec0 = pack_params(params, spec)
    vec, f, g, qn_used, status = _minimize_bfgs(
        value, value_grad, vec0, options.qn_tol, options.qn_iters
    )
    if -f >= loglik:
        params, loglik = unpack_params(vec, spec), -f
        grad_norm = float(np.abs(g).max())
    else:
        # Quasi-Newton wandered off; keep the EM iterate.
        grad_norm = float(np.abs(g).max())
        status = "stalled"
    info = ConvergenceInfo(iterations=em_used + qn_used, gradient_norm=grad_norm, status=status)
    return loglik, params, info


def _relabel(params: MsVarParams, spec: MsVarSpec) -> MsVarParams:
    """Deterministic regime labeling: ascending first-variable exogenous
    loading when it switches, else ascending first-variable intercept."""
    if spec.n_regimes == 1:
        return params
    if spec.has_exog_dummy and spec.switching.exog_loading:
        key = params.exog_loadings[:, 0]
    elif spec.switching.intercept:
        key = params.intercepts[:, 0]
    else:
        key = np.array([params.covariances[s][0, 0] for s in range(spec.n_regimes)])
    perm = np.argsort(key, kind="stable")
    if np.array_equal(perm, np.arange(spec.n_regimes)):
        return params
    return params.permute_regimes(perm)


def _validate_lag_mask(lag_mask, spec: MsVarSpec):
    """Normalize a zero-pattern mask for the lag matrices (1 = free,
    0 = restricted to zero); None when nothing is restricted."""
    if lag_mask is None:
        return None
    mask = np.asarray(lag_mask, dtype=float)
    shape = (spec.n_lags, spec.n_vars, spec.n_vars)
    if mask.shape != shape:
        raise ShapeMismatch(f"lag_mask must have shape {shape}, got {mask.shape}")
    if not np.isin(mask, (0.0, 1.0)).all():
        raise InvalidParameter("lag_mask entries must be 0 or 1")
    if mask.all():
        return None
    return mask.astype(bool)


def _restricted_polish(params: MsVarParams, y, z, x, spec: MsVarSpec,
                       options: FitOptions, mask: np.ndarray):
    """Project the lag matrices onto the zero pattern and re-maximize the
    likelihood over the free coordinates only. Returns
    (params, loglik, ConvergenceInfo)."""
    lay = _Layout(spec)
    projected = MsVarParams(
        intercepts=params.intercepts,
        exog_loadings=params.exog_loadings,
        lag_matrices=params.lag_matrices * mask,
        covariances=params.covariances,
        transition_logits=params.transition_logits,
    )
    template = pack_params(projected, spec)
    lag_index = np.arange(lay.s_lag.start, lay.s_lag.stop)
    fixed = lag_index[~mask.reshape(-1)]
    free = np.setdiff1d(np.arange(lay.size), fixed)

    def expand(vfree):
        vec = template.copy()
        vec[free] = vfree
        return vec

    def value(vfree):
        try:
            return -_loglik_designs_basic(y, z, x, unpack_params(expand(vfree), spec))
        except _FAILURE:
            return math.inf

    def value_grad(vfree):
        ll, grad = _loglik_and_score(y, z, x, unpack_params(expand(vfree), spec), spec)
        return -ll, -grad[free]

    try:
        vec, f, g, iters, status = _minimize_bfgs(
            value, value_grad, template[free], options.qn_tol, options.qn_iters
        )
        final = unpack_params(expand(vec), spec)
        info = ConvergenceInfo(
            iterations=iters, gradient_norm=float(np.abs(g).max()), status=status
        )
        return final, -f, info
    except _FAILURE as exc:
        loglik = _loglik_designs_basic(y, z, x, projected)
        return projected, loglik, ConvergenceInfo(0, math.inf, f"failed: {exc}")


def fit(
    data,
    exog,
    spec: MsVarSpec,
    options: FitOptions | None = None,
    lag_mask=None,
) -> FitResult:
    """Estimate the model by maximum likelihood from multiple starts.

    The winner is the start with the highest log-likelihood (ties break
    toward the lower start index), so results are reproducible for a given
    seed regardless of the thread count.

    ``lag_mask`` optionally restricts lag coefficients to a zero pattern
    (shape (n_lags, n_vars, n_vars), 1 = free). The multi-start EM phase
    runs unrestricted to locate the basin; the final quasi-Newton stage
    then maximizes over the free coordinates only, and the coefficient
    count reflects the restriction.
    """
    options = options or FitOptions()
    spec.require_estimable()
    data = np.asarray(data, dtype=float)
    if data.ndim != 2 or data.shape[1] != spec.n_vars:
        raise ShapeMismatch(
            f"data must be (T, {spec.n_vars}), got {data.shape}"
        )
    if spec.has_exog_dummy and exog is None:
        raise ShapeMismatch("spec declares an exogenous dummy but exog is None")
    lag_mask = _validate_lag_mask(lag_mask, spec)
    k = count_coefficients(spec)
    if lag_mask is not None:
        k -= int((~lag_mask).sum())
    need = k / spec.n_vars + spec.n_lags
    if data.shape[0] < need:
        raise TooShort(
            f"{data.shape[0]} observations cannot identify {k} coefficients: "
            f"need at least {math.ceil(need)} "
            f"({k} coefficients across {spec.n_vars} equations plus {spec.n_lags} lag rows)"
        )
    y, z, x = design_matrices(data, exog, spec.n_lags)

    def run_map(fn, items):
        if options.threads > 1 and len(items) > 1:
            with ThreadPoolExecutor(max_workers=min(options.threads, len(items))) as pool:
                return list(pool.map(fn, items))
        return [fn(item) for item in items]

    def screen(index: int):
        try:
            return _screen_start(index, y, z, x, spec, options)
        except _FAILURE:
            return (-math.inf, None)

    def finalize(params: MsVarParams):
        try:
            return _finalize_start(params, y, z, x, spec, options)
        except _FAILURE as exc:
            return (-math.inf, None, ConvergenceInfo(0, math.inf, f"failed: {exc}"))

    # Screen a wider candidate set cheaply, then spend the full EM +
    # quasi-Newton budget only on the most promising basins. Ranking ties
    # break toward the lower candidate index, so the selection (and hence
    # the fit) is reproducible for a given seed regardless of thread count.
    n_candidates = max(options.n_starts, options.n_candidates, 1)
    screened = run_map(screen, list(range(n_candidates)))
    ranked = sorted(
        (i for i in range(n_candidates) if screened[i][1] is not None),
        key=lambda i: (-screened[i][0], i),
    )
    if not ranked:
        raise DegenerateRegime("every candidate start failed during screening")
    outcomes = run_map(finalize, [screened[i][1] for i in ranked[: options.n_starts]])

    best_index = max(range(len(outcomes)), key=lambda i: (outcomes[i][0], -i))
    best_loglik, best_params, info = outcomes[best_index]
    if best_params is None:
        raise DegenerateRegime(
            "every start failed; last status: " + info.status
        )
    if lag_mask is not None:
        best_params, best_loglik, info = _restricted_polish(
            best_params, y, z, x, spec, options, lag_mask
        )
    best_params = _relabel(best_params, spec)
    filt = hamilton_filter(data, exog, best_params)
    te = y.shape[0]
    crit = info_criteria(filt.loglik, k, te)
    pi = ergodic_distribution(best_params.transition_matrix())
    pooled = np.einsum("s,sij->ij", pi, best_params.covariances)
    sign, logdet = np.linalg.slogdet(pooled)
    if sign <= 0:
        raise SingularCovariance("ergodic-weighted residual covariance is not positive definite")
    return FitResult(
        spec=spec,
        params=best_params,
        filter=filt,
        loglik=filt.loglik,
        aic=crit.aic,
        schwarz=crit.schwarz,
        log_det_resid_cov=float(logdet),
        n_coefficients=k,
        convergence=info,
    )
