#!/usr/bin/env python
"""Generate finite-sample quantile response surfaces for tau distributions.

Simulates the null distribution of the residual-based cointegration tau
statistic (and its one-dimensional unit-root special case) over a grid of
sample sizes, estimates empirical quantiles at a fixed probability grid,
and fits a response surface

    q_p(n) = theta0 + theta1 / n + theta2 / n**2 + theta3 / n**3

per probability node by weighted least squares, where ``n`` is the number
of observations entering the final test regression.  The fitted surfaces
are written to ``src/regimevar/stattests/_surfaces_data.py`` and consumed
by :func:`regimevar.stattests.mackinnon.mackinnon_pvalue`.

Protocol
--------
For dimension ``d`` and raw series length ``T``:

* draw ``d`` independent Gaussian random walks (the null of no
  cointegration; for ``d == 1`` a single driftless walk),
* for ``d >= 2`` regress the first walk on the others plus the
  deterministic terms of ``spec`` and keep the residual,
* run a no-lag Dickey-Fuller regression on the residual (for ``d == 1``
  the deterministic terms enter this regression directly),
* record the t-ratio of the level coefficient.

The regression uses ``n = T - 1`` observations; surfaces are indexed by
``n`` so callers can plug in the observation count of their own test
regression (which shrinks with augmentation lags).

Usage
-----
    python tools/gen_mackinnon_surfaces.py [--quick] [--out PATH]

``--quick`` runs a tiny-replication version for plumbing checks only.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

MASTER_SEED = 20260401

SPECS = ("none", "constant", "constant_trend")

# Probability nodes: dense in the left tail (rejection region) and spread
# across the body so interpolation error stays well below simulation noise.
P_NODES = (
    0.0001, 0.0002, 0.0003, 0.0005, 0.0008, 0.0012, 0.0018, 0.0027,
    0.004, 0.006, 0.009, 0.0135, 0.02, 0.03, 0.045, 0.065,
    0.09, 0.125, 0.17, 0.22, 0.28, 0.35, 0.43, 0.50,
    0.57, 0.65, 0.73, 0.80, 0.86, 0.91, 0.95, 0.975,
    0.99, 0.9965, 0.999, 0.9999,
)

T_GRID = (
    18, 20, 22, 25, 28, 32, 36, 42, 50, 60,
    75, 95, 120, 160, 220, 300, 420, 600, 900, 1400,
)

MAX_DIM = 12


def t_grid_for_dim(dim: int) -> list[int]:
    """Sample-size grid, skipping lengths too short for the regression.

    High dimensions stop at T = 600: the 1/n extrapolation to the
    asymptote is already negligible there and the large cells dominate
    runtime otherwise.
    """
    floor = max(18, dim + 12)
    ceil = 1400 if dim <= 3 else 600
    grid = [t for t in T_GRID if floor <= t <= ceil]
    if grid[0] > floor:
        grid.insert(0, floor)
    return grid


def reps_for_cell(spec: str, dim: int, t: int, quick: bool) -> int:
    if quick:
        return 4000
    budget = 8.0e7 if spec == "constant" else 3.0e7
    r = int(budget / (t * dim))
    floor = 150_000 if t <= 300 else 60_000
    r = min(1_500_000, max(floor, r))
    # Extra precision where the finite-sample surface matters most.
    if spec == "constant" and t <= 36 and (dim <= 2 or dim == 8):
        r = min(3_000_000, 4 * r)
    return r


def det_matrix(t: int, spec: str) -> np.ndarray | None:
    """Deterministic regressors for a sample of length ``t``."""
    if spec == "none":
        return None
    cols = [np.ones(t)]
    if spec == "constant_trend":
        cols.append(np.arange(1.0, t + 1.0))
    return np.column_stack(cols)


def batched_resid(y: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Residuals of y (m, t) on x (m, t, k) via batched normal equations."""
    xtx = np.einsum("mti,mtj->mij", x, x)
    xty = np.einsum("mti,mt->mi", x, y)
    beta = np.linalg.solve(xtx, xty[..., None])[..., 0]
    return y - np.einsum("mti,mi->mt", x, beta)


def df_tau(u: np.ndarray, det: np.ndarray | None) -> np.ndarray:
    """No-lag Dickey-Fuller t-ratio for each row of u (m, t)."""
    du = np.diff(u, axis=1)
    ul = u[:, :-1]
    m, n = ul.shape
    if det is None:
        sxx = np.einsum("mt,mt->m", ul, ul)
        b = np.einsum("mt,mt->m", ul, du) / sxx
        e = du - b[:, None] * ul
        s2 = np.einsum("mt,mt->m", e, e) / (n - 1)
        return b / np.sqrt(s2 / sxx)
    k = 1 + det.shape[1]
    x = np.empty((m, n, k))
    x[:, :, 0] = ul
    x[:, :, 1:] = det[None, :, :]
    xtx = np.einsum("mti,mtj->mij", x, x)
    xty = np.einsum("mti,mt->mi", x, du)
    beta = np.linalg.solve(xtx, xty[..., None])[..., 0]
    e = du - np.einsum("mti,mi->mt", x, beta)
    s2 = np.einsum("mt,mt->m", e, e) / (n - k)
    inv00 = np.linalg.inv(xtx)[:, 0, 0]
    return beta[:, 0] / np.sqrt(s2 * inv00)


def tau_cell(spec: str, dim: int, t: int, reps: int, rng: np.random.Generator) -> np.ndarray:
    """Simulated tau draws for one (spec, dim, T) cell."""
    out = np.empty(reps)
    chunk = max(1, int(6.0e6 / (t * dim)))
    done = 0
    while done < reps:
        m = min(chunk, reps - done)
        walks = rng.standard_normal((m, t, dim)).cumsum(axis=1)
        if dim == 1:
            u = walks[:, :, 0]
            # Deterministics enter the test regression itself (skip the
            # first observation so the detrending sample matches).
            tau = df_tau(u, det_matrix(t - 1, spec))
        else:
            det = det_matrix(t, spec)
            if det is None:
                x = walks[:, :, 1:]
            else:
                x = np.concatenate(
                    [np.broadcast_to(det, (m,) + det.shape), walks[:, :, 1:]], axis=2
                )
            u = batched_resid(walks[:, :, 0], x)
            tau = df_tau(u, None)
        out[done : done + m] = tau
        done += m
    return out


def fit_surface(n_obs: np.ndarray, quants: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """WLS fit of quantiles on [1, 1/n, 1/n^2, 1/n^3]; returns (nodes, 4)."""
    x = 1.0 / n_obs
    basis = np.column_stack([np.ones_like(x), x, x * x, x**3])
    w = np.sqrt(weights)
    coefs = np.empty((quants.shape[1], 4))
    a = basis * w[:, None]
    for j in range(quants.shape[1]):
        coefs[j], *_ = np.linalg.lstsq(a, quants[:, j] * w, rcond=None)
    return coefs


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="tiny replication counts (plumbing check)")
    ap.add_argument("--out", default="src/regimevar/stattests/_surfaces_data.py")
    args = ap.parse_args()

    t0 = time.time()
    surfaces: dict[str, dict[int, np.ndarray]] = {}
    n_min: dict[str, dict[int, int]] = {}
    for spec_idx, spec in enumerate(SPECS):
        surfaces[spec] = {}
        n_min[spec] = {}
        for dim in range(1, MAX_DIM + 1):
            grid = t_grid_for_dim(dim)
            qrows = np.empty((len(grid), len(P_NODES)))
            weights = np.empty(len(grid))
            for i, t in enumerate(grid):
                reps = reps_for_cell(spec, dim, t, args.quick)
                ss = np.random.SeedSequence([MASTER_SEED, spec_idx, dim, t])
                rng = np.random.Generator(np.random.PCG64(ss))
                taus = tau_cell(spec, dim, t, reps, rng)
                qrows[i] = np.quantile(taus, P_NODES)
                weights[i] = reps
            nobs = np.array([t - 1 for t in grid], dtype=float)
            surfaces[spec][dim] = fit_surface(nobs, qrows, weights)
            n_min[spec][dim] = int(nobs[0])
            print(
                f"[{time.time() - t0:8.1f}s] {spec:>14s} dim={dim:2d} "
                f"grid={len(grid)} q05(n={int(nobs[0])})={qrows[0, P_NODES.index(0.045)]:.3f}",
                flush=True,
            )

    lines = [
        '"""Simulated finite-sample quantile response surfaces for tau statistics.',
        "",
        "Generated by tools/gen_mackinnon_surfaces.py — do not edit by hand.",
        "Evaluate a node quantile as",
        "    q_p(n) = c[0] + c[1]/n + c[2]/n**2 + c[3]/n**3",
        "with n clamped below at N_MIN[spec][dim] (the smallest simulated size).",
        f'Master seed: {MASTER_SEED}; quick mode: {args.quick}.',
        '"""',
        "",
        f"P_NODES = {P_NODES!r}",
        "",
        "SURFACES = {",
    ]
    for spec in SPECS:
        lines.append(f"    {spec!r}: {{")
        for dim in range(1, MAX_DIM + 1):
            rows = ",\n         ".join(
                "(" + ", ".join(f"{v:.6f}" for v in row) + ")"
                for row in surfaces[spec][dim]
            )
            lines.append(f"        {dim}: ({rows}),")
        lines.append("    },")
    lines.append("}")
    lines.append("")
    lines.append(f"N_MIN = {n_min!r}")
    lines.append("")

    with open(args.out, "w") as fh:
        fh.write("\n".join(lines))
    print(f"wrote {args.out} in {time.time() - t0:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
