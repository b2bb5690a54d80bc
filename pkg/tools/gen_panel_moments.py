#!/usr/bin/env python
"""Generate finite-sample moment tables for the pooled and group-mean panel tests.

Two families of constants are simulated here, both under the random-walk
null, and written to ``src/regimevar/stattests/_panel_moments.py``:

1. Pooled-test mean/std adjustments ``mu*``, ``sigma*`` indexed by the
   per-entity regression length ``t_tilde``.  Per replication, one entity's
   standardized components are drawn:

       e~, v~  = innovation/level residuals after removing deterministics,
                 scaled by the entity innovation std
       a       = sum(e~ * v~),   b = sum(v~ ** 2)
       S       = Bartlett long-run / innovation std ratio, same kernel and
                 truncation rule the pooled test applies

   and the adjustments are ``mu* = E[a] / (t_tilde * E[S])`` and
   ``sigma* = sqrt(Var[a - t_tilde * mu* * S] / E[b])`` (times a
   degrees-of-freedom factor for the pooled residual variance), so that
   the adjusted pooled t-ratio

       t* = (t_delta - N * t_tilde * S_N * sigma_eps^-2 * STD(delta) * mu*) / sigma*

   is standard normal *with the in-sample kernel ratio S_N plugged in*:
   calibrating mu* jointly with S absorbs the kernel's finite-sample bias,
   which would otherwise shift the centering term and distort test size.

2. Group-mean test moments ``E[t]``, ``Var[t]`` of the augmented
   Dickey-Fuller t-statistic, indexed by (regression observations, lag
   order), used to standardize the cross-entity average t to a W statistic.

The simulated regressions follow exactly the conventions of
``regimevar.stattests`` (dof-adjusted variance with ``n - k`` in the
denominator), so the tables are internally consistent with the test code.

Usage
-----
    python tools/gen_panel_moments.py [--quick] [--out PATH]
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

MASTER_SEED = 20260402

POOLED_MODELS = ("none", "constant", "trend")
GROUP_MODELS = ("constant", "trend")

TT_GRID = (18, 22, 26, 30, 38, 46, 56, 70, 90, 120, 160, 220, 320, 500, 1000)
NOBS_GRID = (15, 18, 22, 26, 30, 38, 46, 56, 70, 90, 120, 160, 220, 320, 500, 1000)
LAG_GRID = (0, 1, 2, 3, 4)


def det_matrix(t: int, model: str) -> np.ndarray | None:
    if model == "none":
        return None
    cols = [np.ones(t)]
    if model == "trend":
        cols.append(np.arange(1.0, t + 1.0))
    return np.column_stack(cols)


def residualize(y: np.ndarray, det: np.ndarray | None) -> np.ndarray:
    """Residual of each row of y (m, t) on fixed columns det (t, k)."""
    if det is None:
        return y
    q, _ = np.linalg.qr(det)
    return y - (y @ q) @ q.T


def pooled_cell(model: str, t_tilde: int, reps: int, rng: np.random.Generator):
    """One (mu*, sigma*) cell: joint moments of a = sum(e~ v~), b = sum(v~^2)
    and the Bartlett kernel ratio S, mirroring the pooled test exactly."""
    ndet = 0 if model == "none" else (1 if model == "constant" else 2)
    t_raw = t_tilde + 1
    truncation = min(int(np.floor(3.21 * t_raw ** (1.0 / 3.0))), t_tilde - 1)
    a_all = np.empty(reps)
    b_all = np.empty(reps)
    s_all = np.empty(reps)
    chunk = max(1, int(4.0e6 / t_raw))
    done = 0
    det = det_matrix(t_tilde, model)
    while done < reps:
        m = min(chunk, reps - done)
        y = rng.standard_normal((m, t_raw)).cumsum(axis=1)
        dy = np.diff(y, axis=1)
        yl = y[:, :-1]
        e = residualize(dy, det)
        v = residualize(yl, det)
        svv = np.einsum("mt,mt->m", v, v)
        sev = np.einsum("mt,mt->m", e, v)
        delta = sev / svv
        resid = e - delta[:, None] * v
        s2 = np.einsum("mt,mt->m", resid, resid) / (t_tilde - ndet - 1)
        u = dy if model == "none" else dy - dy.mean(axis=1, keepdims=True)
        long_run = np.einsum("mt,mt->m", u, u) / t_tilde
        for j in range(1, truncation + 1):
            weight = 1.0 - j / (truncation + 1.0)
            lagged = np.einsum("mt,mt->m", u[:, j:], u[:, : t_tilde - j])
            long_run += 2.0 * weight * lagged / t_tilde
        a_all[done : done + m] = sev / s2
        b_all[done : done + m] = svv / s2
        s_all[done : done + m] = np.sqrt(np.maximum(long_run, 1e-300) / s2)
        done += m
    mu = a_all.mean() / (t_tilde * s_all.mean())
    centered = a_all - (a_all.mean() / s_all.mean()) * s_all
    dof_factor = t_tilde / (t_tilde - ndet - 1.0)
    sigma = float(np.sqrt(centered.var() / b_all.mean() * dof_factor))
    return float(mu), sigma


def adf_t_cell(model: str, n_obs: int, p: int, reps: int, rng: np.random.Generator):
    """Moments of the ADF t-statistic with p lags over a driftless-walk null."""
    ndet = 1 if model == "constant" else 2
    k = 1 + p + ndet
    t_raw = n_obs + p + 1
    det = det_matrix(n_obs, model)
    taus = np.empty(reps)
    chunk = max(1, int(4.0e6 / (t_raw * (k + 1))))
    done = 0
    while done < reps:
        m = min(chunk, reps - done)
        y = rng.standard_normal((m, t_raw)).cumsum(axis=1)
        dy = np.diff(y, axis=1)
        lhs = dy[:, p:]
        x = np.empty((m, n_obs, k))
        x[:, :, 0] = y[:, p:-1]
        for j in range(1, p + 1):
            x[:, :, j] = dy[:, p - j : t_raw - 1 - j]
        x[:, :, 1 + p :] = det[None, :, :]
        xtx = np.einsum("mti,mtj->mij", x, x)
        xty = np.einsum("mti,mt->mi", x, lhs)
        beta = np.linalg.solve(xtx, xty[..., None])[..., 0]
        e = lhs - np.einsum("mti,mi->mt", x, beta)
        s2 = np.einsum("mt,mt->m", e, e) / (n_obs - k)
        inv00 = np.linalg.inv(xtx)[:, 0, 0]
        taus[done : done + m] = beta[:, 0] / np.sqrt(s2 * inv00)
        done += m
    return float(taus.mean()), float(taus.var())


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--out", default="src/regimevar/stattests/_panel_moments.py")
    ap.add_argument(
        "--reuse-group",
        action="store_true",
        help="copy GROUP_MOMENTS from the existing output instead of resimulating"
        " (cell seeds are independent, so a full run reproduces the same values)",
    )
    args = ap.parse_args()
    t0 = time.time()

    pooled: dict[str, list[tuple[int, float, float]]] = {}
    for mi, model in enumerate(POOLED_MODELS):
        rows = []
        for tt in TT_GRID:
            reps = 4000 if args.quick else min(1_000_000, max(150_000, int(4.0e7 / tt)))
            ss = np.random.SeedSequence([MASTER_SEED, 1, mi, tt])
            rng = np.random.Generator(np.random.PCG64(ss))
            mu, sigma = pooled_cell(model, tt, reps, rng)
            rows.append((tt, mu, sigma))
            print(f"[{time.time()-t0:8.1f}s] pooled {model:>8s} T~={tt:4d} mu*={mu:+.4f} sigma*={sigma:.4f}", flush=True)
        pooled[model] = rows

    group: dict[str, dict[int, list[tuple[int, float, float]]]] = {}
    if args.reuse_group:
        import importlib.util

        module_spec = importlib.util.spec_from_file_location("_panel_moments_prev", args.out)
        prev = importlib.util.module_from_spec(module_spec)
        module_spec.loader.exec_module(prev)
        group = {model: dict(prev.GROUP_MOMENTS[model]) for model in GROUP_MODELS}
        print(f"[{time.time()-t0:8.1f}s] group moments reused from {args.out}", flush=True)
    else:
        for mi, model in enumerate(GROUP_MODELS):
            group[model] = {}
            for p in LAG_GRID:
                rows = []
                for n in NOBS_GRID:
                    reps = 3000 if args.quick else min(800_000, max(120_000, int(2.5e7 / n)))
                    ss = np.random.SeedSequence([MASTER_SEED, 2, mi, p, n])
                    rng = np.random.Generator(np.random.PCG64(ss))
                    mean, var = adf_t_cell(model, n, p, reps, rng)
                    rows.append((n, mean, var))
                group[model][p] = rows
                print(f"[{time.time()-t0:8.1f}s] group {model:>8s} p={p} E[t](n=30)={group[model][p][4][1]:+.4f}", flush=True)

    lines = [
        '"""Simulated finite-sample moments for the panel unit-root tests.',
        "",
        "Generated by tools/gen_panel_moments.py — do not edit by hand.",
        "POOLED_ADJUSTMENTS[model] rows: (t_tilde, mu_star, sigma_star).",
        "GROUP_MOMENTS[model][p] rows: (n_obs, mean_t, var_t).",
        f'Master seed: {MASTER_SEED}; quick mode: {args.quick}.',
        '"""',
        "",
        "POOLED_ADJUSTMENTS = {",
    ]
    for model in POOLED_MODELS:
        rows = ",\n        ".join(
            f"({tt}, {mu:.5f}, {sg:.5f})" for tt, mu, sg in pooled[model]
        )
        lines.append(f"    {model!r}: ({rows}),")
    lines.append("}")
    lines.append("")
    lines.append("GROUP_MOMENTS = {")
    for model in GROUP_MODELS:
        lines.append(f"    {model!r}: {{")
        for p in LAG_GRID:
            rows = ",\n            ".join(
                f"({n}, {mean:.5f}, {var:.5f})" for n, mean, var in group[model][p]
            )
            lines.append(f"        {p}: ({rows}),")
        lines.append("    },")
    lines.append("}")
    lines.append("")

    with open(args.out, "w") as fh:
        fh.write("\n".join(lines))
    print(f"wrote {args.out} in {time.time() - t0:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
