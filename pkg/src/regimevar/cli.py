"""Command-line pipeline: derive, test, fit, analyze, compare, simulate.

Every subcommand reads options from a flat key=value config file
(``--config PATH``) and accepts a same-named command-line flag for each
key (``--out-dir`` overrides ``out_dir``). Machine outputs print floats
at 17 significant digits; human tables round to 4 decimals.

Config keys
-----------
shared      input (long CSV: entity,period,variable,value), out_dir,
            entities (comma list; default all), seed, threads
derive      consumption_var, income_var, rate_var, beta_formula
test        test_variables (default var_variables), det_spec,
            eg_regressors ("others" or comma list)
fit         var_variables (equation order = report/ordering columns),
            covid_var (optional exogenous 0/1 dummy), n_regimes, n_lags,
            switching_intercepts, n_starts, n_candidates, screen_iters,
            em_iters, qn_iters, restrict_lags (CSV zero-pattern mask,
            n_lags*n_vars rows x n_vars columns, 1 = free)
analyze     horizons, regime ("ergodic" or a 1-based regime number),
            allow_unstable
compare     compare_variables (outcome columns; default the first four
            fitted variables), compare_regressors (rows of the
            common-coefficient table; default the remaining variables)
simulate    sim_n_vars, sim_n_regimes, sim_n_lags, sim_t, sim_burn_in,
            sim_separation, sim_replications

Per-entity artifacts land in ``out_dir/<entity>/``; cross-entity tables
land in ``out_dir``. Exit code is 0 iff no errors; warnings never
change it.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace

import numpy as np

from .config import Config
from .consumption import ConsumptionInputs, impc_series, mpc_series
from .data_model import PanelDataset, Period, TimeSeries, difference, emit_csv, load_csv
from .dynamics import fevd, fevd_csv, irf, irf_csv, is_stable
from .errors import (
    ConfigError,
    InvalidParameter,
    MissingVariable,
    NoVariables,
    RegimevarError,
)
from .msvar import (
    FitOptions,
    MsVarParams,
    MsVarSpec,
    SwitchingFlags,
    estimation_table_csv,
    fit as fit_msvar,
    fit_result_to_json,
    params_from_json,
    regime_probability_csv,
)
from .serialize import format_sig, to_json
from .stattests import (
    CointegrationReport,
    TestReport,
    adf_test,
    breitung_test,
    cointegration_table_csv,
    engle_granger,
    fisher_combine,
    ips_test,
    llc_test,
    pp_test,
    reports_to_json,
    unit_root_table_csv,
)
from .svg import small_multiples
from .synthlab import DgpConfig, ExogPattern, recovery_experiment, simulate


# --- shared helpers -----------------------------------------------------------

def _load_panel(config: Config) -> PanelDataset:
    return load_csv(config.get_str("input"))


def _entities(config: Config, panel: PanelDataset) -> list[str]:
    wanted = config.get_list("entities", None)
    if not wanted:
        return list(panel.entities)
    for entity in wanted:
        if entity not in panel.entities:
            raise ConfigError(f"entity {entity!r} not present in the input panel")
    return wanted


def _require_variables(panel: PanelDataset, entity: str, variables) -> None:
    for variable in variables:
        if not panel.has(entity, variable):
            raise MissingVariable(entity, variable)


def _safe_name(text: str) -> str:
    return "".join(ch if ch.isalnum() or ch in "-_." else "_" for ch in text) or "_"


def _write_files(files: dict[str, str]) -> list[str]:
    for path, content in files.items():
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(content)
    return list(files)


def _map_entities(fn, entities, threads: int):
    """Apply fn across entities (thread pool when asked); results come
    back in entity order, so downstream writes are deterministic."""
    if threads > 1 and len(entities) > 1:
        with ThreadPoolExecutor(max_workers=min(threads, len(entities))) as pool:
            return list(pool.map(fn, entities))
    return [fn(entity) for entity in entities]


def _common_series(panel: PanelDataset, entity: str, variables) -> list[TimeSeries]:
    """The entity's series restricted to their common period window."""
    _require_variables(panel, entity, variables)
    series = [panel.series(entity, v) for v in variables]
    start = max(s.start for s in series)
    end = min(s.end for s in series)
    if end - start < 0:
        raise ConfigError(f"entity {entity!r}: series windows do not overlap")
    return [s.window(start, end) for s in series]


def _finite_window(series_list: list[TimeSeries], entity: str):
    """Trim jointly-missing edges; interior NaN is an error."""
    values = np.column_stack([s.values for s in series_list])
    finite = np.isfinite(values).all(axis=1)
    if not finite.any():
        raise ConfigError(f"entity {entity!r}: no jointly observed periods")
    first, last = int(np.argmax(finite)), len(finite) - 1 - int(np.argmax(finite[::-1]))
    inner = values[first : last + 1]
    if not np.isfinite(inner).all():
        bad = series_list[int(np.argmin(np.isfinite(inner).all(axis=0)))].name
        raise InvalidParameter(f"entity {entity!r}: interior missing values in {bad!r}")
    return series_list[0].start + first, inner


# --- derive -------------------------------------------------------------------

def cmd_derive(config: Config) -> list[str]:
    """Compute MPC and IMPC per entity and write the augmented dataset."""
    panel = _load_panel(config)
    entities = _entities(config, panel)
    roles = [config.get_str(key) for key in ("consumption_var", "income_var", "rate_var")]
    beta_formula = config.get_str("beta_formula", "standard")
    out_dir = config.get_str("out_dir", "out")

    grid = dict(panel.grid)
    for entity in entities:
        c, y, r = _common_series(panel, entity, roles)
        inputs = ConsumptionInputs(consumption=c, income=y, interest_rate=r)
        grid[(entity, "MPC")] = mpc_series(inputs)
        grid[(entity, "IMPC")] = impc_series(inputs, beta_formula)
    variables = list(panel.variables)
    for name in ("IMPC", "MPC"):
        if name not in variables:
            variables.append(name)
    augmented = PanelDataset(
        entities=panel.entities, variables=tuple(sorted(variables)), grid=grid
    )
    path = os.path.join(out_dir, "augmented.csv")
    os.makedirs(out_dir, exist_ok=True)
    emit_csv(augmented, path)
    return [path]


# --- test ---------------------------------------------------------------------

def _country_panel(series_list: list[TimeSeries]) -> PanelDataset:
    """The within-country panel: each macro series becomes one
    cross-section member (the published tables pool the country's eight
    series, 'Cross-Sections 8')."""
    grid = {
        (s.name, "V"): TimeSeries("V", s.start, s.values) for s in series_list
    }
    return PanelDataset(
        entities=tuple(s.name for s in series_list), variables=("V",), grid=grid
    )


def _battery(series_list: list[TimeSeries], spec: str) -> list[TestReport]:
    panel = _country_panel(series_list)
    adf_reports = [adf_test(s, spec) for s in series_list]
    pp_reports = [pp_test(s, spec) for s in series_list]

    def combined(per_series: list[TestReport], name: str) -> TestReport:
        # mackinnon_pvalue underflows to exactly 0 for extreme statistics;
        # floor before combining so Fisher keeps its (0, 1] domain.
        report = fisher_combine(
            [max(r.p_value, 1e-300) for r in per_series], test_name=name
        )
        return replace(
            report,
            observations=sum(r.observations for r in per_series),
            deterministic_spec=spec,
        )

    return [
        llc_test(panel, "V", spec),
        breitung_test(panel, "V"),
        ips_test(panel, "V", spec),
        combined(adf_reports, "adf_fisher"),
        combined(pp_reports, "pp_fisher"),
    ]


def cmd_test(config: Config) -> list[str]:
    """Unit-root battery (levels and first differences) plus the
    cointegration grid, in the published table layouts."""
    panel = _load_panel(config)
    entities = _entities(config, panel)
    variables = config.get_list("test_variables", None) or config.get_list(
        "var_variables", None
    )
    if variables is None:
        variables = list(panel.variables)
    if not variables:
        raise NoVariables("no variables configured for testing")
    spec = config.get_str("det_spec", "constant")
    eg_setting = config.get_str("eg_regressors", "others")
    out_dir = config.get_str("out_dir", "out")
    threads = config.get_int("threads", 1)

    def run_entity(entity: str):
        series_list = _common_series(panel, entity, variables)
        levels = _battery(series_list, spec)
        diffed = [difference(s, 1) for s in series_list]
        diffs = _battery(diffed, spec)
        grid: dict[str, CointegrationReport] = {}
        for i, dependent in enumerate(variables):
            if eg_setting == "others":
                regressors = [s for j, s in enumerate(series_list) if j != i]
            else:
                names = [v for v in config.get_list("eg_regressors") if v != dependent]
                regressors = [series_list[variables.index(v)] for v in names]
            grid[dependent] = engle_granger(series_list[i], regressors, spec)
        return levels, diffs, grid

    results = _map_entities(run_entity, entities, threads)
    level_rows = [(e, r) for e, (levels, _, _) in zip(entities, results) for r in levels]
    diff_rows = [(e, r) for e, (_, diffs, _) in zip(entities, results) for r in diffs]
    eg_grid = {e: grid for e, (_, _, grid) in zip(entities, results)}

    files = {
        os.path.join(out_dir, "unit_root_levels.csv"): unit_root_table_csv(level_rows),
        os.path.join(out_dir, "unit_root_differences.csv"): unit_root_table_csv(diff_rows),
        os.path.join(out_dir, "cointegration.csv"): cointegration_table_csv(eg_grid),
        os.path.join(out_dir, "tests.json"): reports_to_json(
            {
                "levels": {e: list(levels) for e, (levels, _, _) in zip(entities, results)},
                "first_differences": {
                    e: list(diffs) for e, (_, diffs, _) in zip(entities, results)
                },
                "cointegration": eg_grid,
            }
        ),
    }
    return _write_files(files)


# --- fit ----------------------------------------------------------------------

def _fit_options(config: Config) -> FitOptions:
    defaults = FitOptions()
    return FitOptions(
        n_starts=config.get_int("n_starts", defaults.n_starts),
        n_candidates=config.get_int("n_candidates", defaults.n_candidates),
        screen_iters=config.get_int("screen_iters", defaults.screen_iters),
        em_iters=config.get_int("em_iters", defaults.em_iters),
        qn_iters=config.get_int("qn_iters", defaults.qn_iters),
        seed=config.get_int("seed", 0),
        threads=config.get_int("threads", 1),
    )


def _lag_mask(config: Config, spec: MsVarSpec):
    path = config.get_str("restrict_lags", "")
    if not path or path.lower() == "none":
        return None
    try:
        raw = np.loadtxt(path, delimiter=",", ndmin=2)
    except (OSError, ValueError) as exc:
        raise ConfigError(f"cannot read lag mask {path}: {exc}") from exc
    expected = (spec.n_lags * spec.n_vars, spec.n_vars)
    if raw.shape != expected:
        raise ConfigError(
            f"lag mask {path}: expected shape {expected} "
            f"(n_lags*n_vars rows x n_vars columns), got {raw.shape}"
        )
    return raw.reshape(spec.n_lags, spec.n_vars, spec.n_vars)


def cmd_fit(config: Config) -> list[str]:
    """Estimate the switching VAR per entity; write the estimation
    table, the machine-readable fit, and the regime probabilities."""
    panel = _load_panel(config)
    entities = _entities(config, panel)
    variables = config.get_list("var_variables", None)
    if not variables:
        raise NoVariables("var_variables must list the endogenous variables")
    covid_var = config.get_str("covid_var", "")
    spec = MsVarSpec(
        n_vars=len(variables),
        n_regimes=config.get_int("n_regimes", 3),
        n_lags=config.get_int("n_lags", 1),
        has_exog_dummy=bool(covid_var),
        switching=SwitchingFlags(intercept=config.get_bool("switching_intercepts", True)),
    )
    options = _fit_options(config)
    mask = _lag_mask(config, spec)
    out_dir = config.get_str("out_dir", "out")

    def run_entity(entity: str):
        wanted = list(variables) + ([covid_var] if covid_var else [])
        series_list = _common_series(panel, entity, wanted)
        start, matrix = _finite_window(series_list, entity)
        if covid_var:
            panel.covid_dummy(entity, covid_var)  # validates 0/1 values
            data, exog = matrix[:, :-1], matrix[:, -1]
        else:
            data, exog = matrix, None
        result = fit_msvar(data, exog, spec, options=options, lag_mask=mask)
        periods = [str(start + spec.n_lags + t) for t in range(result.filter.smoothed.shape[0])]
        base = os.path.join(out_dir, _safe_name(entity))
        return {
            os.path.join(base, "estimation_table.csv"): estimation_table_csv(
                result, variables
            ),
            os.path.join(base, "fit.json"): fit_result_to_json(result, variables),
            os.path.join(base, "regime_probabilities.csv"): regime_probability_csv(
                result, periods
            ),
        }

    written: list[str] = []
    for files in _map_entities(run_entity, entities, options.threads):
        written.extend(_write_files(files))
    return written


# --- analyze ------------------------------------------------------------------

def _load_fit(out_dir: str, entity: str):
    path = os.path.join(out_dir, _safe_name(entity), "fit.json")
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(
            f"no stored fit for entity {entity!r} at {path} (run the fit command first)"
        ) from exc
    return params_from_json(text)


def _analysis_entities(config: Config) -> list[str]:
    wanted = config.get_list("entities", None)
    if wanted:
        return wanted
    out_dir = config.get_str("out_dir", "out")
    try:
        found = sorted(
            name
            for name in os.listdir(out_dir)
            if os.path.isfile(os.path.join(out_dir, name, "fit.json"))
        )
    except OSError:
        found = []
    if not found:
        raise ConfigError(f"no stored fits under {out_dir!r} and no entities configured")
    return found


def _regime_choice(config: Config, n_regimes: int):
    raw = config.get_str("regime", "ergodic")
    if raw == "ergodic":
        return "ergodic", "ergodic"
    try:
        number = int(raw)
    except ValueError:
        raise ConfigError(f"regime must be 'ergodic' or a regime number, got {raw!r}") from None
    if not 1 <= number <= n_regimes:
        raise ConfigError(f"regime {number} outside 1..{n_regimes}")
    return number - 1, str(number)


def cmd_analyze(config: Config) -> list[str]:
    """IRF and FEVD artifacts from stored fits: human FEVD table,
    machine IRF CSV, one SVG per shock, and a machine JSON."""
    out_dir = config.get_str("out_dir", "out")
    entities = _analysis_entities(config)
    horizons = config.get_int("horizons", 24)
    if horizons < 0:
        raise ConfigError("horizons must be >= 0")
    allow_unstable = config.get_bool("allow_unstable", False)
    threads = config.get_int("threads", 1)

    def run_entity(entity: str):
        spec, params, variables = _load_fit(out_dir, entity)
        regime_for_cov, regime_label = _regime_choice(config, spec.n_regimes)
        stability = is_stable(params.lag_matrices)
        impulse = irf(params, regime_for_cov, horizons, allow_unstable=allow_unstable)
        decomp = fevd(
            params, regime_for_cov, max(horizons, 1), allow_unstable=allow_unstable
        )
        base = os.path.join(out_dir, _safe_name(entity))
        files = {
            os.path.join(base, "fevd.csv"): fevd_csv(decomp, variables),
            os.path.join(base, "irf.csv"): irf_csv(impulse, variables),
            os.path.join(base, "analysis.json"): to_json(
                {
                    "horizons": horizons,
                    "regime": regime_label,
                    "stability": {
                        "stable": stability.stable,
                        "spectral_radius": stability.spectral_radius,
                    },
                    "fevd_shares": decomp.shares,
                    "fevd_std_errors": decomp.std_errors,
                    "irf_responses": impulse.responses,
                    "variables": variables,
                }
            ),
        }
        for j, shock in enumerate(variables):
            panels = [
                (f"{resp} response", impulse.responses[:, i, j])
                for i, resp in enumerate(variables)
            ]
            chart = small_multiples(f"Impulse responses to a {shock} shock", panels)
            files[os.path.join(base, f"irf_{_safe_name(shock)}.svg")] = chart
        return files

    written: list[str] = []
    for files in _map_entities(run_entity, entities, threads):
        written.extend(_write_files(files))
    return written


# --- compare ------------------------------------------------------------------

def _comparison_tables(config: Config, fits: dict):
    entities = list(fits)
    first_vars = fits[entities[0]][2]
    outcomes = config.get_list("compare_variables", None) or first_vars[:4]
    regressors = config.get_list("compare_regressors", None) or (
        [v for v in first_vars if v not in outcomes] or list(first_vars)
    )
    for entity, (spec, params, variables) in fits.items():
        for needed in list(outcomes) + list(regressors):
            if needed not in variables:
                raise MissingVariable(entity, needed)

    covid_lines = []
    with_dummy = [e for e in entities if fits[e][0].has_exog_dummy]
    if with_dummy:
        header = ["Variable"]
        for entity in with_dummy:
            header.extend(
                f"{entity} (Regime {s + 1})" for s in range(fits[entity][0].n_regimes)
            )
        covid_lines.append(",".join(f'"{h}"' if "," in h else h for h in header))
        for variable in outcomes:
            row = [variable]
            for entity in with_dummy:
                spec, params, variables = fits[entity]
                i = variables.index(variable)
                row.extend(f"{params.exog_loadings[s, i]:.4f}" for s in range(spec.n_regimes))
            covid_lines.append(",".join(row))

    common_lines = []
    header = ["Common Coefficient"]
    for entity in entities:
        header.extend(f"{entity} {name}" for name in outcomes)
    common_lines.append(",".join(header))
    for regressor in regressors:
        row = [regressor]
        for entity in entities:
            spec, params, variables = fits[entity]
            j = variables.index(regressor)
            row.extend(
                f"{params.lag_matrices[0][variables.index(name), j]:.4f}"
                for name in outcomes
            )
        common_lines.append(",".join(row))

    payload = {
        "covid_loadings": {
            entity: {
                "variables": fits[entity][2],
                "loadings": fits[entity][1].exog_loadings,
            }
            for entity in with_dummy
        },
        "common_lag_coefficients": {
            entity: {
                "variables": fits[entity][2],
                "lag_matrices": fits[entity][1].lag_matrices,
            }
            for entity in entities
        },
        "outcome_variables": list(outcomes),
        "regressors": list(regressors),
    }
    covid_csv = "\n".join(covid_lines) + "\n" if covid_lines else ""
    return covid_csv, "\n".join(common_lines) + "\n", to_json(payload)


def cmd_compare(config: Config) -> list[str]:
    """Cross-entity comparison tables assembled from stored fits."""
    out_dir = config.get_str("out_dir", "out")
    entities = _analysis_entities(config)
    fits = {entity: _load_fit(out_dir, entity) for entity in entities}
    covid_csv, common_csv, payload = _comparison_tables(config, fits)
    files = {
        os.path.join(out_dir, "comparison_common.csv"): common_csv,
        os.path.join(out_dir, "comparison.json"): payload,
    }
    if covid_csv:
        files[os.path.join(out_dir, "comparison_covid.csv")] = covid_csv
    return _write_files(files)


# --- simulate -----------------------------------------------------------------

def _demo_params(n: int, r: int, lags: int, separation: float) -> MsVarParams:
    """A well-separated demonstration DGP: regime intercept ladder at
    ``separation`` residual standard deviations, mildly persistent
    common dynamics, and an ascending dummy-loading ladder."""
    sigma = 0.05
    centers = (np.arange(r) - (r - 1) / 2.0) * separation * sigma
    intercepts = np.tile(centers[:, None], (1, n))
    loadings = np.tile((np.arange(r) + 1.0)[:, None] * sigma, (1, n))
    lag_matrices = np.zeros((lags, n, n))
    lag_matrices[0] = 0.4 * np.eye(n)
    for lag in range(1, lags):
        lag_matrices[lag] = 0.1 / lag * np.eye(n)
    covariances = np.tile(sigma**2 * np.eye(n), (r, 1, 1))
    if r > 1:
        p = np.full((r, r), 0.1 / (r - 1))
        np.fill_diagonal(p, 0.9)
        logits = np.log(p[:, :-1]) - np.log(p[:, -1:])
    else:
        logits = np.zeros((1, 0))
    return MsVarParams(
        intercepts=intercepts,
        exog_loadings=loadings,
        lag_matrices=lag_matrices,
        covariances=covariances,
        transition_logits=logits,
    )


def cmd_simulate(config: Config) -> list[str]:
    """Simulate the demonstration DGP to a loadable dataset (plus the
    truth), and optionally run a recovery experiment over it."""
    n = config.get_int("sim_n_vars", 3)
    r = config.get_int("sim_n_regimes", 3)
    lags = config.get_int("sim_n_lags", 1)
    t = config.get_int("sim_t", 400)
    burn_in = config.get_int("sim_burn_in", 100)
    separation = config.get_float("sim_separation", 5.0)
    replications = config.get_int("sim_replications", 0)
    seed = config.get_int("seed", 0)
    out_dir = config.get_str("out_dir", "out")
    threads = config.get_int("threads", 1)

    spec = MsVarSpec(n_vars=n, n_regimes=r, n_lags=lags, has_exog_dummy=True)
    params = _demo_params(n, r, lags, separation)
    dgp = DgpConfig(
        spec=spec,
        true_params=params,
        t=t,
        seed=seed,
        burn_in=burn_in,
        exog_pattern=ExogPattern.step(t // 3, 2 * t // 3),
    )
    sim = simulate(dgp)

    start = Period(1960, 1)
    variables = [f"V{i + 1}" for i in range(n)]
    grid = {
        ("SIM", name): TimeSeries(name, start, sim.data[:, i])
        for i, name in enumerate(variables)
    }
    grid[("SIM", "COVID_SHOCK")] = TimeSeries("COVID_SHOCK", start, sim.exog)
    panel = PanelDataset(
        entities=("SIM",), variables=tuple(sorted(variables + ["COVID_SHOCK"])), grid=grid
    )
    base = os.path.join(out_dir, "sim")
    os.makedirs(base, exist_ok=True)
    data_path = os.path.join(base, "data.csv")
    emit_csv(panel, data_path)

    regimes_lines = ["period,true_regime"]
    regimes_lines.extend(
        f"{start + i},{int(regime)}" for i, regime in enumerate(sim.true_regimes)
    )
    truth = {
        "spec": {
            "n_vars": n,
            "n_regimes": r,
            "n_lags": lags,
            "has_exog_dummy": True,
            "switching": {
                "intercept": True,
                "exog_loading": True,
                "covariance": True,
                "lag_coeffs": False,
            },
        },
        "variables": variables,
        "params": {
            "intercepts": params.intercepts,
            "exog_loadings": params.exog_loadings,
            "lag_matrices": params.lag_matrices,
            "covariances": params.covariances,
            "transition_logits": params.transition_logits,
            "transition_matrix": params.transition_matrix(),
        },
        "seed": seed,
    }
    files = {
        os.path.join(base, "true_regimes.csv"): "\n".join(regimes_lines) + "\n",
        os.path.join(base, "truth.json"): to_json(truth),
    }

    if replications > 0:
        report = recovery_experiment(
            dgp, _fit_options(config), n_replications=replications, threads=threads
        )
        rows = ["replication,succeeded,message,path_accuracy,loglik_gap,"
                + ",".join(f"{b}_max_abs" for b in sorted(report.outcomes[0].block_max_abs))]
        for o in report.outcomes:
            cells = [
                str(o.replication),
                "true" if o.succeeded else "false",
                '"' + o.message.replace('"', '""') + '"',
                format_sig(o.path_accuracy) if math.isfinite(o.path_accuracy) else "NaN",
                format_sig(o.loglik_gap) if math.isfinite(o.loglik_gap) else "NaN",
            ]
            cells.extend(
                format_sig(o.block_max_abs[b]) if math.isfinite(o.block_max_abs[b]) else "NaN"
                for b in sorted(o.block_max_abs)
            )
            rows.append(",".join(cells))
        files[os.path.join(base, "recovery.csv")] = "\n".join(rows) + "\n"
        files[os.path.join(base, "recovery.json")] = to_json(
            {
                "n_replications": report.n_replications,
                "outcomes": [
                    {
                        "replication": o.replication,
                        "succeeded": o.succeeded,
                        "message": o.message,
                        "path_accuracy": None
                        if math.isnan(o.path_accuracy)
                        else o.path_accuracy,
                        "loglik_gap": None if math.isnan(o.loglik_gap) else o.loglik_gap,
                        "block_max_abs": {
                            k: (None if math.isnan(v) else v)
                            for k, v in o.block_max_abs.items()
                        },
                        "block_rmse": {
                            k: (None if math.isnan(v) else v)
                            for k, v in o.block_rmse.items()
                        },
                    }
                    for o in report.outcomes
                ],
            }
        )
    return [data_path] + _write_files(files)


# --- entry point ---------------------------------------------------------------

COMMANDS = {
    "derive": cmd_derive,
    "test": cmd_test,
    "fit": cmd_fit,
    "analyze": cmd_analyze,
    "compare": cmd_compare,
    "simulate": cmd_simulate,
}

_STRING_FLAGS = (
    "input",
    "out_dir",
    "entities",
    "seed",
    "threads",
    "consumption_var",
    "income_var",
    "rate_var",
    "beta_formula",
    "test_variables",
    "det_spec",
    "eg_regressors",
    "var_variables",
    "covid_var",
    "n_regimes",
    "n_lags",
    "n_starts",
    "n_candidates",
    "screen_iters",
    "em_iters",
    "qn_iters",
    "restrict_lags",
    "horizons",
    "regime",
    "compare_variables",
    "compare_regressors",
    "sim_n_vars",
    "sim_n_regimes",
    "sim_n_lags",
    "sim_t",
    "sim_burn_in",
    "sim_separation",
    "sim_replications",
)
_BOOL_FLAGS = ("allow_unstable", "switching_intercepts")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regimevar",
        description="Regime-switching VAR pipeline: derive MPC/IMPC, run the "
        "unit-root/cointegration battery, fit the switching VAR, and emit "
        "IRF/FEVD and comparison artifacts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in COMMANDS.items():
        command = sub.add_parser(name, help=fn.__doc__.splitlines()[0])
        command.add_argument("--config", help="key=value config file")
        for key in _STRING_FLAGS:
            command.add_argument(f"--{key.replace('_', '-')}", dest=key)
        for key in _BOOL_FLAGS:
            command.add_argument(
                f"--{key.replace('_', '-')}",
                dest=key,
                action=argparse.BooleanOptionalAction,
                default=None,
            )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    overrides = {
        key: value
        for key, value in vars(args).items()
        if key not in ("command", "config")
    }
    try:
        config = Config.load(args.config) if args.config else Config({})
        config = config.with_overrides(overrides)
        for path in COMMANDS[args.command](config):
            print(path)
    except RegimevarError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
