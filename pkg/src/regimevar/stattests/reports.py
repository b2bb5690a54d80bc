"""Hypothesis-test report types and their table serializations.

``TestReport`` covers every unit-root statistic (series-level and panel)
and the Fisher combination; ``CointegrationReport`` covers the two-step
residual-based cointegration test. The CSV layouts mirror the published
tables: unit-root rows carry "Test Method, Test Statistic, p-Value,
Cross-Sections, Observations" grouped by null hypothesis, and the
cointegration grid holds one "Tau: ... p-value: ..." cell per variable
and entity.
"""

from __future__ import annotations

import io
from dataclasses import asdict, dataclass

from ..errors import InvalidParameter
from ..serialize import to_json

DETERMINISTIC_SPECS = ("none", "constant", "constant_trend")

# Display names and null-hypothesis grouping for the unit-root table.
TEST_LABELS = {
    "adf": "ADF t",
    "pp": "PP Z-t",
    "llc": "Levin, Lin & Chu t*",
    "breitung": "Breitung t-stat",
    "ips": "Im, Pesaran and Shin W-stat",
    "adf_fisher": "ADF - Fisher Chi-square",
    "pp_fisher": "PP - Fisher Chi-square",
    "fisher": "Fisher Chi-square",
}
COMMON_PROCESS_TESTS = ("llc", "breitung")
INDIVIDUAL_PROCESS_TESTS = ("ips", "adf_fisher", "pp_fisher", "adf", "pp", "fisher")


@dataclass(frozen=True)
class TestReport:
    """Statistic, p-value, and metadata for one hypothesis test."""

    test_name: str
    statistic: float
    p_value: float
    cross_sections: int
    observations: int
    deterministic_spec: str
    lags: int

    def __post_init__(self):
        if not 0.0 <= self.p_value <= 1.0:
            raise InvalidParameter(f"p_value {self.p_value} outside [0, 1]")
        if self.observations <= 0:
            raise InvalidParameter("observations must be positive")
        if self.deterministic_spec not in DETERMINISTIC_SPECS:
            raise InvalidParameter(
                f"deterministic_spec must be one of {DETERMINISTIC_SPECS}, "
                f"got {self.deterministic_spec!r}"
            )


@dataclass(frozen=True)
class CointegrationReport:
    """Residual-based cointegration test outcome for one dependent series."""

    dependent: str
    tau: float
    p_value: float
    residual_lags: int

    def __post_init__(self):
        if not 0.0 <= self.p_value <= 1.0:
            raise InvalidParameter(f"p_value {self.p_value} outside [0, 1]")


def _format_p(p: float) -> str:
    return f"{p:.4g}"


def unit_root_table_csv(rows: list[tuple[str, TestReport]]) -> str:
    """Unit-root battery as CSV in the published table layout.

    ``rows`` holds (entity, report) pairs; reports are grouped per entity
    under the common-process and individual-process null banners, in the
    order given within each group.
    """
    out = io.StringIO()
    out.write("Country,Test Method,Test Statistic,p-Value,Cross-Sections,Observations\n")
    entities: list[str] = []
    for entity, _ in rows:
        if entity not in entities:
            entities.append(entity)
    for entity in entities:
        reports = [r for e, r in rows if e == entity]
        groups = (
            ("Null: Unit Root (Common Process)", COMMON_PROCESS_TESTS),
            ("Null: Unit Root (Individual Process)", INDIVIDUAL_PROCESS_TESTS),
        )
        for banner, members in groups:
            chosen = [r for r in reports if r.test_name in members]
            if not chosen:
                continue
            out.write(f"{entity},{banner},,,,\n")
            for r in chosen:
                label = TEST_LABELS.get(r.test_name, r.test_name)
                out.write(
                    f',"{label}",{r.statistic:.4f},{_format_p(r.p_value)},'
                    f"{r.cross_sections},{r.observations}\n"
                )
    return out.getvalue()


def cointegration_table_csv(
    grid: dict[str, dict[str, CointegrationReport]],
) -> str:
    """Cointegration grid as CSV: one row per variable, one column per
    entity, cells in the published "Tau: ... p-value: ..." shape.

    ``grid`` maps entity -> variable -> report.
    """
    entities = sorted(grid)
    variables: list[str] = []
    for entity in entities:
        for variable in grid[entity]:
            if variable not in variables:
                variables.append(variable)
    out = io.StringIO()
    out.write("Variable," + ",".join(entities) + "\n")
    for variable in variables:
        cells = []
        for entity in entities:
            report = grid[entity].get(variable)
            if report is None:
                cells.append("")
            else:
                cells.append(
                    f'"Tau: {report.tau:.2f} p-value: {_format_p(report.p_value)}"'
                )
        out.write(f'"{variable}",' + ",".join(cells) + "\n")
    return out.getvalue()


def reports_to_json(obj) -> str:
    """Machine-readable JSON for a report, or any list/dict nesting of
    reports; floats print at 17 significant digits."""

    def encode(node):
        if isinstance(node, (TestReport, CointegrationReport)):
            return asdict(node)
        if isinstance(node, dict):
            return {str(k): encode(v) for k, v in node.items()}
        if isinstance(node, (list, tuple)):
            return [encode(v) for v in node]
        return node

    return to_json(encode(obj))
