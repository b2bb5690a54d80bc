"""Panel time-series data model: ingestion, validation, alignment, transforms.

The on-disk format is a long CSV ``entity,period,variable,value`` (header
required, arbitrary column names mapped via a schema). Periods are
``YYYYQn`` (quarterly) or ``YYYY`` (annual). Missing interior observations
are carried as explicit NaN sentinels and never imputed; operations that
need complete data fail loudly instead.

All types are immutable after construction; operations are pure functions,
so everything here is safe to share across threads.
"""

from __future__ import annotations

import csv
import math
import re
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DuplicateObservation,
    EmptyIntersection,
    MissingColumn,
    MissingVariable,
    MixedFrequency,
    NonBinaryDummy,
    OrderTooLarge,
    UnparseablePeriod,
    UnparseableValue,
)

QUARTERLY = "quarterly"
ANNUAL = "annual"

_PERIOD_RE = re.compile(r"^(\d{4})(?:[Qq]([1-4]))?$")


@dataclass(frozen=True, order=True)
class Period:
    """A calendar period: a quarter (quarter in 1..4) or a whole year."""

    year: int
    quarter: int | None = None

    def __post_init__(self):
        if self.quarter is not None and not 1 <= self.quarter <= 4:
            raise ValueError(f"quarter must be in 1..4, got {self.quarter}")

    @property
    def frequency(self) -> str:
        return ANNUAL if self.quarter is None else QUARTERLY

    @staticmethod
    def parse(text: str) -> "Period":
        m = _PERIOD_RE.match(text.strip())
        if m is None:
            raise ValueError(f"cannot parse period {text!r}")
        year, q = int(m.group(1)), m.group(2)
        return Period(year, int(q) if q is not None else None)

    def __str__(self) -> str:
        if self.quarter is None:
            return f"{self.year}"
        return f"{self.year}Q{self.quarter}"

    def __add__(self, steps: int) -> "Period":
        if self.quarter is None:
            return Period(self.year + steps)
        idx = self.year * 4 + (self.quarter - 1) + steps
        return Period(idx // 4, idx % 4 + 1)

    def __sub__(self, other: "Period") -> int:
        """Number of periods from ``other`` to ``self`` (same frequency)."""
        if self.frequency != other.frequency:
            raise MixedFrequency(f"cannot subtract {other} from {self}")
        if self.quarter is None:
            return self.year - other.year
        return (self.year * 4 + self.quarter) - (other.year * 4 + other.quarter)


def _frozen_values(values) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if arr.ndim != 1 or arr.size < 1:
        raise ValueError("values must be a non-empty 1-D sequence")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """Named sequence of real observations at a fixed frequency.

    NaN entries are explicit missing-value sentinels. ``values`` is frozen
    (a read-only array); construct a new series to transform.
    """

    name: str
    start: Period
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_values(self.values))

    @property
    def frequency(self) -> str:
        return self.start.frequency

    def __len__(self) -> int:
        return len(self.values)

    @property
    def end(self) -> Period:
        return self.start + (len(self) - 1)

    def period_at(self, i: int) -> Period:
        return self.start + i

    def window(self, start: Period, end: Period) -> "TimeSeries":
        """Sub-series on [start, end] (inclusive); must lie inside the series."""
        i0 = start - self.start
        i1 = end - self.start
        if i0 < 0 or i1 >= len(self) or i1 < i0:
            raise ValueError(f"window [{start}, {end}] outside series {self.name}")
        return TimeSeries(self.name, start, self.values[i0 : i1 + 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TimeSeries):
            return NotImplemented
        return (
            self.name == other.name
            and self.start == other.start
            and len(self) == len(other)
            and bool(np.array_equal(self.values, other.values, equal_nan=True))
        )


@dataclass(frozen=True, eq=False)
class PanelDataset:
    """Aligned collection of TimeSeries across entities and variables.

    ``grid`` maps (entity, variable) to a series; not every cell need be
    populated before :func:`align`. Entities and variables are kept in
    sorted order so the ingestion result is independent of file row order.
    """

    entities: tuple[str, ...]
    variables: tuple[str, ...]
    grid: dict[tuple[str, str], TimeSeries] = field(repr=False)

    def series(self, entity: str, variable: str) -> TimeSeries:
        try:
            return self.grid[(entity, variable)]
        except KeyError:
            raise MissingVariable(entity, variable) from None

    def has(self, entity: str, variable: str) -> bool:
        return (entity, variable) in self.grid

    def covid_dummy(self, entity: str, variable: str) -> TimeSeries:
        """The designated 0/1 exogenous dummy series for one entity."""
        s = self.series(entity, variable)
        ok = np.isnan(s.values) | (s.values == 0.0) | (s.values == 1.0)
        if not ok.all():
            raise NonBinaryDummy(
                f"dummy variable {variable!r} for {entity!r} has values outside {{0, 1}}"
            )
        return s

    def __eq__(self, other) -> bool:
        if not isinstance(other, PanelDataset):
            return NotImplemented
        return (
            self.entities == other.entities
            and self.variables == other.variables
            and self.grid.keys() == other.grid.keys()
            and all(self.grid[k] == other.grid[k] for k in self.grid)
        )


def _parse_value(text: str, row: int) -> float:
    t = text.strip()
    if t == "" or t.lower() == "nan":
        return math.nan
    try:
        return float(t)
    except ValueError:
        raise UnparseableValue(row, t) from None


def load_csv(path, schema: dict[str, str] | None = None) -> PanelDataset:
    """Read a long-format CSV into a PanelDataset.

    ``schema`` maps the roles 'entity', 'period', 'variable', 'value' to
    the actual column names in the file (defaults to the role names).
    Row order in the file does not affect the result.
    """
    roles = {"entity": "entity", "period": "period", "variable": "variable", "value": "value"}
    if schema:
        roles.update(schema)

    cells: dict[tuple[str, str], dict[Period, float]] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise MissingColumn("file has no header row")
        for role, col in roles.items():
            if col not in reader.fieldnames:
                raise MissingColumn(f"column {col!r} (role {role!r}) not in header")
        for lineno, row in enumerate(reader, start=2):
            entity = row[roles["entity"]].strip()
            variable = row[roles["variable"]].strip()
            try:
                period = Period.parse(row[roles["period"]])
            except ValueError:
                raise UnparseablePeriod(lineno, row[roles["period"]]) from None
            value = _parse_value(row[roles["value"]], lineno)
            key = (entity, variable)
            bucket = cells.setdefault(key, {})
            if period in bucket:
                raise DuplicateObservation(entity, variable, str(period))
            bucket[period] = value

    grid: dict[tuple[str, str], TimeSeries] = {}
    for (entity, variable), bucket in cells.items():
        freqs = {p.frequency for p in bucket}
        if len(freqs) > 1:
            raise MixedFrequency(f"({entity}, {variable}) mixes quarterly and annual periods")
        start = min(bucket)
        end = max(bucket)
        n = (end - start) + 1
        values = np.full(n, math.nan)
        for p, v in bucket.items():
            values[p - start] = v
        grid[(entity, variable)] = TimeSeries(variable, start, values)

    entities = tuple(sorted({e for e, _ in grid}))
    variables = tuple(sorted({v for _, v in grid}))
    return PanelDataset(entities, variables, grid)


def emit_csv(panel: PanelDataset, path) -> None:
    """Write a PanelDataset back to long CSV (17 significant digits).

    ``load_csv(emit_csv(p))`` reproduces ``p`` exactly: %.17g round-trips
    IEEE doubles and rows are emitted in sorted (entity, variable, period)
    order.
    """
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["entity", "period", "variable", "value"])
        for entity in panel.entities:
            for variable in panel.variables:
                if not panel.has(entity, variable):
                    continue
                s = panel.series(entity, variable)
                for i, v in enumerate(s.values):
                    text = "NaN" if math.isnan(v) else f"{v:.17g}"
                    writer.writerow([entity, str(s.period_at(i)), variable, text])


def difference(series: TimeSeries, order: int) -> TimeSeries:
    """Order-d difference; result length shrinks by ``order``."""
    if order < 1:
        raise ValueError("order must be a positive integer")
    if order >= len(series):
        raise OrderTooLarge(
            f"difference order {order} >= series length {len(series)} for {series.name!r}"
        )
    values = np.diff(series.values, n=order)
    return TimeSeries(f"{series.name}_d{order}", series.start + order, values)


def align(panel: PanelDataset) -> PanelDataset:
    """Trim every entity's series to the maximal common period window.

    Edge rows where any series of the entity holds a NaN sentinel are
    dropped; interior sentinels are kept and reported via a warning.
    Idempotent: aligning twice equals aligning once.
    """
    grid: dict[tuple[str, str], TimeSeries] = {}
    for entity in panel.entities:
        cols = [v for v in panel.variables if panel.has(entity, v)]
        if not cols:
            continue
        series = [panel.series(entity, v) for v in cols]
        freqs = {s.frequency for s in series}
        if len(freqs) > 1:
            raise MixedFrequency(f"entity {entity!r} mixes series frequencies")
        start = max(s.start for s in series)
        end = min(s.end for s in series)
        if end - start < 0:
            raise EmptyIntersection(entity)
        block = np.stack([s.window(start, end).values for s in series])
        ok = ~np.isnan(block).any(axis=0)
        if not ok.any():
            raise EmptyIntersection(entity)
        first = int(np.argmax(ok))
        last = len(ok) - 1 - int(np.argmax(ok[::-1]))
        interior = np.flatnonzero(~ok[first : last + 1])
        if interior.size:
            periods = ", ".join(str(start + first + int(i)) for i in interior)
            warnings.warn(
                f"entity {entity!r}: interior missing observations at {periods}",
                stacklevel=2,
            )
        for v, s in zip(cols, series):
            grid[(entity, v)] = s.window(start + first, start + last)

    entities = tuple(sorted({e for e, _ in grid}))
    variables = tuple(sorted({v for _, v in grid}))
    return PanelDataset(entities, variables, grid)
