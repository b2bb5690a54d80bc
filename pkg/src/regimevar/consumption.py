"""Intertemporal consumption mathematics: discount factor, Euler residual,
MPC and IMPC series construction.

Formulas
--------
discount factor   beta_t = 1 / (1 + r_{t+1})            (standard reading)
                  beta_t = 1 / (2 + r_{t+1})            (literal reading, see below)
Euler residual    log C_t - log C_{t+1} - log beta - r_t
MPC_t             dC_t / dY_t
IMPC_t            MPC_t + beta_t * MPC_{t+1}

The source prints the discount factor as 1/(1 + (r + 1)), which conflicts
with the standard definition; both readings satisfy "higher future rate,
lower beta", so the standard form is the default and the literal form is
available behind ``beta_formula='literal'``.

Positions where dY_t = 0 produce NaN sentinels and a warning listing the
affected periods — downstream consumers must never see infinities.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .data_model import TimeSeries
from .errors import NonPositiveConsumption, RateOutOfDomain, ShapeMismatch, TooShort

STANDARD = "standard"
LITERAL = "literal"


@dataclass(frozen=True)
class ConsumptionInputs:
    """Aligned consumption (C_t), income (Y_t) and interest rate (r_t, decimal)."""

    consumption: TimeSeries
    income: TimeSeries
    interest_rate: TimeSeries

    def __post_init__(self):
        a, b, c = self.consumption, self.income, self.interest_rate
        if not (a.start == b.start == c.start) or not (len(a) == len(b) == len(c)):
            raise ShapeMismatch("consumption, income and interest rate must be aligned")


@dataclass(frozen=True)
class DiscountPath:
    """The beta_t series implied by the interest-rate path."""

    beta: TimeSeries

    def __post_init__(self):
        vals = self.beta.values
        if not (vals[~np.isnan(vals)] > 0).all():
            raise RateOutOfDomain("every beta_t must be positive")


def discount_factor(rate_next: float, formula: str = STANDARD) -> float:
    """Discount factor from the next-period interest rate (decimal units)."""
    shift = 1.0 if formula == STANDARD else 2.0
    if rate_next <= -shift:
        raise RateOutOfDomain(f"rate {rate_next} out of domain for {formula} discounting")
    return 1.0 / (shift + rate_next)


def euler_residual(c_now: float, c_next: float, beta: float, rate: float) -> float:
    """Deviation from the log-linearized Euler equation; zero iff it holds."""
    if c_now <= 0 or c_next <= 0:
        raise NonPositiveConsumption("consumption levels must be strictly positive")
    if beta <= 0:
        raise RateOutOfDomain("beta must be strictly positive")
    return math.log(c_now) - math.log(c_next) - math.log(beta) - rate


def _increments(inputs: ConsumptionInputs) -> tuple[np.ndarray, np.ndarray]:
    dc = np.diff(inputs.consumption.values)
    dy = np.diff(inputs.income.values)
    return dc, dy


def _warn_degenerate(name: str, start, dy: np.ndarray) -> None:
    zero = np.flatnonzero(dy == 0)
    if zero.size:
        periods = ", ".join(str(start + int(i)) for i in zero)
        warnings.warn(f"{name}: zero income increment at {periods}; emitting NaN", stacklevel=3)


def mpc_series(inputs: ConsumptionInputs) -> TimeSeries:
    """MPC_t = dC_t / dY_t for t = 1..T-1; NaN where dY_t = 0 (reported)."""
    if len(inputs.consumption) < 2:
        raise TooShort("MPC needs at least 2 observations")
    dc, dy = _increments(inputs)
    start = inputs.consumption.start + 1
    _warn_degenerate("MPC", start, dy)
    with np.errstate(divide="ignore", invalid="ignore"):
        vals = np.where(dy == 0, np.nan, dc / np.where(dy == 0, 1.0, dy))
    return TimeSeries("MPC", start, vals)


def impc_series(inputs: ConsumptionInputs, beta_formula: str = STANDARD) -> TimeSeries:
    """IMPC_t = MPC_t + beta_t * MPC_{t+1} with beta_t from r_{t+1}.

    Defined for t = 1..T-2; NaN propagates from either MPC term.
    """
    if len(inputs.consumption) < 3:
        raise TooShort("IMPC needs at least 3 observations")
    mpc = mpc_series(inputs).values
    rates = inputs.interest_rate.values
    betas = np.array(
        [discount_factor(rates[t + 1], beta_formula) for t in range(1, len(rates) - 1)]
    )
    vals = mpc[:-1] + betas * mpc[1:]
    return TimeSeries("IMPC", inputs.consumption.start + 1, vals)


def discount_path(interest_rate: TimeSeries, beta_formula: str = STANDARD) -> DiscountPath:
    """beta_t series for t = 0..T-2 (each uses the next period's rate)."""
    rates = interest_rate.values
    vals = np.array([discount_factor(r, beta_formula) for r in rates[1:]])
    return DiscountPath(TimeSeries("BETA", interest_rate.start, vals))
