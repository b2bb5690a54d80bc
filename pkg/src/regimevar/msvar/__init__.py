"""Markov-Switching-Intercepts VAR: specification, likelihood, estimation."""

from .model import (
    MsVarParams,
    MsVarSpec,
    SwitchingFlags,
    count_coefficients,
    ergodic_distribution,
    matrix_to_logits,
    transition_matrix,
)
from .filter import FilterOutput, conditional_density, hamilton_filter, kim_smoother
from .em import em_step
from .estimate import (
    ConvergenceInfo,
    FitOptions,
    FitResult,
    InfoCriteria,
    fit,
    info_criteria,
    loglikelihood,
    regime_classify,
    score,
)
from .report import (
    estimation_table_csv,
    fit_result_to_json,
    params_from_json,
    regime_probability_csv,
)

__all__ = [
    "MsVarSpec",
    "MsVarParams",
    "SwitchingFlags",
    "transition_matrix",
    "matrix_to_logits",
    "ergodic_distribution",
    "count_coefficients",
    "FilterOutput",
    "conditional_density",
    "hamilton_filter",
    "kim_smoother",
    "em_step",
    "fit",
    "FitOptions",
    "FitResult",
    "InfoCriteria",
    "ConvergenceInfo",
    "info_criteria",
    "loglikelihood",
    "regime_classify",
    "score",
    "estimation_table_csv",
    "fit_result_to_json",
    "params_from_json",
    "regime_probability_csv",
]
