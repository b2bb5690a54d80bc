"""Unit-root and cointegration battery: series-level ADF and PP, panel
tests (pooled t*, forward-orthogonalization, group-mean W, Fisher
combinations), and the two-step residual cointegration test, with
simulated response-surface p-values."""

from .cointegration import engle_granger
from .mackinnon import MAX_DIMENSION, MIN_DIMENSION, mackinnon_pvalue
from .panel import breitung_test, fisher_combine, ips_test, llc_test
from .reports import (
    CointegrationReport,
    TestReport,
    cointegration_table_csv,
    reports_to_json,
    unit_root_table_csv,
)
from .unitroot import adf_test, pp_test

__all__ = [
    "TestReport",
    "CointegrationReport",
    "adf_test",
    "pp_test",
    "llc_test",
    "breitung_test",
    "ips_test",
    "fisher_combine",
    "engle_granger",
    "mackinnon_pvalue",
    "MIN_DIMENSION",
    "MAX_DIMENSION",
    "unit_root_table_csv",
    "cointegration_table_csv",
    "reports_to_json",
]
