"""regimevar: regime-switching VAR toolkit for fiscal-consumption analysis.

Subpackages and modules:

- ``data_model``: periods, series, panels, CSV ingest/emit, differencing.
- ``consumption``: discount factors, Euler residuals, MPC/IMPC series.
- ``stattests``: unit-root and cointegration battery with simulated
  finite-sample distributions.
- ``msvar``: Markov-switching VAR model, filtering, EM, ML estimation.
- ``dynamics``: impulse responses and variance decompositions.
- ``synthlab``: synthetic data generation and recovery experiments.
- ``cli``: the ``regimevar`` command-line pipeline.
"""

from .errors import RegimevarError

__version__ = "1.0.0"

__all__ = ["RegimevarError", "__version__"]
