"""Exception hierarchy for the toolkit.

Every error raised by the package derives from :class:`RegimevarError`,
so callers (notably the CLI) can catch one type and translate it into a
non-zero exit code with context.
"""

from __future__ import annotations


class RegimevarError(Exception):
    """Base class for all toolkit errors."""


# --- data model -------------------------------------------------------------

class MissingColumn(RegimevarError):
    pass


class UnparseablePeriod(RegimevarError):
    def __init__(self, row: int, text: str):
        super().__init__(f"row {row}: cannot parse period {text!r} (expected YYYYQn or YYYY)")
        self.row = row
        self.text = text


class DuplicateObservation(RegimevarError):
    def __init__(self, entity: str, variable: str, period: str):
        super().__init__(f"duplicate observation for ({entity}, {variable}, {period})")
        self.entity = entity
        self.variable = variable
        self.period = period


class MixedFrequency(RegimevarError):
    pass


class UnparseableValue(RegimevarError):
    def __init__(self, row: int, text: str):
        super().__init__(f"row {row}: cannot parse value {text!r} as a real number")
        self.row = row
        self.text = text


class OrderTooLarge(RegimevarError):
    pass


class EmptyIntersection(RegimevarError):
    def __init__(self, entity: str):
        super().__init__(f"entity {entity!r}: series windows have empty intersection")
        self.entity = entity


class NonBinaryDummy(RegimevarError):
    pass


# --- consumption kernel -----------------------------------------------------

class RateOutOfDomain(RegimevarError):
    pass


class NonPositiveConsumption(RegimevarError):
    pass


class TooShort(RegimevarError):
    pass


class ShapeMismatch(RegimevarError):
    pass


# --- statistical tests ------------------------------------------------------

class ZeroVariance(RegimevarError):
    pass


class TooFewEntities(RegimevarError):
    pass


class InvalidP(RegimevarError):
    pass


class CollinearRegressors(RegimevarError):
    pass


class DimensionOutOfRange(RegimevarError):
    pass


# --- MS-VAR engine ----------------------------------------------------------

class SingularCovariance(RegimevarError):
    pass


class NumericalUnderflow(RegimevarError):
    pass


class DegenerateRegime(RegimevarError):
    pass


class InvalidParameter(RegimevarError):
    pass


# --- dynamics ---------------------------------------------------------------

class UnstableSystem(RegimevarError):
    pass


class BadOrdering(RegimevarError):
    pass


# --- CLI / config -----------------------------------------------------------

class ConfigError(RegimevarError):
    pass


class MissingVariable(RegimevarError):
    def __init__(self, entity: str, variable: str):
        super().__init__(f"entity {entity!r} is missing variable {variable!r}")
        self.entity = entity
        self.variable = variable


class NoVariables(RegimevarError):
    pass
