"""Exception hierarchy.

Errors are grouped by layer: series construction, data ingestion, math
domain, curve fitting, and integration. The CLI maps these onto exit
codes (data errors -> 2, infeasible computations -> 3).
"""


class UvstarError(Exception):
    """Base class for all package errors."""


# -- series layer -----------------------------------------------------------

class SeriesError(UvstarError):
    """Invalid time-series construction or operation."""


class EmptySeries(SeriesError):
    pass


class FrequencyMismatch(SeriesError):
    pass


class SpliceOverlap(SeriesError):
    pass


class NoOverlap(SeriesError):
    pass


class EmptyWindow(SeriesError):
    pass


# -- ingestion layer --------------------------------------------------------

class IngestError(UvstarError):
    """Problem reading or assembling source data."""


class SchemaError(IngestError):
    pass


class ParseError(IngestError):
    pass


class UnitAmbiguity(IngestError):
    """A rate column admits no consistent percent-or-fraction reading."""


class DivisionByZero(IngestError):
    pass


# -- math layers ------------------------------------------------------------

class DomainError(UvstarError):
    """Input outside the mathematical domain of an operation."""


class FitError(UvstarError):
    """Regression or break-detection failure."""


class SingularFit(FitError):
    pass


class InfeasiblePartition(FitError):
    pass


class IntegrationError(UvstarError):
    """Numerical integration left the admissible state space."""
