"""Exception hierarchy shared by the library and the command line."""


class MetricLieError(Exception):
    """Base class for all library errors."""


class UsageError(MetricLieError, ValueError):
    """Bad input: malformed data or a violated precondition."""


class StructureError(UsageError):
    """Structure constants fail antisymmetry or the Jacobi identity."""


class InvariantViolation(MetricLieError, AssertionError):
    """An internal consistency check failed; this indicates a bug."""
