"""Exception hierarchy shared across the package.

The CLI maps these onto its exit codes, so subclasses matter: parse
problems, dimension mismatches, degenerate inputs, wrong operation shape
and purity violations each get their own type.
"""


class QopdistError(Exception):
    """Base class for all package errors."""


class ValidationError(QopdistError, ValueError):
    """An input violates a documented precondition or type invariant."""


class MatrixFileError(ValidationError):
    """A matrix document failed to parse or carries inconsistent fields."""


class ReportParseError(MatrixFileError):
    """A suite report file failed to parse."""


class DimensionMismatchError(ValidationError):
    """Operands have incompatible dimensions."""


class DegenerateInputError(ValidationError):
    """Two states coincide where a distinct pair is required."""


class NotMaximizingShapeError(ValidationError):
    """The operation's T operator lacks the unit or zero eigenvalue needed
    to host a matched state pair."""


class PurityError(ValidationError):
    """A pure state was required but a mixed one was supplied."""


class ZeroProbabilityError(QopdistError):
    """The operation branch occurs with (numerically) zero probability."""


class NumericalError(QopdistError, RuntimeError):
    """A numerical routine failed to converge."""
