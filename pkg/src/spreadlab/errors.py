"""Exception hierarchy.

``PreconditionError`` groups every violated-input error so the CLI can map
the whole family to one exit code; the remaining classes carry their own
exit semantics (parse = 2, convergence = 3, I/O = OSError = 5).
"""


class SpreadLabError(Exception):
    """Base class for all spreadlab errors."""


class PreconditionError(SpreadLabError):
    """An operation was called on input violating its stated precondition."""


class InvalidMatrix(PreconditionError):
    """Matrix is not square, not 2-D, or contains non-finite entries."""


class NotSymmetric(PreconditionError):
    """Symmetric-only operation applied to a non-symmetric matrix."""


class NegativeEntry(PreconditionError):
    """Operation requires an entrywise non-negative matrix."""


class EntryOutOfRange(PreconditionError):
    """Operation requires every entry in [0, 1]."""


class DimensionMismatch(PreconditionError):
    """Two-matrix operation applied to matrices of different orders."""


class NotDivisibleByThree(PreconditionError):
    """Extremal block construction needs the order to be a multiple of 3."""


class OrderTooLarge(PreconditionError):
    """Search size limit exceeded (n <= 5 exhaustive, n <= 12 local)."""


class DomainError(PreconditionError):
    """Scalar function evaluated outside its domain."""


class InvalidParameter(PreconditionError):
    """A scalar parameter (resolution, threshold, ...) is out of range."""


class ParseError(SpreadLabError):
    """Matrix file could not be parsed."""


class NonConvergence(SpreadLabError):
    """QR iteration failed to deflate within the sweep budget."""


class PerronAnomaly(SpreadLabError):
    """No real eigenvalue attains the spectral radius of a non-negative
    matrix; signals an eigensolver failure, not a property of the input."""
