"""Exception types shared across the package.

All domain errors derive from PcmError so callers can catch one base class.
Positions carried by validation and parse errors (rows, columns, lines) are
1-based, matching how entries are written in matrix files and printed in
messages. Library function arguments, by contrast, are plain 0-based Python
indices.
"""


class PcmError(Exception):
    """Base class for every error raised by this package."""


class NonSquareError(PcmError):
    """Input array is not a square 2-d matrix."""


class OrderTooSmallError(PcmError):
    """Matrix order (or weight/chain length) below the supported minimum."""


class NonPositiveEntryError(PcmError):
    """An entry is zero, negative, or not finite."""

    def __init__(self, message, row=None, col=None):
        super().__init__(message)
        self.row = row
        self.col = col


class ReciprocityViolationError(PcmError):
    """a_ij * a_ji deviates from 1 beyond tolerance; reports the worst pair."""

    def __init__(self, row, col, product):
        if row == col:
            msg = (f"diagonal entry at ({row},{col}) must equal 1 "
                   f"(a*a = {product!r})")
        else:
            msg = (f"entries at ({row},{col}) and ({col},{row}) are not "
                   f"reciprocal: product = {product!r}")
        super().__init__(msg)
        self.row = row
        self.col = col
        self.product = product


class OrderMismatchError(PcmError):
    """Permutation/weight length or entry position incompatible with order."""


class DiagonalEntryError(PcmError):
    """Operation addressed a diagonal entry where an off-diagonal is required."""


class UnitEntryError(PcmError):
    """Operation requires an entry different from 1."""


class ZeroDenominatorError(PcmError):
    """A ratio-style index is undefined because its denominator is zero."""


class InconsistentBaseError(PcmError):
    """Operation requires a consistent base matrix."""


class MatrixParseError(PcmError):
    """Matrix text could not be parsed; carries 1-based line/column."""

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column else "")
            message = f"{where}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class ConfigError(PcmError):
    """Invalid harness or command-line configuration."""
