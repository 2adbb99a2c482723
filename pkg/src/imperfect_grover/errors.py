"""Exceptions raised by the numerical routines."""


class GroverError(Exception):
    """Base class for all errors raised by this package."""


class SpectralDegenerate(GroverError):
    """sin(w) vanishes, so the rotation angle and mixing angle are undefined."""


class DegenerateExtremum(GroverError):
    """The stationary-point formula for the iteration count has no valid solution."""


class NotMatched(GroverError):
    """A matched-phase formula was called with phi != theta."""


class UndefinedRatio(GroverError):
    """Zero denominator in an approximate tolerance formula."""


class SizeExceeded(GroverError):
    """Requested register is larger than the simulator's qubit limit."""


class InternalConsistencyError(GroverError):
    """Two algebraically equal expressions disagree beyond rounding."""


class IndexOutOfRange(GroverError, IndexError):
    """Marked-state index lies outside the register."""
