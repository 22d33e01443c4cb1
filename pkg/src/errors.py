"""
Exceptions raised by the workbench

Everything derives from ValueError so callers that only know about
ValueError keep working.
"""

from typing import Any, List, Optional, Tuple


class AlgebraError(ValueError):
    """Base class for all domain errors"""


class DimensionMismatchError(AlgebraError):
    """An exponent vector or ideal does not live in the expected ring"""


class ZeroIdealError(AlgebraError):
    """The operation is undefined on the zero ideal"""


class NotPrimaryError(AlgebraError):
    """The ideal is not m-primary, so its colength is infinite"""


class PreconditionError(AlgebraError):
    """Arguments violate an operation's precondition"""


class ContainmentError(AlgebraError):
    """A denominator ideal is not contained in its numerator"""


class FitError(AlgebraError):
    """The collocation system is singular or has a non-integral solution"""


class PostulationError(AlgebraError):
    """The fitted polynomial disagrees with the Hilbert function"""

    def __init__(self, message: str, mismatches: List[Tuple[Tuple[int, ...], int, int]]):
        super().__init__(message)
        self.mismatches = mismatches


class StabilizationError(AlgebraError):
    """A stabilizing sequence did not settle within its bound"""

    def __init__(self, message: str, table: Any = None):
        super().__init__(message)
        self.table = table


class InconsistencyError(AlgebraError):
    """Independently computed verdicts of a proved equivalence disagree"""

    def __init__(self, message: str, report: Any = None):
        super().__init__(message)
        self.report = report


class ParseError(AlgebraError):
    """Malformed ideal expression"""

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
