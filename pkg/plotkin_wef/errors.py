__doc__ = """
Exceptions raised by plotkin_wef.

Everything derives from PlotkinError. The precondition errors also derive
from ValueError, so callers that only know about builtin exceptions can
still catch them. The command line maps ParseError and DomainError to exit
status 2 and BudgetExceededError to exit status 3.
"""

__all__ = [
    'PlotkinError',
    'DomainError', 'LengthMismatchError', 'WeightRangeError',
    'ParseError',
    'BudgetExceededError',
    'RankDeficiencyWarning',
]


class PlotkinError(Exception):
    """Root of the package's exception hierarchy."""


class DomainError(PlotkinError, ValueError):
    """An argument lies outside the domain of an operation
    (a caller index bug, as opposed to bad user input)."""


class LengthMismatchError(DomainError):
    """Component lengths differ, or an exponent exceeds the declared length."""


class WeightRangeError(DomainError):
    """A target or truncation weight is out of range for the code length."""


class ParseError(PlotkinError, ValueError):
    """Malformed polynomial, matrix or tree input.

    position: 0-based character offset into the offending text, or None
    when the error isn't tied to a single spot.
    """
    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at position %d)" % (message, position)
        super().__init__(message)
        self.position = position


class BudgetExceededError(PlotkinError):
    """A resource budget (enumeration size, code length, tree depth)
    would be exceeded."""
    def __init__(self, budget, limit, requested):
        super().__init__("%s budget exceeded: requested %s, limit is %s"
                         % (budget, requested, limit))
        self.budget = budget
        self.limit = limit
        self.requested = requested


class RankDeficiencyWarning(UserWarning):
    """Rows of a generator matrix are linearly dependent over GF(2)."""
