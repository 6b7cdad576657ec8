"""Exception types raised by the orelab modules."""

from typing import Optional


class OrelabError(Exception):
    """Base class for every orelab error."""
    pass


class InvalidArgumentError(OrelabError, ValueError):
    """An argument violates the documented precondition."""
    pass


class NoSolutionError(OrelabError, ArithmeticError):
    """A Diophantine equation has no solution."""
    pass


class NotApplicableError(OrelabError):
    """A theorem's hypothesis does not hold, so the requested data is undetermined."""
    pass


class InconsistencyError(OrelabError, RuntimeError):
    """Two independent computations disagree; this is a bug, not bad input."""
    pass


class PolySyntaxError(InvalidArgumentError):
    """Malformed polynomial expression."""

    def __init__(self, message: str, position: Optional[int] = None, source: str = ""):
        self.position = position
        self.source = source
        if position is not None:
            message = f"{message} at position {position}"
            if source:
                message = f"{message}\n  {source}\n  {' ' * position}^"
        super().__init__(message)
