"""Exception hierarchy shared by all bergtol components."""

from typing import Optional


class BergtolError(Exception):
    """Base class for all expected (non-internal) errors"""
    pass


class DomainError(BergtolError):
    """A point or parameter lies outside the domain of an operation"""
    pass


class ArgumentError(BergtolError):
    """Invalid arguments such as a non-positive dimension or an empty grid"""
    pass


class ParseError(BergtolError):
    """Malformed symbol description; carries the offending field path"""

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}" if path else message)


class HypothesisError(BergtolError):
    """A hypothesis of a decision procedure is violated"""

    def __init__(self, message: str, node: Optional[complex] = None, margin: Optional[float] = None):
        self.node = node
        self.margin = margin
        super().__init__(message)


class TheoremFormError(HypothesisError):
    """The harmonic polynomial is not in the normalized form the decision needs"""
    pass


class QuadratureError(DomainError):
    """Quadrature refused (too close to the boundary) or failed to converge"""
    pass


class InsufficientMomentsError(DomainError):
    """A series route needs more radial moments than were supplied"""

    def __init__(self, required: int, available: int):
        self.required = required
        self.available = available
        super().__init__(
            f"series needs {required} radial moments for the requested tolerance, only {available} available"
        )


class UsageError(BergtolError):
    """Command line usage error (unknown flag, missing argument)"""
    pass
