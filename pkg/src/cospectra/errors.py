"""Exception hierarchy.

Everything raised on purpose by this package derives from ``CospectraError`` so
callers (and the CLI) can tell domain failures from programming errors.
"""

from __future__ import annotations


class CospectraError(Exception):
    pass


class InvalidGroup(CospectraError, ValueError):
    pass


class InvalidElement(CospectraError, ValueError):
    """Coordinate vector has the wrong length or a residue out of range."""


class NonRationalValue(CospectraError, ValueError):
    pass


class ValidationError(CospectraError, ValueError):
    pass


class ContainsIdentity(ValidationError):
    pass


class NotInverseClosed(ValidationError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"connection set is not inverse-closed: {element} has no inverse in the set")


class NotCubelike(CospectraError, ValueError):
    pass


class BadDimension(CospectraError, ValueError):
    pass


class EvenCycle(CospectraError, ValueError):
    pass


class ParseError(CospectraError, ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class TooLarge(CospectraError):
    """A dense computation would exceed its configured vertex cap."""


class ClusterAmbiguity(CospectraError, ArithmeticError):
    """Numerical eigenvalue gaps are too close to the tolerance to cluster reliably."""


class NumericalError(CospectraError, ArithmeticError):
    pass
