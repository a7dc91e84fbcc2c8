"""Exception types shared across the package."""


class HyperformsError(Exception):
    """Base class for all package errors."""


class ParseError(HyperformsError):
    """Syntax error in a polynomial expression, with a source position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DomainError(HyperformsError):
    """Mathematically invalid input: wrong degree, inhomogeneous form,
    nonexistent hyperdeterminant, zero where nonzero is required."""


class UnsupportedFormatError(HyperformsError):
    """Tensor format is admissible but outside the implemented set."""
