"""Exception types shared across the package."""

from __future__ import annotations


class DivisionByZero(ZeroDivisionError):
    """Exact division with a zero divisor."""


class PrecisionUnsupported(ValueError):
    """Requested decimal precision outside the supported range."""


class DomainViolation(ValueError):
    """Sequence evaluated below its declared domain."""


class ParseError(ValueError):
    """Malformed input text; carries the offending character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class FactorizationBreakdown(ArithmeticError):
    """The seed recursion hit d_n = 0, so the next division is undefined.

    Carries the 1-based index of the zero and the partial factorization
    computed up to that point, so callers can retry with a different seed.
    """

    def __init__(self, index: int, partial):
        super().__init__(f"factorization breakdown: d_{index} = 0")
        self.index = index
        self.partial = partial


class HorizonMismatch(ValueError):
    """A factorization does not cover the requested horizon."""


class NotHomogeneous(ValueError):
    """An operation requiring f = 0 was given a nonzero forcing sequence."""


class ProductFormInapplicable(ValueError):
    """The pure-product solution needs nonzero initial values to seed d_1."""


class IndeterminateConvergent(ArithmeticError):
    """Convergent denominator B_n is zero; the ratio A_n/B_n is undefined."""
