"""Exact rational scalars and a fixed-precision decimal layer.

Everything exact in this package runs over arbitrary-precision rationals
(stdlib ``fractions.Fraction``, aliased as :data:`Rational`).  Decimals
appear only where a result has to be compared against an irrational
target; they are tagged with their significant-digit precision so that
mixed-precision arithmetic cannot silently over-claim accuracy.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction

from .errors import DivisionByZero, PrecisionUnsupported

Rational = Fraction

#: Significant digits used when no explicit precision is requested.
DEFAULT_PRECISION = 50

# pi to 110 decimal places.  Truncated, which here equals the correctly
# rounded value (place 111 is a 3).  validate_pi_literal() checks it
# against an independent computation before any consumer trusts it.
_PI_LITERAL = (
    "3."
    "14159265358979323846264338327950288419716939937510"
    "58209749445923078164062862089986280348253421170679"
    "8214808651"
)
_PI_PLACES = 110
_MAX_PI_DIGITS = 100

_pi_validated = False


def rat_add(x: Rational, y: Rational) -> Rational:
    """Exact sum; the result is always in lowest terms."""
    return x + y


def rat_sub(x: Rational, y: Rational) -> Rational:
    """Exact difference."""
    return x - y


def rat_mul(x: Rational, y: Rational) -> Rational:
    """Exact product."""
    return x * y


def rat_div(x: Rational, y: Rational) -> Rational:
    """Exact quotient; raises :class:`DivisionByZero` when y = 0."""
    if y == 0:
        raise DivisionByZero("rational division by zero")
    return x / y


@dataclass(frozen=True)
class BigDecimal:
    """A decimal value tagged with its count of significant digits.

    Arithmetic between two tagged values is carried out (and rounded
    half-to-even) at the smaller of the two precisions, which is then
    propagated to the result.
    """

    value: Decimal
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        if self.precision < 1:
            raise PrecisionUnsupported(
                f"precision must be >= 1, got {self.precision}"
            )

    def _joint(self, other: BigDecimal) -> tuple[Context, int]:
        prec = min(self.precision, other.precision)
        return Context(prec=prec, rounding=ROUND_HALF_EVEN), prec

    def __add__(self, other: BigDecimal) -> BigDecimal:
        ctx, prec = self._joint(other)
        return BigDecimal(ctx.add(self.value, other.value), prec)

    def __sub__(self, other: BigDecimal) -> BigDecimal:
        ctx, prec = self._joint(other)
        return BigDecimal(ctx.subtract(self.value, other.value), prec)

    def __mul__(self, other: BigDecimal) -> BigDecimal:
        ctx, prec = self._joint(other)
        return BigDecimal(ctx.multiply(self.value, other.value), prec)

    def __truediv__(self, other: BigDecimal) -> BigDecimal:
        if other.value == 0:
            raise DivisionByZero("decimal division by zero")
        ctx, prec = self._joint(other)
        return BigDecimal(ctx.divide(self.value, other.value), prec)

    def __neg__(self) -> BigDecimal:
        return BigDecimal(-self.value, self.precision)

    def __abs__(self) -> BigDecimal:
        return BigDecimal(abs(self.value), self.precision)

    def __lt__(self, other: BigDecimal) -> bool:
        return self.value < other.value

    def __le__(self, other: BigDecimal) -> bool:
        return self.value <= other.value

    def __gt__(self, other: BigDecimal) -> bool:
        return self.value > other.value

    def __ge__(self, other: BigDecimal) -> bool:
        return self.value >= other.value

    def __str__(self) -> str:
        return str(self.value)


def _round_half_even(p: int, q: int) -> int:
    """Nearest integer to p/q for p >= 0, q > 0, ties to even."""
    m, r = divmod(p, q)
    if 2 * r > q or (2 * r == q and m % 2 == 1):
        return m + 1
    return m


def to_decimal(x: Rational, digits: int) -> BigDecimal:
    """Round x to exactly `digits` significant digits, half-to-even.

    The conversion is a single exact integer rounding (no intermediate
    binary or guard-digit step), so it is correctly rounded and monotone.
    Trailing zeros are kept: to_decimal(-5/2, 5) prints as -2.5000.
    """
    if digits < 1:
        raise PrecisionUnsupported(f"digits must be >= 1, got {digits}")
    if x == 0:
        return BigDecimal(Decimal((0, (0,), 1 - digits)), digits)
    sign = 0 if x > 0 else 1
    na, de = abs(x.numerator), x.denominator
    # adjusted exponent: 10^adj <= |x| < 10^(adj+1)
    adj = len(str(na)) - len(str(de))
    reaches_adj = na >= de * 10**adj if adj >= 0 else na * 10**-adj >= de
    if not reaches_adj:
        adj -= 1
    exp = adj - digits + 1
    if exp >= 0:
        m = _round_half_even(na, de * 10**exp)
    else:
        m = _round_half_even(na * 10**-exp, de)
    if m == 10**digits:  # rounding carried into one extra digit
        m //= 10
        exp += 1
    return BigDecimal(
        Decimal((sign, tuple(int(ch) for ch in str(m)), exp)), digits
    )


def _arctan_recip_scaled(x: int, scale: int) -> int:
    """arctan(1/x) * scale via the alternating Taylor series, integers only.

    Truncation stops when a term underflows the scale; the accumulated
    error is below one unit per term taken.
    """
    total, k = 0, 0
    while True:
        term = scale // ((2 * k + 1) * x ** (2 * k + 1))
        if term == 0:
            return total
        total += -term if k % 2 else term
        k += 1


def validate_pi_literal() -> None:
    """Check the stored pi literal against an independent computation.

    Uses the classic four-arctangent split pi = 16*arctan(1/5)
    - 4*arctan(1/239) in pure integer arithmetic with guard digits.
    Runs once per process; raises ArithmeticError on disagreement.
    """
    global _pi_validated
    if _pi_validated:
        return
    guard = 12
    scale = 10 ** (_PI_PLACES + guard)
    computed = 16 * _arctan_recip_scaled(5, scale) - 4 * _arctan_recip_scaled(
        239, scale
    )
    computed //= 10**guard
    literal = int(_PI_LITERAL.replace(".", ""))
    if abs(computed - literal) > 2:
        raise ArithmeticError("stored pi literal failed independent validation")
    _pi_validated = True


def pi_squared_reference(digits: int) -> BigDecimal:
    """pi^2 to `digits` significant digits (1 <= digits <= 100).

    Squares the validated literal exactly as a rational and performs a
    single correct rounding, so every returned digit is trustworthy.
    """
    if not 1 <= digits <= _MAX_PI_DIGITS:
        raise PrecisionUnsupported(
            f"supported precision range is 1..{_MAX_PI_DIGITS} digits,"
            f" got {digits}"
        )
    validate_pi_literal()
    pi = Fraction(_PI_LITERAL)
    return to_decimal(pi * pi, digits)
