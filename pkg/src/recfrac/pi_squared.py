"""Two generalized continued fractions converging to 8/pi^2 and 18/pi^2,
verified end to end.

Each case bundles a continued fraction spec with exact closed forms for
every ingredient: the factor sequences d_n and c_n, the convergent
numerators A_n, and an Apery-like series whose partial sums give
B_n/A_n.  The checks compare the recurrence-computed values against
those closed forms in exact rational arithmetic, and the limit check
measures the decimal residual against the target constant.  The two
series identities behind the limits (sum = pi^2/8 and sum = pi^2/18)
are accepted on numerical evidence, not proved here.

Case "8/pi^2":   b_n = 3n(n+1) + 1,  a_n = -(2n-1)n^3
    d_n = n(2n-1),  c_n = n^2,  A_n = (2n+2)!/2^(n+1),
    B_n = A_n * sum_{i=1}^{n+1} i!^2 * 2^i / (i^2 * (2i)!)

Case "18/pi^2":  b_n = n(5n+6) + 2,  a_n = -4n^4 + 2n^3
    d_n = 2n(2n-1),  c_n = n^2,  A_n = (2n+2)!,
    B_n = A_n * sum_{i=1}^{n+1} (i-1)!^2 / (2i)!
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from math import factorial
from typing import Callable

from .arith import DEFAULT_PRECISION, pi_squared_reference, to_decimal
from .contfrac import CFSpec, cf_to_recurrence, convergents
from .factorize import compute_cd
from .sequences import PolySeq


@dataclass(frozen=True)
class Pi2Case:
    """One target constant with its CF spec and exact cross-check forms."""

    id: str
    cf: CFSpec
    d_closed: Callable[[int], Fraction]
    c_closed: Callable[[int], Fraction]
    A_closed: Callable[[int], Fraction]
    series_term: Callable[[int], Fraction]
    target_times_pi2: int


@dataclass(frozen=True)
class Report:
    """Outcome of one check; serializes to the CLI's JSON report object."""

    case: str
    check: str
    N: int
    passed: bool
    first_mismatch_index: int | None = None
    residual_decimal: str | None = None
    rate_estimate: float | None = None

    def to_dict(self) -> dict:
        out = {
            "case": self.case,
            "check": self.check,
            "N": self.N,
            "pass": self.passed,
        }
        if self.first_mismatch_index is not None:
            out["first_mismatch_index"] = self.first_mismatch_index
        if self.residual_decimal is not None:
            out["residual_decimal"] = self.residual_decimal
        if self.rate_estimate is not None:
            out["rate_estimate"] = self.rate_estimate
        return out


def odd_double_factorial(k: int) -> int:
    """1*3*5*...*(2k-1); the empty product (k = 0) is 1."""
    out = 1
    for j in range(1, 2 * k, 2):
        out *= j
    return out


CASE_8_OVER_PI_SQ = Pi2Case(
    id="8/pi^2",
    cf=CFSpec(b=PolySeq((1, 3, 3)), a=PolySeq((0, 0, 0, 1, -2))),
    d_closed=lambda n: Fraction(n * (2 * n - 1)),
    c_closed=lambda n: Fraction(n * n),
    A_closed=lambda n: Fraction(factorial(2 * n + 2), 2 ** (n + 1)),
    series_term=lambda i: Fraction(
        factorial(i) ** 2 * 2**i, i * i * factorial(2 * i)
    ),
    target_times_pi2=8,
)

CASE_18_OVER_PI_SQ = Pi2Case(
    id="18/pi^2",
    cf=CFSpec(b=PolySeq((2, 6, 5)), a=PolySeq((0, 0, 0, 2, -4))),
    d_closed=lambda n: Fraction(2 * n * (2 * n - 1)),
    c_closed=lambda n: Fraction(n * n),
    A_closed=lambda n: Fraction(factorial(2 * n + 2)),
    series_term=lambda i: Fraction(factorial(i - 1) ** 2, factorial(2 * i)),
    target_times_pi2=18,
)

CASES = {"8": CASE_8_OVER_PI_SQ, "18": CASE_18_OVER_PI_SQ}


def check_factorization_closed_form(
    case: Pi2Case, N: int, d1: Fraction | None = None
) -> Report:
    """Seed recursion vs the conjectured closed forms for d_n and c_n.

    Runs compute_cd from d1 (default: the closed form's own d_1) and
    requires d_n = d_closed(n) for n = 1..N+1 and c_n = c_closed(n) for
    n = 1..N, exactly.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    seed = case.d_closed(1) if d1 is None else Fraction(d1)
    rec = cf_to_recurrence(case.cf, "A")
    fac = compute_cd(rec, seed, N)
    mismatch = None
    for n in range(1, N + 2):
        if fac.d_at(n) != case.d_closed(n):
            mismatch = n
            break
    if mismatch is None:
        for n in range(1, N + 1):
            if fac.c_at(n) != case.c_closed(n):
                mismatch = n
                break
    return Report(
        case.id,
        "factorization_closed_form",
        N,
        mismatch is None,
        first_mismatch_index=mismatch,
    )


def check_A_closed_form(case: Pi2Case, N: int) -> Report:
    """Convergent numerators vs the factorial closed form, n = 0..N."""
    pair = convergents(case.cf, N)
    mismatch = None
    for n in range(0, N + 1):
        if pair.A_at(n) != case.A_closed(n):
            mismatch = n
            break
    return Report(
        case.id, "A_closed_form", N, mismatch is None, first_mismatch_index=mismatch
    )


def check_B_series(case: Pi2Case, N: int) -> Report:
    """Convergent denominators vs A_closed(n) times the series partial sum."""
    pair = convergents(case.cf, N)
    mismatch = None
    partial = Fraction(0)
    for n in range(0, N + 1):
        partial += case.series_term(n + 1)
        if pair.B_at(n) != case.A_closed(n) * partial:
            mismatch = n
            break
    return Report(
        case.id, "B_series", N, mismatch is None, first_mismatch_index=mismatch
    )


def check_limit(case: Pi2Case, N: int, tol) -> Report:
    """Residual |A_N/B_N - target| at 50 significant digits vs `tol`.

    Also estimates the convergence rate as the ratio of the residuals at
    N and N-1 (the series terms decay geometrically, so this ratio
    approaches the decay base).
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    tol = Decimal(str(tol))
    pair = convergents(case.cf, N)
    target = to_decimal(
        Fraction(case.target_times_pi2), DEFAULT_PRECISION
    ) / pi_squared_reference(DEFAULT_PRECISION)
    residual = abs(to_decimal(pair.ratio(N), DEFAULT_PRECISION) - target)
    previous = abs(to_decimal(pair.ratio(N - 1), DEFAULT_PRECISION) - target)
    rate = None
    if previous.value != 0:
        rate = float(residual.value / previous.value)
    return Report(
        case.id,
        "limit",
        N,
        residual.value < tol,
        residual_decimal=str(residual),
        rate_estimate=rate,
    )
