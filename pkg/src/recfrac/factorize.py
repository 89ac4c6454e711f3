"""Linear factorization of the quadratic shift operator.

Writing the recurrence y_n - b_n*y_{n-1} - a_n*y_{n-2} = f_n in terms of
the shift T (T y_n = y_{n+1}) as (T^2 - b_n*T - a_n) y_{n-2} = f_n, this
module computes sequences (c_n), (d_n) that split the quadratic into two
first-order factors (T - c_n)(T - d_n), characterized by

    c_n + d_{n+1} = b_n        c_n * d_n = -a_n        (n >= 1).

Because T does not commute with index-dependent multipliers, the split is
not symmetric in c and d.  Given any nonzero seed d_1, the sequences
follow from the rational recursion d_{n+1} = b_n + a_n/d_n; the recursion
genuinely fails when some d_n hits zero, which is reported as a
recoverable :class:`FactorizationBreakdown` rather than a crash.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FactorizationBreakdown
from .sequences import Recurrence


@dataclass(frozen=True)
class Factorization:
    """Factor sequences over a finite horizon of N recurrence steps.

    `d` stores d_1..d_{N+1} and `c` stores c_1..c_N; use :meth:`d_at` and
    :meth:`c_at` for access by the 1-based mathematical index.
    """

    d1: Fraction
    d: tuple[Fraction, ...]
    c: tuple[Fraction, ...]
    N: int

    def __post_init__(self):
        if len(self.d) != self.N + 1:
            raise ValueError(f"need {self.N + 1} d-values, got {len(self.d)}")
        if len(self.c) != self.N:
            raise ValueError(f"need {self.N} c-values, got {len(self.c)}")
        if self.d[0] != self.d1:
            raise ValueError("d[0] must equal the seed d1")

    def d_at(self, n: int) -> Fraction:
        if not 1 <= n <= self.N + 1:
            raise IndexError(f"d index {n} outside 1..{self.N + 1}")
        return self.d[n - 1]

    def c_at(self, n: int) -> Fraction:
        if not 1 <= n <= self.N:
            raise IndexError(f"c index {n} outside 1..{self.N}")
        return self.c[n - 1]


def compute_cd(rec: Recurrence, d1: Fraction, N: int) -> Factorization:
    """Run the seed recursion d_{n+1} = b_n + a_n/d_n for n = 1..N.

    c_n is recovered as b_n - d_{n+1}, which is algebraically the same as
    its continued fraction form once the sum identity holds.  On success
    both factorization identities hold exactly at every stored index.

    Raises :class:`FactorizationBreakdown` at the first n <= N with
    d_n = 0; the exception carries the prefix computed so far.
    """
    d1 = Fraction(d1)
    if d1 == 0:
        raise ValueError("seed d1 must be nonzero")
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    d = [d1]
    c: list[Fraction] = []
    for n in range(1, N + 1):
        if d[-1] == 0:
            partial = Factorization(d1, tuple(d), tuple(c), n - 1)
            raise FactorizationBreakdown(n, partial)
        b_n = rec.b.eval(n)
        d_next = b_n + rec.a.eval(n) / d[-1]
        c.append(b_n - d_next)
        d.append(d_next)
    return Factorization(d1, tuple(d), tuple(c), N)


def default_d1(rec: Recurrence) -> Fraction:
    """Seed choice that collapses the closed form to a pure product.

    Returns y_0/y_{-1} when both initial values are nonzero (making the
    correction term y_0 - d_1*y_{-1} vanish), else the safe fallback 1.
    """
    ym1, y0 = rec.y_init
    if ym1 != 0 and y0 != 0:
        return y0 / ym1
    return Fraction(1)


def verify_split(rec: Recurrence, fac: Factorization, y, n: int) -> bool:
    """Check the expanded two-factor form against the raw recurrence.

    `y` holds the triple (y_{n-2}, y_{n-1}, y_n).  Expanding
    (T - c_n)(T - d_n) y_{n-2} gives
    y_n - (d_{n+1} + c_n)*y_{n-1} + c_n*d_n*y_{n-2}, which must equal
    y_n - b_n*y_{n-1} - a_n*y_{n-2}.  Given the factorization identities
    this is an identity in y, so it returns True for every triple; a
    False pinpoints a corrupted factorization, not a wrong solution.
    """
    if not 1 <= n <= fac.N:
        raise IndexError(f"index {n} outside factorization horizon 1..{fac.N}")
    ym2, ym1, yn = (Fraction(v) for v in y)
    split = yn - (fac.d_at(n + 1) + fac.c_at(n)) * ym1 + fac.c_at(n) * fac.d_at(n) * ym2
    direct = yn - rec.b.eval(n) * ym1 - rec.a.eval(n) * ym2
    return split == direct
