"""Generalized continued fraction convergents.

For b_0 + a_1/(b_1 + a_2/(b_2 + ...)), the truncation after b_N equals
A_N/B_N where both sequences satisfy the same three-term recurrence
X_n = b_n*X_{n-1} + a_n*X_{n-2} with seeds A_{-1} = 1, A_0 = b_0,
B_{-1} = 0, B_0 = 1.  Convergents are computed by that forward
recurrence — exact rationals make it stable — rather than by folding the
fraction bottom-up.  The pair is deliberately left unnormalized (no
common-factor stripping) so that factorial-type closed forms for A_n and
B_n can be checked verbatim; :meth:`ConvergentPair.ratio` reduces on
demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import BigDecimal, to_decimal
from .errors import IndeterminateConvergent
from .sequences import PolySeq, Recurrence


@dataclass(frozen=True)
class CFSpec:
    """Partial denominators b (consumed from n = 0) and partial
    numerators a (consumed from n = 1)."""

    b: PolySeq
    a: PolySeq


@dataclass(frozen=True)
class ConvergentPair:
    """Exact convergent numerators A and denominators B, indexed -1..N."""

    A: tuple[Fraction, ...]
    B: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.A) != len(self.B) or len(self.A) < 2:
            raise ValueError("A and B must both cover -1..N")
        if self.A[0] != 1 or self.B[0] != 0 or self.B[1] != 1:
            raise ValueError("seeds must be A_{-1}=1, B_{-1}=0, B_0=1")

    @property
    def N(self) -> int:
        return len(self.A) - 2

    def A_at(self, n: int) -> Fraction:
        if not -1 <= n <= self.N:
            raise IndexError(f"index {n} outside -1..{self.N}")
        return self.A[n + 1]

    def B_at(self, n: int) -> Fraction:
        if not -1 <= n <= self.N:
            raise IndexError(f"index {n} outside -1..{self.N}")
        return self.B[n + 1]

    def ratio(self, n: int) -> Fraction:
        """A_n/B_n in lowest terms; raises when B_n = 0."""
        bn = self.B_at(n)
        if bn == 0:
            raise IndeterminateConvergent(f"B_{n} = 0, convergent undefined")
        return self.A_at(n) / bn


def convergents(cf: CFSpec, N: int) -> ConvergentPair:
    """Exact A_n, B_n for n = -1..N via the forward recurrence."""
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    b0 = cf.b.eval(0)
    A = [Fraction(1), b0]
    B = [Fraction(0), Fraction(1)]
    for n in range(1, N + 1):
        bn = cf.b.eval(n)
        an = cf.a.eval(n)
        A.append(bn * A[-1] + an * A[-2])
        B.append(bn * B[-1] + an * B[-2])
    return ConvergentPair(tuple(A), tuple(B))


def value(cf: CFSpec, N: int, digits: int) -> BigDecimal:
    """Decimal value of the N-th convergent to `digits` significant digits."""
    pair = convergents(cf, N)
    return to_decimal(pair.ratio(N), digits)


def cf_to_recurrence(cf: CFSpec, which: str) -> Recurrence:
    """View one approximant sequence as a homogeneous recurrence instance.

    `which` selects the numerators "A" (initial values 1, b_0) or the
    denominators "B" (initial values 0, 1).  This is the bridge between
    continued fraction evaluation and the recurrence solver: iterating
    the returned instance reproduces the convergent sequence exactly.
    """
    if which == "A":
        y_init = (Fraction(1), cf.b.eval(0))
    elif which == "B":
        y_init = (Fraction(0), Fraction(1))
    else:
        raise ValueError(f"which must be 'A' or 'B', got {which!r}")
    return Recurrence(a=cf.a, b=cf.b, f=PolySeq.zero(), y_init=y_init)
