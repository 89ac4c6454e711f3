"""Solutions of the second-order recurrence: direct iteration and the
closed forms obtained from a linear factorization.

Direct iteration is the ground truth everywhere in this package: any
disagreement means a bug in a closed-form path, never the other way
around.  The closed-form paths consume only the factor sequences (c_n),
(d_n) plus f and the initial values — never a_n or b_n directly — so
exact agreement with the oracle exercises the factorization identities
end to end.

Conventions, fixed globally: an empty product is 1, an empty sum is 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import HorizonMismatch, NotHomogeneous, ProductFormInapplicable
from .factorize import Factorization, compute_cd
from .sequences import Recurrence


class SolveMethod(Enum):
    DIRECT_ITERATION = "direct_iteration"
    CLOSED_FORM = "closed_form"
    CLOSED_FORM_HOMOGENEOUS = "closed_form_homogeneous"
    PRODUCT = "product"


@dataclass(frozen=True)
class SolutionTrace:
    """Solution values y_{-1}..y_N plus the route that produced them.

    `aux`, present on the general closed-form route, holds the
    intermediate first-order sequence obtained by applying the inner
    linear factor to y (values indexed -1..N-1); it is exposed for
    debugging the nested first-order structure.
    """

    y: tuple[Fraction, ...]
    method: SolveMethod
    fac: Factorization | None = None
    aux: tuple[Fraction, ...] | None = None

    @property
    def N(self) -> int:
        return len(self.y) - 2

    def y_at(self, n: int) -> Fraction:
        if not -1 <= n <= self.N:
            raise IndexError(f"index {n} outside -1..{self.N}")
        return self.y[n + 1]


def iterate_direct(rec: Recurrence, N: int) -> SolutionTrace:
    """Ground-truth oracle: run y_n = b_n*y_{n-1} + a_n*y_{n-2} + f_n."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    ym1, y0 = rec.y_init
    ys = [ym1, y0]
    for n in range(1, N + 1):
        ys.append(rec.b.eval(n) * ys[-1] + rec.a.eval(n) * ys[-2] + rec.f.eval(n))
    return SolutionTrace(tuple(ys), SolveMethod.DIRECT_ITERATION)


def closed_form_nonhomogeneous(
    rec: Recurrence, fac: Factorization, N: int
) -> SolutionTrace:
    """General closed form over a factorization covering horizon N:

        y_n = sum_{i=1}^{n+1} W_i * prod_{j=i+1}^{n+1} d_j
              + y_{-1} * prod_{j=1}^{n+1} d_j

        W_i = sum_{j=1}^{i-1} f_j * prod_{k=j+1}^{i-1} c_k
              + (y_0 - d_1*y_{-1}) * prod_{k=1}^{i-1} c_k

    Both nested sums-of-products are evaluated with running prefix and
    suffix products (Horner style), which leaves the arithmetic exact
    and the total cost linear in N for the whole trace.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if fac.N < N:
        raise HorizonMismatch(
            f"factorization horizon {fac.N} does not cover N = {N}"
        )
    ym1, y0 = rec.y_init
    aux = [y0 - fac.d1 * ym1]
    for i in range(1, N + 1):
        aux.append(aux[-1] * fac.c_at(i) + rec.f.eval(i))
    ys = [ym1, y0]
    inner = aux[0]
    dprod = fac.d_at(1)
    for n in range(1, N + 1):
        inner = inner * fac.d_at(n + 1) + aux[n]
        dprod = dprod * fac.d_at(n + 1)
        ys.append(inner + ym1 * dprod)
    return SolutionTrace(
        tuple(ys), SolveMethod.CLOSED_FORM, fac=fac, aux=tuple(aux)
    )


def closed_form_homogeneous(
    rec: Recurrence, fac: Factorization, N: int
) -> SolutionTrace:
    """Single-sum closed form for the homogeneous case (f = 0):

        y_n = (y_0 - d_1*y_{-1})
              * sum_{i=1}^{n+1} prod_{j=1}^{i-1} c_j * prod_{j=i+1}^{n+1} d_j
              + y_{-1} * prod_{j=1}^{n+1} d_j
    """
    if not rec.f.is_zero:
        raise NotHomogeneous("forcing sequence f must be identically zero")
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if fac.N < N:
        raise HorizonMismatch(
            f"factorization horizon {fac.N} does not cover N = {N}"
        )
    ym1, y0 = rec.y_init
    head = y0 - fac.d1 * ym1
    cpref = [Fraction(1)]
    for i in range(1, N + 1):
        cpref.append(cpref[-1] * fac.c_at(i))
    ys = [ym1, y0]
    inner = cpref[0]
    dprod = fac.d_at(1)
    for n in range(1, N + 1):
        inner = inner * fac.d_at(n + 1) + cpref[n]
        dprod = dprod * fac.d_at(n + 1)
        ys.append(head * inner + ym1 * dprod)
    return SolutionTrace(tuple(ys), SolveMethod.CLOSED_FORM_HOMOGENEOUS, fac=fac)


def product_solution(rec: Recurrence, N: int) -> SolutionTrace:
    """Pure-product solution y_n = y_{-1} * prod_{j=1}^{n+1} d_j.

    Seeding the factorization with d_1 = y_0/y_{-1} zeroes the
    (y_0 - d_1*y_{-1}) head of the homogeneous closed form, collapsing it
    to a single running product.  Needs f = 0 and both initial values
    nonzero (y_0 = 0 would force the unusable seed d_1 = 0); a breakdown
    inside the factorization propagates unchanged.
    """
    if not rec.f.is_zero:
        raise NotHomogeneous("forcing sequence f must be identically zero")
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    ym1, y0 = rec.y_init
    if ym1 == 0:
        raise ProductFormInapplicable("pure-product form requires y_{-1} != 0")
    if y0 == 0:
        raise ProductFormInapplicable(
            "y_0 = 0 forces the seed d_1 = 0, which the recursion cannot use"
        )
    fac = compute_cd(rec, y0 / ym1, N)
    ys = [ym1, y0]
    dprod = fac.d_at(1)
    for n in range(1, N + 1):
        dprod = dprod * fac.d_at(n + 1)
        ys.append(ym1 * dprod)
    return SolutionTrace(tuple(ys), SolveMethod.PRODUCT, fac=fac)
