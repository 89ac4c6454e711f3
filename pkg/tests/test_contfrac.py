"""Convergent recurrences, decimal evaluation and the solver bridge."""

from decimal import Decimal
from fractions import Fraction
from math import prod

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from recfrac.arith import pi_squared_reference, to_decimal
from recfrac.contfrac import CFSpec, cf_to_recurrence, convergents, value
from recfrac.errors import IndeterminateConvergent
from recfrac.sequences import PolySeq
from recfrac.solve import iterate_direct

CF8 = CFSpec(b=PolySeq((1, 3, 3)), a=PolySeq((0, 0, 0, 1, -2)))
CF18 = CFSpec(b=PolySeq((2, 6, 5)), a=PolySeq((0, 0, 0, 2, -4)))

coeff = st.fractions(min_value=-9, max_value=9, max_denominator=9)
polys = st.lists(coeff, min_size=1, max_size=4).map(lambda c: PolySeq(tuple(c)))


def test_convergents_examples():
    pair = convergents(CF8, 1)
    assert pair.A == (1, 1, 6)
    assert pair.B == (0, 1, 7)

    pair = convergents(CF18, 1)
    assert pair.A == (1, 2, 24)
    assert pair.B == (0, 1, 13)


def test_degenerate_cf_is_constant():
    cf = CFSpec(b=PolySeq((5,)), a=PolySeq.zero())
    pair = convergents(cf, 6)
    assert all(pair.ratio(n) == 5 for n in range(7))


def test_convergent_pair_accessors():
    pair = convergents(CF8, 2)
    assert pair.N == 2
    assert pair.A_at(-1) == 1 and pair.B_at(-1) == 0
    assert pair.A_at(2) == 90 and pair.B_at(2) == 109
    with pytest.raises(IndexError):
        pair.A_at(3)
    with pytest.raises(IndeterminateConvergent):
        pair.ratio(-1)


def test_value_examples():
    assert str(value(CF8, 1, 10)) == "0.8571428571"  # 6/7
    assert str(value(CF18, 1, 10)) == "1.846153846"  # 24/13


def test_value_sixty_steps_golden():
    assert str(value(CF8, 60, 12)) == "0.810569469139"
    ratio = convergents(CF8, 60).ratio(60)
    target = to_decimal(Fraction(8), 50) / pi_squared_reference(50)
    assert abs(to_decimal(ratio, 50) - target).value < Decimal("1e-15")


def test_value_indeterminate():
    # b_1 = 0 makes B_1 = 0 while A_1 = 1
    cf = CFSpec(b=PolySeq.zero(), a=PolySeq((1,)))
    pair = convergents(cf, 1)
    assert pair.B_at(1) == 0 and pair.A_at(1) == 1
    with pytest.raises(IndeterminateConvergent):
        value(cf, 1, 10)


def test_cf_to_recurrence_initial_values():
    assert cf_to_recurrence(CF8, "A").y_init == (1, 1)
    assert cf_to_recurrence(CF18, "A").y_init == (1, 2)
    assert cf_to_recurrence(CF8, "B").y_init == (0, 1)
    assert cf_to_recurrence(CF18, "B").y_init == (0, 1)
    with pytest.raises(ValueError):
        cf_to_recurrence(CF8, "C")


@settings(max_examples=80, deadline=None)
@given(polys, polys)
def test_bridge_to_recurrence_solver(b, a):
    # approximants computed by the three-term recurrence must coincide
    # with the solver run on the bridged recurrence instances, exactly
    N = 12
    cf = CFSpec(b=b, a=a)
    pair = convergents(cf, N)
    for which, seq in (("A", pair.A), ("B", pair.B)):
        trace = iterate_direct(cf_to_recurrence(cf, which), N)
        assert trace.y == seq


@settings(max_examples=80, deadline=None)
@given(polys, polys)
def test_determinant_identity(b, a):
    N = 12
    pair = convergents(CFSpec(b=b, a=a), N)
    for n in range(0, N + 1):
        det = pair.A_at(n) * pair.B_at(n - 1) - pair.A_at(n - 1) * pair.B_at(n)
        assert det == (-1) ** (n + 1) * prod(
            (a.eval(k) for k in range(1, n + 1)), start=Fraction(1)
        )


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(min_value=1, max_value=9), min_size=1, max_size=3),
    st.lists(st.integers(min_value=1, max_value=9), min_size=1, max_size=3),
)
def test_positive_cf_oscillates(bc, ac):
    # all-positive partial numerators and denominators: successive
    # convergents alternate sides, so consecutive differences alternate sign
    N = 10
    pair = convergents(CFSpec(b=PolySeq(tuple(bc)), a=PolySeq(tuple(ac))), N)
    diffs = [pair.ratio(n + 1) - pair.ratio(n) for n in range(N)]
    assert all(d != 0 for d in diffs)
    assert all(diffs[i] * diffs[i + 1] < 0 for i in range(len(diffs) - 1))
