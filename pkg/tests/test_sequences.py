"""PolySeq evaluation, parsing and canonical formatting."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from recfrac.errors import DomainViolation, ParseError
from recfrac.sequences import PolySeq, Recurrence, format_polyseq, parse_polyseq

coeff = st.fractions(min_value=-9, max_value=9, max_denominator=9)
coeff_lists = st.lists(coeff, min_size=1, max_size=8)


def test_eval_examples():
    assert PolySeq((1, 3, 3)).eval(1) == 7
    assert PolySeq((0, 0, 0, 1, -2)).eval(1) == -1  # n^3 - 2n^4 at n=1
    assert PolySeq((0,)).eval(100) == 0


def test_eval_below_domain():
    seq = PolySeq((1, 1), offset_domain=1)
    assert seq.eval(1) == 2
    with pytest.raises(DomainViolation):
        seq.eval(0)


def test_canonical_trimming():
    assert PolySeq((1, 2, 0, 0)).coeffs == (Fraction(1), Fraction(2))
    assert PolySeq((0, 0, 0)).coeffs == (Fraction(0),)
    assert PolySeq(()).coeffs == (Fraction(0),)
    assert PolySeq((0,)).is_zero


def test_parse_examples():
    assert parse_polyseq("3*n^2 + 3*n + 1").coeffs == (1, 3, 3)
    assert parse_polyseq("-4*n^4 + 2*n^3").coeffs == (0, 0, 0, 2, -4)
    assert parse_polyseq("n^2 - n^2").coeffs == (Fraction(0),)


def test_parse_forms():
    assert parse_polyseq("n").coeffs == (0, 1)
    assert parse_polyseq("-n").coeffs == (0, -1)
    assert parse_polyseq("7").coeffs == (7,)
    assert parse_polyseq("1/2*n^2 - 3").coeffs == (-3, 0, Fraction(1, 2))
    assert parse_polyseq(" 2 * n ^ 3 ").coeffs == (0, 0, 0, 2)
    assert parse_polyseq("n + n").coeffs == (0, 2)
    assert parse_polyseq("n^0").coeffs == (1,)


@pytest.mark.parametrize(
    "text,pos",
    [
        ("", 0),
        ("3*x", 2),
        ("3**n", 2),
        ("3*n^", 4),
        ("3 n", 2),
        ("1/0*n", 2),
        ("3*", 2),
        ("3 +", 3),
        ("n^-2", 2),
    ],
)
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as err:
        parse_polyseq(text)
    assert err.value.position == pos


@given(coeff_lists)
def test_parse_format_round_trip(coeffs):
    seq = PolySeq(tuple(coeffs))
    assert parse_polyseq(format_polyseq(seq)) == seq


@given(
    st.lists(st.tuples(coeff, st.integers(min_value=0, max_value=6)),
             min_size=1, max_size=6),
    st.integers(min_value=0, max_value=20),
)
def test_parse_agrees_with_term_list(terms, n):
    # build unsorted, duplicated term text and compare against direct
    # evaluation of the same term list
    pieces = []
    for c, p in terms:
        if p == 0:
            pieces.append(str(c))
        elif p == 1:
            pieces.append(f"{c}*n")
        else:
            pieces.append(f"{c}*n^{p}")
    text = " + ".join(pieces)
    expected = sum(c * Fraction(n) ** p for c, p in terms)
    assert parse_polyseq(text).eval(n) == expected


@given(coeff_lists, coeff_lists)
def test_distinct_low_degree_polys_differ_on_small_points(c1, c2):
    # two degree-<=10 polynomials agreeing on 0..10 are identical, so
    # distinct canonical forms must differ somewhere in that window
    p, q = PolySeq(tuple(c1)), PolySeq(tuple(c2))
    if p != q:
        assert any(p.eval(n) != q.eval(n) for n in range(11))
    else:
        assert all(p.eval(n) == q.eval(n) for n in range(11))


def test_recurrence_coerces_initial_values():
    rec = Recurrence(
        a=PolySeq((1,)), b=PolySeq((1,)), f=PolySeq.zero(), y_init=(1, 2)
    )
    assert rec.y_init == (Fraction(1), Fraction(2))
    assert Recurrence.homogeneous(PolySeq((1,)), PolySeq((1,)), (0, 1)).f.is_zero
