from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mockrational.expansion import rational_expansion
from mockrational.numeric import floor_log
from mockrational.recurrence import f_closed
from mockrational.taylor import (
    ShiftParams,
    block_cycle_anchor,
    block_period,
    carry_correction,
    half_binomial,
    leading_digit,
    partial_sum,
    shift_params,
    taylor_term,
)


def test_half_binomial_values():
    assert [half_binomial(l) for l in range(6)] == [
        Fraction(1), Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16),
        Fraction(-5, 128), Fraction(7, 256),
    ]


@given(st.integers(min_value=0, max_value=60))
def test_half_binomial_recursion(l):
    # C(1/2, l+1) = C(1/2, l) * (1/2 - l) / (l + 1)
    assert half_binomial(l + 1) == half_binomial(l) * (Fraction(1, 2) - l) / (l + 1)


def test_term_magnitudes_base10_k25():
    t1 = taylor_term(10, 25, 1)
    assert t1.magnitude == Fraction(451, 18)
    t2 = taylor_term(10, 25, 2)
    assert t2.magnitude == Fraction(203401, 72)
    assert floor_log(10, t2.magnitude) == 3
    # every term beyond the constant is a subtraction
    for l in range(1, 8):
        assert taylor_term(10, 25, l).value(10) < 0


def test_term_shift_placement():
    # term l scales like base^(k(1-2l)): its magnitude alone is O(1)-ish
    # while the shift carries the positional information
    t3 = taylor_term(10, 25, 3)
    assert t3.shift == 25 * (1 - 2 * 3)


@given(st.integers(min_value=2, max_value=16), st.integers(min_value=2, max_value=30),
       st.integers(min_value=0, max_value=5))
def test_partial_sum_is_prefix_of_series(base, k, last):
    direct = Fraction(base ** k, base - 1) * sum(
        (half_binomial(l) * Fraction(-series_c(base, k), base ** (2 * k)) ** l
         for l in range(last + 1)),
        Fraction(0),
    )
    assert partial_sum(base, k, last) == direct


def series_c(base, k):
    return (2 * k - 1) * (base - 1) + base


@given(st.integers(min_value=2, max_value=16), st.integers(min_value=5, max_value=30))
def test_partial_sums_bracket_the_root(base, k):
    f = f_closed(base, 2 * k - 1)
    s0, s1, s2, s3, s4 = (partial_sum(base, k, l) for l in range(5))
    # every correction subtracts, so the sums decrease toward sqrt(f) from above
    assert s0 > s1 > s2 > s3 > s4
    assert s3 * s3 > f
    # the remainder beyond term 4 is at most one more |t_4| (ratio << 1/2)
    lower = s3 - 2 * (s3 - s4)
    assert lower * lower < f


def test_shift_params():
    assert shift_params(10, 1) == ShiftParams(1, 1)
    assert shift_params(10, 2) == ShiftParams(3, 3)
    assert shift_params(11, 2) == ShiftParams(3, 0)   # odd base: no 2-tail
    assert shift_params(8, 2) == ShiftParams(3, 1)
    with pytest.raises(ValueError):
        shift_params(10, 0)


def test_leading_digits_worked_example():
    assert leading_digit(10, taylor_term(10, 25, 1).magnitude) == 2
    assert leading_digit(10, taylor_term(10, 25, 2).magnitude) == 2
    with pytest.raises(ValueError):
        leading_digit(10, 0)


def test_block_periods_base10_k25():
    assert [block_period(10, 25, l) for l in range(4)] == [(1,), (5,), (6,), (2,)]
    assert [block_cycle_anchor(10, 25, l) for l in range(4)] == [0, 51, 103, 154]


def test_block_periods_base13_k25():
    words = [block_period(13, 25, l) for l in range(4)]
    assert words[0] == (1,)
    assert words[1] == (0, 7)
    assert words[2] == (6, 11, 10, 2, 0, 5, 3, 8)
    assert len(words[3]) == 16
    assert [block_cycle_anchor(13, 25, l) for l in range(4)] == [0, 50, 100, 150]


def test_block_period_is_partial_sum_cycle():
    # the word is the minimal period of the partial sum through term l
    for base, l in [(10, 2), (13, 2), (11, 3), (3, 3)]:
        e = rational_expansion(base, partial_sum(base, 25, l))
        assert block_period(base, 25, l) == e.period


def test_carry_corrections():
    assert [carry_correction(10, 25, l) for l in range(1, 5)] == [1, 0, 0, 0]
    assert [carry_correction(13, 25, l) for l in range(1, 4)] == [1, 1, 1]
    assert [carry_correction(11, 25, l) for l in range(1, 5)] == [1, 1, 0, 0]
    assert [carry_correction(3, 25, l) for l in range(1, 5)] == [1, 1, 0, 0]
    assert [carry_correction(8, 25, l) for l in range(1, 5)] == [1, 0, 0, 0]


def test_carry_correction_tie_goes_to_the_borrow():
    # (13, 25, 1): the term's normalized leading digit equals the repeated
    # digit exactly; the infinite negative tail decides the comparison
    t = taylor_term(13, 25, 1)
    assert leading_digit(13, t.magnitude) == 1 == block_period(13, 25, 0)[0]
    assert carry_correction(13, 25, 1) == 1
