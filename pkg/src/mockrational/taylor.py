"""Exact series decomposition of sqrt(f(2k-1)).

With c = series_constant(base, k) the square root expands as

    sqrt(f(2k-1)) = (base**k / (base-1)) * sum_l (-1)**l C(1/2, l) (c / base**(2k))**l

and every term past l = 0 is negative.  Each term factors into a binomial
part, a power-of-base shift, and c**l/(base-1); the digit blocks of the
full expansion are governed by the magnitudes and landing positions of
these factors, which this module computes exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .expansion import digits_of_int, rational_expansion
from .numeric import denominator_two_valuation, floor_log
from .recurrence import series_constant


def half_binomial(l: int) -> Fraction:
    """Generalized binomial coefficient C(1/2, l), exact."""
    if l < 0:
        raise ValueError("term index must be nonnegative")
    result = Fraction(1)
    for i in range(l):
        result = result * (Fraction(1, 2) - i) / (i + 1)
    return result


@dataclass(frozen=True)
class TaylorTerm:
    """One term of the series, factored for digit accounting.

    value = binom_part * series_part * base**shift
    """

    index: int
    binom_part: Fraction   # (-1)**l * C(1/2, l); denominator a power of 2
    series_part: Fraction  # c**l / (base - 1)
    shift: int             # k * (1 - 2l)

    @property
    def magnitude(self) -> Fraction:
        """|binom_part * series_part|: the unshifted digit contribution."""
        return abs(self.binom_part * self.series_part)

    def value(self, base: int) -> Fraction:
        return self.binom_part * self.series_part * Fraction(base) ** self.shift


def taylor_term(base: int, k: int, l: int) -> TaylorTerm:
    if base < 2:
        raise ValueError("base must be at least 2")
    if k < 1:
        raise ValueError("k must be at least 1")
    if l < 0:
        raise ValueError("term index must be nonnegative")
    c = series_constant(base, k)
    binom = (-1) ** l * half_binomial(l)
    series = Fraction(c ** l, base - 1)
    return TaylorTerm(l, binom, series, k * (1 - 2 * l))


def partial_sum(base: int, k: int, last_term: int) -> Fraction:
    """Exact sum of series terms 0..last_term as one rational."""
    if last_term < 0:
        raise ValueError("term index must be nonnegative")
    total = Fraction(0)
    for l in range(last_term + 1):
        total += taylor_term(base, k, l).value(base)
    return total


class ShiftParams(NamedTuple):
    two_exponent: int  # exponent of 2 in the reduced denominator of the binomial part
    tail_length: int   # least positive r with 2**two_exponent | base**r; 0 for odd bases


def shift_params(base: int, l: int) -> ShiftParams:
    """How the power-of-2 denominator of term l smears into base-b digits.

    The binomial part's denominator is 2**q; in an even base those factors
    of 2 are absorbed by r extra fractional digits before the expansion
    settles into its cycle, where r is the least positive integer with
    2**q | base**r.  Odd bases never absorb them (r = 0).
    """
    if base < 2:
        raise ValueError("base must be at least 2")
    if l < 1:
        raise ValueError("term index must be at least 1")
    q = denominator_two_valuation(half_binomial(l))
    if base % 2 == 1:
        return ShiftParams(q, 0)
    base_twos = (base & -base).bit_length() - 1
    return ShiftParams(q, -(-q // base_twos))


def leading_digit(base: int, value: Fraction | int) -> int:
    """Most significant base-``base`` digit of a positive rational."""
    q = Fraction(value)
    if q <= 0:
        raise ValueError("leading digit requires a positive value")
    return int(q / Fraction(base) ** floor_log(base, q))


@lru_cache(maxsize=None)
def _cycle(base: int, k: int, l: int) -> tuple[tuple[int, ...], int]:
    """Repeating word of block l and the significand position it starts at.

    Block 0 is the leading run of 1s (word (1,) from position 0).  For
    l >= 1 the block's repeating digits are those of the *partial sum* of
    series terms 0..l: its exact expansion is eventually periodic, and the
    cycle persists in the full expansion until term l+1 lands.  (The bare
    term magnitude |binom*series| has a different cycle in general — the
    blocks repeat the partial sum's digits, not the term's.)
    """
    if l == 0:
        return (1,), 0
    s = partial_sum(base, k, l)
    exp = rational_expansion(base, s)
    int_len = len(digits_of_int(exp.integer_part, base))
    return exp.period, int_len + len(exp.preperiod)


def block_period(base: int, k: int, l: int) -> tuple[int, ...]:
    """Minimal repeating digit word within block l.

    A single digit in even bases; possibly a longer word in odd bases.
    """
    if base < 2:
        raise ValueError("base must be at least 2")
    if k < 1:
        raise ValueError("k must be at least 1")
    if l < 0:
        raise ValueError("block index must be nonnegative")
    return _cycle(base, k, l)[0]


def block_cycle_anchor(base: int, k: int, l: int) -> int:
    """Significand position where block l's repeating word is phase-zero."""
    return _cycle(base, k, l)[1]


def landing_position(base: int, k: int, l: int) -> int:
    """Significand position where term l's leading digit lands.

    Position p counts significand digits from the leading digit (place
    value base**(k-1-p)); term l's top place is floor_log(|term|), giving
    p = 2kl - floor_log(magnitude) - 1.
    """
    if l < 1:
        raise ValueError("term index must be at least 1")
    e = floor_log(base, taylor_term(base, k, l).magnitude)
    return 2 * k * l - e - 1


def carry_correction(base: int, k: int, l: int) -> int:
    """1 when subtracting term l borrows into the previous block, else 0.

    Term l lands at significand position p; the digits already there
    continue block l-1's repeating word.  Reading both as real numbers in
    units of position p, the old tail is worth W = N * base / (base**L - 1)
    (N = the word rotated to phase p, read as an integer, L = word length)
    and the term is worth magnitude / base**floor_log(magnitude) in [1, base).
    A borrow reaches position p-1 — lengthening the non-repeating sub-block
    by one — exactly when the subtracted tail exceeds the old tail.  Ties
    count as borrows: every later term is also negative, so the true value
    dips strictly below the old tail.

    Comparing *values* matters: comparing first digits alone mispredicts
    ties (e.g. base 13, where the first digits are both 1 for l = 1 but the
    term's tail exceeds the repunit tail).
    """
    if l < 1:
        raise ValueError("term index must be at least 1")
    term = taylor_term(base, k, l)
    mag = term.magnitude
    e = floor_log(base, mag)
    word, anchor = _cycle(base, k, l - 1)
    land = 2 * k * l - e - 1
    span = len(word)
    offset = (land - anchor) % span
    rotated = word[offset:] + word[:offset]
    n_rot = 0
    for d in rotated:
        n_rot = n_rot * base + d
    old_tail = Fraction(n_rot * base, base ** span - 1)
    new_tail = mag / Fraction(base) ** e
    return 1 if new_tail >= old_tail else 0
