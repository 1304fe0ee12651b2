"""Exact integer/rational helpers: floor square root, floor logarithm,
and the two-adic valuation of a denominator.

Everything here works on Python ints and ``fractions.Fraction`` and never
touches floating point: the digit machinery downstream is off-by-one
sensitive, so all comparisons are exact.
"""
from __future__ import annotations

from fractions import Fraction

import math

RationalLike = Fraction | int


def isqrt(x: int) -> int:
    """Floor square root of a nonnegative integer."""
    if x < 0:
        raise ValueError("isqrt requires a nonnegative integer")
    return math.isqrt(x)


def floor_log(base: int, value: RationalLike) -> int:
    """Greatest integer e such that base**e <= |value|.

    Computed by exact integer scaling; may be negative when |value| < 1.
    """
    if base < 2:
        raise ValueError("base must be at least 2")
    q = Fraction(value)
    if q == 0:
        raise ValueError("floor_log is undefined at 0")
    num = abs(q.numerator)
    den = q.denominator
    if num >= den:
        exp = -1
        scaled = den
        while scaled <= num:
            scaled *= base
            exp += 1
        return exp
    exp = 0
    scaled = num
    while scaled < den:
        scaled *= base
        exp -= 1
    return exp


def denominator_two_valuation(value: RationalLike) -> int:
    """Exponent of 2 in the reduced denominator of a nonzero rational."""
    q = Fraction(value)
    if q == 0:
        raise ValueError("denominator valuation is undefined at 0")
    den = q.denominator
    return (den & -den).bit_length() - 1
