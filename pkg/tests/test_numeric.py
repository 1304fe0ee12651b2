import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mockrational.numeric import denominator_two_valuation, floor_log, isqrt


def isqrt_bit_by_bit(x: int) -> int:
    """Independent oracle: build the root one bit at a time from the top."""
    if x < 2:
        return x
    root = 0
    bit = 1 << (x.bit_length() // 2)
    while bit:
        cand = root | bit
        if cand * cand <= x:
            root = cand
        bit >>= 1
    return root


def test_isqrt_small_values():
    assert [isqrt(i) for i in range(10)] == [0, 1, 1, 1, 2, 2, 2, 2, 2, 3]
    assert isqrt(10**40) == 10**20
    assert isqrt(10**40 - 1) == 10**20 - 1


def test_isqrt_rejects_negative():
    with pytest.raises(ValueError):
        isqrt(-1)


@given(st.integers(min_value=0, max_value=2**256))
def test_isqrt_invariant(x):
    r = isqrt(x)
    assert r * r <= x < (r + 1) * (r + 1)


@settings(max_examples=200)
@given(st.integers(min_value=0, max_value=2**256))
def test_isqrt_matches_bit_oracle(x):
    assert isqrt(x) == isqrt_bit_by_bit(x)


def test_isqrt_bulk_random_against_oracle():
    rng = random.Random(0xC0FFEE)
    for _ in range(2000):
        x = rng.getrandbits(rng.randrange(1, 257))
        r = isqrt(x)
        assert r * r <= x < (r + 1) * (r + 1)
        assert r == isqrt_bit_by_bit(x)


def test_floor_log_integers():
    assert floor_log(10, 1) == 0
    assert floor_log(10, 9) == 0
    assert floor_log(10, 10) == 1
    assert floor_log(10, 999) == 2
    assert floor_log(10, 1000) == 3
    assert floor_log(2, 1 << 80) == 80


def test_floor_log_fractions():
    assert floor_log(10, Fraction(1, 10)) == -1
    assert floor_log(10, Fraction(1, 11)) == -2
    assert floor_log(10, Fraction(99, 10)) == 0
    assert floor_log(3, Fraction(1, 3)) == -1
    # the worked intermediate: |t_{2,1} t_{2,3}| = 203401/72 ~ 2825.01
    assert floor_log(10, Fraction(203401, 72)) == 3


def test_floor_log_magnitude_and_domain():
    assert floor_log(10, Fraction(-1, 2)) == -1   # magnitude-based
    with pytest.raises(ValueError):
        floor_log(10, 0)
    with pytest.raises(ValueError):
        floor_log(1, 5)


@given(st.integers(min_value=2, max_value=40),
       st.fractions(min_value=Fraction(1, 10**12), max_value=Fraction(10**12)))
def test_floor_log_defining_property(base, q):
    e = floor_log(base, q)
    assert Fraction(base) ** e <= q < Fraction(base) ** (e + 1)


def test_denominator_two_valuation():
    assert denominator_two_valuation(Fraction(1, 2)) == 1
    assert denominator_two_valuation(Fraction(3, 8)) == 3
    assert denominator_two_valuation(Fraction(5, 48)) == 4
    assert denominator_two_valuation(Fraction(7, 3)) == 0
    assert denominator_two_valuation(5) == 0
    with pytest.raises(ValueError):
        denominator_two_valuation(0)
