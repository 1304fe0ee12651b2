"""The integer family f(n) = base*f(n-1) + n whose square roots at odd n
show the mock-rational digit pattern.
"""
from __future__ import annotations

from .errors import InternalInconsistency


def _check_base(base: int) -> None:
    if base < 2:
        raise ValueError("base must be at least 2")


def f_iterative(base: int, n: int) -> int:
    """Evaluate f by iterating the recurrence from f(0) = 0."""
    _check_base(base)
    if n < 0:
        raise ValueError("n must be nonnegative")
    value = 0
    for i in range(1, n + 1):
        value = base * value + i
    return value


def f_closed(base: int, n: int) -> int:
    """Evaluate f via the closed form (base**(n+1) - base*(n+1) + n) / (base-1)**2.

    Divisibility is asserted rather than assumed, so a transcription error
    in the formula can never silently corrupt downstream digits.
    """
    _check_base(base)
    if n < 0:
        raise ValueError("n must be nonnegative")
    numerator = base ** (n + 1) - base * (n + 1) + n
    square = (base - 1) ** 2
    quotient, remainder = divmod(numerator, square)
    if remainder:
        raise InternalInconsistency(
            f"closed form not divisible by (base-1)^2 at base={base}, n={n}"
        )
    return quotient


def series_constant(base: int, k: int) -> int:
    """The constant (2k-1)(base-1) + base inside the square-root series.

    With c = series_constant(base, k):

        f(2k-1) = (base**k / (base-1))**2 * (1 - c / base**(2k))
    """
    _check_base(base)
    if k < 1:
        raise ValueError("k must be at least 1")
    return (2 * k - 1) * (base - 1) + base
