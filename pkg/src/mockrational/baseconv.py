"""Regroup digit strings from base b into base b^m.

Grouping m digits leftward from the radix point gives the integer part,
rightward the fractional part; each group becomes one base-b^m digit.  The
value is preserved exactly except that a final short fractional group (fewer
than m digits) is dropped, and that loss is reported alongside the result.
Regrouping a schizophrenic expansion this way is how the pattern is shown to
survive in the derived bases.
"""
from __future__ import annotations

from dataclasses import dataclass

from .blocks import DetectedBlock, detect_blocks
from .expansion import DigitString, sqrt_digits


@dataclass(frozen=True)
class RegroupResult:
    digits: DigitString
    dropped: int        # trailing fractional digits lost to truncation


@dataclass(frozen=True)
class PersistenceEntry:
    power: int
    base: int
    blocks: tuple[DetectedBlock, ...]
    present: bool       # at least two qualifying repeating runs


@dataclass(frozen=True)
class PersistenceReport:
    base: int
    k: int
    precision: int
    entries: tuple[PersistenceEntry, ...]

    @property
    def all_present(self) -> bool:
        return bool(self.entries) and all(e.present for e in self.entries)


def regroup(ds: DigitString, power: int) -> RegroupResult:
    """Convert ds to base ds.base**power by digit grouping."""
    if power < 1:
        raise ValueError("power must be at least 1")
    if power == 1:
        return RegroupResult(ds, 0)
    b = ds.base
    int_digits = list(ds.integer_digits)
    frac_digits = list(ds.fraction_digits)
    pad = (-len(int_digits)) % power
    int_digits = [0] * pad + int_digits
    dropped = len(frac_digits) % power
    if dropped:
        frac_digits = frac_digits[:-dropped]

    def grouped(source: list[int]) -> list[int]:
        out = []
        for i in range(0, len(source), power):
            value = 0
            for d in source[i: i + power]:
                value = value * b + d
            out.append(value)
        return out

    new_int = grouped(int_digits)
    new_frac = grouped(frac_digits)
    result = DigitString(b ** power, tuple(new_int + new_frac), len(new_int))
    return RegroupResult(result, dropped)


def max_regroup_power(longest_rep: int) -> int:
    """Greatest m whose grouping still leaves two full copies of the longest
    repeating run: the largest m with floor(longest_rep / m) == 2."""
    if longest_rep < 2:
        raise ValueError(
            f"no regrouping power leaves two copies of a run of length {longest_rep}"
        )
    for m in range(longest_rep // 2, 0, -1):
        if longest_rep // m == 2:
            return m
    raise ValueError(
        f"no regrouping power leaves two copies of a run of length {longest_rep}"
    )


def check_persistence(
    base: int,
    k: int,
    powers: tuple[int, ...] | list[int],
    precision: int | None = None,
    min_reps: int = 4,
    max_period: int = 8,
) -> PersistenceReport:
    """Detect repeating runs in base base**m for each requested m.

    The expansion of sqrt(f(2k-1)) is computed once in the source base, then
    regrouped.  "Pattern present" means the detector certifies at least two
    qualifying runs in the regrouped stream.
    """
    if not powers:
        raise ValueError("at least one power is required")
    if precision is None:
        precision = 8 * k
    ds = sqrt_digits(base, 2 * k - 1, precision - k)
    entries = []
    for m in powers:
        converted = regroup(ds, m).digits
        found = tuple(detect_blocks(converted.digits, min_reps=min_reps,
                                    max_period=max_period))
        entries.append(PersistenceEntry(m, base ** m, found, len(found) >= 2))
    return PersistenceReport(base, k, precision, tuple(entries))
