"""Positional digit strings and exact expansions.

Two digit containers live here: ``DigitString`` (a truncated positional
numeral, most-significant digit first, with an explicit radix offset) and
``PeriodicExpansion`` (the exact eventually-periodic expansion of a
nonnegative rational).  On top of them sit the square-root digit
extractor, rational long division with minimal-period detection, and the
text rendering/parsing grammar used by the CLI and the golden files.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .numeric import isqrt
from .recurrence import f_closed

DIGIT_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"
_CHAR_VALUE = {ch: i for i, ch in enumerate(DIGIT_ALPHABET)}


def digit_char(value: int, base: int) -> str:
    """Single-character form of a digit (bases up to 36)."""
    if not 0 <= value < base:
        raise ValueError(f"digit {value} out of range for base {base}")
    if base > len(DIGIT_ALPHABET):
        raise ValueError("single-character digits only exist for bases <= 36")
    return DIGIT_ALPHABET[value]


def digits_of_int(value: int, base: int) -> list[int]:
    """Base-``base`` digits of a nonnegative integer, most significant first."""
    if base < 2:
        raise ValueError("base must be at least 2")
    if value < 0:
        raise ValueError("value must be nonnegative")
    if value == 0:
        return [0]
    out: list[int] = []
    while value:
        value, d = divmod(value, base)
        out.append(d)
    out.reverse()
    return out


@dataclass(frozen=True)
class DigitString:
    """A truncated base-``base`` numeral.

    ``digits`` holds the full significand most-significant first;
    ``radix_offset`` counts how many of them sit before the radix point.
    The represented value is sum(digits[i] * base**(radix_offset - 1 - i)).
    """

    base: int
    digits: tuple[int, ...]
    radix_offset: int

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be at least 2")
        if not self.digits:
            raise ValueError("a digit string needs at least one digit")
        if not 1 <= self.radix_offset <= len(self.digits):
            raise ValueError("radix_offset must lie within the digit vector")
        if any(not 0 <= d < self.base for d in self.digits):
            raise ValueError(f"digit out of range for base {self.base}")
        if self.radix_offset >= 2 and self.digits[0] == 0:
            raise ValueError("redundant leading zero in integer part")

    @property
    def integer_digits(self) -> tuple[int, ...]:
        return self.digits[: self.radix_offset]

    @property
    def fraction_digits(self) -> tuple[int, ...]:
        return self.digits[self.radix_offset:]

    def value(self) -> Fraction:
        total = 0
        for d in self.digits:
            total = total * self.base + d
        return Fraction(total, self.base ** (len(self.digits) - self.radix_offset))

    def __len__(self) -> int:
        return len(self.digits)


@dataclass(frozen=True)
class PeriodicExpansion:
    """Exact expansion of a nonnegative rational: integer part, then a
    non-repeating fractional prefix, then a minimal repeating cycle.

    Terminating expansions carry period ``(0,)``.
    """

    base: int
    integer_part: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be at least 2")
        if self.integer_part < 0:
            raise ValueError("integer part must be nonnegative")
        if not self.period:
            raise ValueError("period must be nonempty")
        for d in self.preperiod + self.period:
            if not 0 <= d < self.base:
                raise ValueError(f"digit out of range for base {self.base}")

    def fraction_digit(self, i: int) -> int:
        """The i-th fractional digit (0-based), continuing the cycle forever."""
        if i < 0:
            raise ValueError("fractional index must be nonnegative")
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def value(self) -> Fraction:
        b = self.base
        pre_val = 0
        for d in self.preperiod:
            pre_val = pre_val * b + d
        per_val = 0
        for d in self.period:
            per_val = per_val * b + d
        shift = b ** len(self.preperiod)
        frac = Fraction(pre_val, shift)
        frac += Fraction(per_val, shift * (b ** len(self.period) - 1))
        return self.integer_part + frac


def sqrt_value_digits(value: int, base: int, frac_digits: int) -> DigitString:
    """Truncated base-``base`` digits of the square root of an integer."""
    if base < 2:
        raise ValueError("base must be at least 2")
    if value < 0:
        raise ValueError("value must be nonnegative")
    if frac_digits < 0:
        raise ValueError("fractional digit count must be nonnegative")
    scaled = isqrt(value * base ** (2 * frac_digits))
    digits = digits_of_int(scaled, base)
    if len(digits) < frac_digits + 1:
        digits = [0] * (frac_digits + 1 - len(digits)) + digits
    return DigitString(base, tuple(digits), len(digits) - frac_digits)


def sqrt_digits(base: int, n: int, frac_digits: int) -> DigitString:
    """Exact truncation of sqrt(f(n)) to ``frac_digits`` fractional digits.

    Truncation, never rounding: the digits are read off isqrt(f * base**(2p)).
    Only odd n is accepted — the repeating-block structure exists at odd
    indices only.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be a positive odd integer")
    return sqrt_value_digits(f_closed(base, n), base, frac_digits)


def rational_expansion(base: int, value: Fraction | int) -> PeriodicExpansion:
    """Long division of a nonnegative rational with cycle detection.

    The remainder-recurrence visits each remainder at most once, so the
    first repeated remainder marks both the minimal preperiod and the
    minimal period.
    """
    if base < 2:
        raise ValueError("base must be at least 2")
    q = Fraction(value)
    if q < 0:
        raise ValueError("value must be nonnegative")
    integer, rem = divmod(q.numerator, q.denominator)
    den = q.denominator
    seen: dict[int, int] = {}
    digits: list[int] = []
    while rem and rem not in seen:
        seen[rem] = len(digits)
        d, rem = divmod(rem * base, den)
        digits.append(d)
    if not rem:
        return PeriodicExpansion(base, integer, tuple(digits), (0,))
    start = seen[rem]
    return PeriodicExpansion(base, integer, tuple(digits[:start]), tuple(digits[start:]))


def _leading_nonzero(digits: tuple[int, ...]) -> int:
    for i, d in enumerate(digits):
        if d:
            return i
    return 0


def _chunk(seq: tuple[int, ...], size: int) -> list[tuple[int, ...]]:
    return [seq[i: i + size] for i in range(0, len(seq), size)]


def _digit_text(digits, base: int) -> str:
    if base <= 36:
        return "".join(DIGIT_ALPHABET[d] for d in digits)
    return ":".join(str(d) for d in digits)


def render(
    ds: DigitString,
    group: int = 10,
    groups_per_row: int = 5,
    scientific: bool = False,
    subscript: bool = True,
) -> str:
    """Display a digit string the way the worked examples lay numbers out.

    Digits are chunked in groups of ``group`` separated by single spaces,
    ``groups_per_row`` groups to a row.  In scientific mode the first
    significant digit leads, the radix point follows it, and the final row
    ends with the exponent tail "×<base>^<e>" where e = radix_offset - 1;
    an optional "_<base>" subscript sits between the last digit and the
    tail.  Bases above 36 are laid out as ':'-joined decimal digits on a
    single line (no grouping).
    """
    if group < 1:
        raise ValueError("group must be at least 1")
    if groups_per_row < 1:
        raise ValueError("groups_per_row must be at least 1")
    base = ds.base

    suffix = ""
    if subscript:
        suffix += f"_{base}"

    if scientific:
        lead = _leading_nonzero(ds.digits)
        exponent = ds.radix_offset - 1 - lead
        head = ds.digits[lead]
        tail = ds.digits[lead + 1:]
        suffix += f"×{base}^{exponent}"
        if base > 36:
            body = _digit_text((head,), base)
            if tail:
                body += "." + _digit_text(tail, base)
            return body + suffix
        chunks = _chunk(tail, group)
        if not chunks:
            return digit_char(head, base) + suffix
        rows = []
        first = digit_char(head, base) + "." + " ".join(
            _digit_text(c, base) for c in chunks[:groups_per_row]
        )
        rows.append(first)
        for i in range(groups_per_row, len(chunks), groups_per_row):
            rows.append(" ".join(_digit_text(c, base) for c in chunks[i: i + groups_per_row]))
        rows[-1] += suffix
        return "\n".join(rows)

    int_digits = ds.integer_digits
    frac_digits = ds.fraction_digits
    if base > 36:
        body = _digit_text(int_digits, base)
        if frac_digits:
            body += "." + _digit_text(frac_digits, base)
        return body + suffix
    if not frac_digits:
        return _digit_text(int_digits, base) + suffix
    chunks = _chunk(frac_digits, group)
    rows = []
    first = _digit_text(int_digits, base) + "." + " ".join(
        _digit_text(c, base) for c in chunks[:groups_per_row]
    )
    rows.append(first)
    for i in range(groups_per_row, len(chunks), groups_per_row):
        rows.append(" ".join(_digit_text(c, base) for c in chunks[i: i + groups_per_row]))
    rows[-1] += suffix
    return "\n".join(rows)


def compact(ds: DigitString, subscript: bool = True) -> str:
    """Single-line ungrouped form: INT.FRAC with an optional base suffix.

    This is the machine-readable shape embedded in structured output;
    ``parse`` inverts it.
    """
    body = _digit_text(ds.integer_digits, ds.base)
    if ds.fraction_digits:
        body += "." + _digit_text(ds.fraction_digits, ds.base)
    if subscript:
        body += f"_{ds.base}"
    return body


_EXP_CROSS = re.compile(r"[×x](\d+)\^([+-]?\d+)$")
_EXP_E = re.compile(r"e([+-]?\d+)$")
_SUBSCRIPT = re.compile(r"_(\d+)$")


def parse(text: str, base: int) -> DigitString:
    """Parse the rendering grammar back into a DigitString.

    All whitespace is display grouping and is ignored.  Both exponent
    spellings are accepted ("×<base>^<e>" and, for bases without an 'e'
    digit, "e<exp>").  A "_<base>" suffix must agree with ``base``.
    """
    if base < 2:
        raise ValueError("base must be at least 2")
    s = "".join(text.split())
    if not s:
        raise ValueError("empty digit string")
    if s[0] == "+":
        s = s[1:]
    elif s[0] == "-":
        raise ValueError("negative values have no digit-string form")

    exponent = 0
    m = _EXP_CROSS.search(s)
    if m:
        if int(m.group(1)) != base:
            raise ValueError(f"exponent base {m.group(1)} does not match base {base}")
        exponent = int(m.group(2))
        s = s[: m.start()]
    m = _SUBSCRIPT.search(s)
    if m:
        if int(m.group(1)) != base:
            raise ValueError(f"base subscript {m.group(1)} does not match base {base}")
        s = s[: m.start()]
    if exponent == 0 and base < _CHAR_VALUE["e"]:
        # 'e' cannot be a digit here, so a trailing e<exp> is an exponent.
        m = _EXP_E.search(s)
        if m:
            exponent = int(m.group(1))
            s = s[: m.start()]

    if s.count(".") > 1:
        raise ValueError("malformed radix point")
    int_text, _, frac_text = s.partition(".")
    if not int_text:
        raise ValueError("missing integer part")
    if "." in s and not frac_text:
        raise ValueError("malformed radix point")

    def decode(part: str) -> list[int]:
        if base > 36:
            return [int(piece) for piece in part.split(":")] if part else []
        out = []
        for ch in part:
            v = _CHAR_VALUE.get(ch)
            if v is None:
                raise ValueError(f"invalid character {ch!r}")
            out.append(v)
        return out

    digits = decode(int_text) + decode(frac_text)
    if any(not 0 <= d < base for d in digits):
        bad = next(d for d in digits if not 0 <= d < base)
        raise ValueError(f"invalid digit {bad} for base {base}")
    offset = len(decode(int_text)) + exponent
    if offset < 1:
        digits = [0] * (1 - offset) + digits
        offset = 1
    elif offset > len(digits):
        digits = digits + [0] * (offset - len(digits))
    # strip a redundant leading zero introduced by e.g. "0.5e1" -> "05."
    while len(digits) > 1 and offset >= 2 and digits[0] == 0:
        digits = digits[1:]
        offset -= 1
    return DigitString(base, tuple(digits), offset)
