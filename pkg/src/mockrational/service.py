"""Request/response models and the operations behind the API and CLI.

Every command — expand, predict, verify, sequence, convert — takes a typed
request and returns one CommandResponse document with stable field names.
The CLI consumes these responses whether it ran the operation in-process or
against a running server, so both paths exercise identical plumbing.
"""
from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from . import baseconv, blocks
from .expansion import (
    DigitString,
    compact,
    digit_char,
    digits_of_int,
    sqrt_value_digits,
)
from .numeric import isqrt
from .recurrence import f_closed

_MAX_ALPHABET_BASE = 36


def _word_text(base: int, word: tuple[int, ...]) -> str:
    if base <= _MAX_ALPHABET_BASE:
        return "".join(digit_char(d, base) for d in word)
    return ":".join(str(d) for d in word)


def _resolve_n_k(n: int | None, k: int | None) -> tuple[int, int]:
    if (n is None) == (k is None):
        raise ValueError("exactly one of n and k is required")
    if n is not None:
        if n < 3 or n % 2 == 0:
            raise ValueError("n must be an odd integer >= 3")
        return n, (n + 1) // 2
    if k < 2:
        raise ValueError("k must be at least 2")
    return 2 * k - 1, k


class ExpandRequest(BaseModel):
    base: int = Field(ge=2)
    n: int | None = None
    k: int | None = None
    precision: int = Field(default=191, ge=1)   # significand digit count
    display_base: int | None = Field(default=None, ge=2)


class PredictRequest(BaseModel):
    base: int = Field(ge=2)
    n: int | None = None
    k: int | None = None
    terms: int = Field(default=3, ge=0)


class VerifyRequest(BaseModel):
    base: int = Field(ge=2)
    n: int | None = None
    k: int | None = None
    terms: int = Field(default=3, ge=0)
    precision: int | None = Field(default=None, ge=1)
    min_reps: int = Field(default=4, ge=3)
    max_period: int = Field(default=8, ge=1)


class SequenceRequest(BaseModel):
    base: int = Field(ge=2)
    start: int = Field(ge=3)
    stop: int = Field(ge=3)          # inclusive; odd n from start to stop
    precision: int = Field(default=50, ge=1)

    @model_validator(mode="after")
    def _check_range(self) -> "SequenceRequest":
        if self.start % 2 == 0:
            raise ValueError("sequence start must be odd")
        if self.stop < self.start:
            raise ValueError("sequence stop must not precede start")
        return self


class ConvertRequest(BaseModel):
    base: int = Field(ge=2)
    n: int | None = None
    k: int | None = None
    powers: list[int] = Field(default=[2], min_length=1)
    precision: int = Field(default=100, ge=1)   # target-base significand count
    detect: bool = False
    min_reps: int = Field(default=4, ge=3)
    max_period: int = Field(default=8, ge=1)

    @model_validator(mode="after")
    def _check_powers(self) -> "ConvertRequest":
        if any(m < 1 for m in self.powers):
            raise ValueError("powers must be positive")
        return self


class BlockModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    l: int
    start: int
    nonrep_len: int
    rep_len: int
    length: int = Field(alias="lambda")
    period: str
    matched: bool | None = None


class ConversionModel(BaseModel):
    power: int
    base: int
    digits: str
    dropped: int
    runs: int | None = None
    present: bool | None = None


class CommandResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    command: str
    base: int
    n: int
    precision: int | None = None
    digits: str | None = None
    blocks: list[BlockModel] = []
    truncated: bool = False
    warnings: list[str] = []
    k: int | None = None
    display_base: int | None = None
    rows: list[str] | None = None
    all_matched: bool | None = None
    first_divergence_pos: int | None = None
    conversions: list[ConversionModel] | None = None


def _integer_length(value: int, base: int, precision: int) -> int:
    int_len = 1
    scaled = base
    root = isqrt(value)
    while scaled <= root:
        scaled *= base
        int_len += 1
    if precision < int_len:
        raise ValueError(
            f"precision {precision} is smaller than the {int_len}-digit integer part"
        )
    return int_len


def _significand(value: int, base: int, precision: int) -> DigitString:
    """Digits of sqrt(value) in base, counting precision significand digits."""
    int_len = _integer_length(value, base, precision)
    return sqrt_value_digits(value, base, precision - int_len)


def _rounded_significand(value: int, base: int, precision: int) -> DigitString:
    """Significand of sqrt(value) rounded half-up at its last digit.

    The growing-pattern table rounds the final displayed digit (the digit
    listings elsewhere are exact truncations): with frac fractional digits,
    floor(sqrt(value) * base**frac + 1/2) == (isqrt(4 * value * base**(2*frac)) + 1) // 2,
    which decides the rounding exactly — no guard digits, no ties (the root
    is irrational).  A carry across an all-(base-1) significand lengthens
    the integer part by one digit; radix_offset absorbs that.
    """
    int_len = _integer_length(value, base, precision)
    frac = precision - int_len
    rounded = (isqrt(4 * value * base ** (2 * frac)) + 1) // 2
    digits = tuple(digits_of_int(rounded, base))
    return DigitString(base, digits, len(digits) - frac)


def _render_scientific(ds: DigitString) -> bool:
    return ds.radix_offset > 6


def expand(req: ExpandRequest) -> CommandResponse:
    n, k = _resolve_n_k(req.n, req.k)
    display = req.display_base or req.base
    ds = _significand(f_closed(req.base, n), display, req.precision)
    return CommandResponse(
        command="expand",
        base=req.base,
        n=n,
        k=k,
        precision=req.precision,
        display_base=display if display != req.base else None,
        digits=compact(ds),
    )


def _block_models(pred_blocks, base, matched_by_index=None) -> list[BlockModel]:
    out = []
    for b in pred_blocks:
        out.append(
            BlockModel(
                l=b.index,
                start=b.start,
                nonrep_len=b.nonrep_len,
                rep_len=b.rep_len,
                length=b.length,
                period=_word_text(base, b.period),
                matched=None if matched_by_index is None else matched_by_index[b.index],
            )
        )
    return out


def predict(req: PredictRequest) -> CommandResponse:
    n, k = _resolve_n_k(req.n, req.k)
    pred = blocks.predict_pattern(req.base, k, req.terms)
    return CommandResponse(
        command="predict",
        base=req.base,
        n=n,
        k=k,
        blocks=_block_models(pred.blocks, req.base),
        truncated=pred.truncated,
        warnings=list(pred.warnings)
        + ([f"pattern fades: {pred.truncation_reason}"] if pred.truncated else []),
    )


def verify(req: VerifyRequest) -> CommandResponse:
    n, k = _resolve_n_k(req.n, req.k)
    report = blocks.verify_pattern(
        req.base, k, req.terms,
        precision=req.precision,
        min_reps=req.min_reps,
        max_period=req.max_period,
    )
    ds = sqrt_value_digits(f_closed(req.base, n), req.base,
                           report.precision - k)
    matched = {c.predicted.index: c.matched for c in report.blocks}
    return CommandResponse(
        command="verify",
        base=req.base,
        n=n,
        k=k,
        precision=report.precision,
        digits=compact(ds),
        blocks=_block_models([c.predicted for c in report.blocks], req.base, matched),
        truncated=report.truncated,
        warnings=list(report.warnings)
        + ([f"pattern fades: {report.truncation_reason}"] if report.truncated else []),
        all_matched=report.all_matched,
        first_divergence_pos=report.first_divergence_pos,
    )


def sequence(req: SequenceRequest) -> CommandResponse:
    from .expansion import render

    rows = []
    for n in range(req.start, req.stop + 1, 2):
        ds = _rounded_significand(f_closed(req.base, n), req.base, req.precision)
        text = render(ds, group=req.precision, groups_per_row=1,
                      scientific=_render_scientific(ds))
        rows.append(f"{n} {text}")
    return CommandResponse(
        command="sequence",
        base=req.base,
        n=req.start,
        precision=req.precision,
        rows=rows,
    )


def convert(req: ConvertRequest) -> CommandResponse:
    n, k = _resolve_n_k(req.n, req.k)
    value = f_closed(req.base, n)
    conversions = []
    for m in req.powers:
        target = req.base ** m
        int_len = 1
        scaled = target
        root = isqrt(value)
        while scaled <= root:
            scaled *= target
            int_len += 1
        if req.precision < int_len:
            raise ValueError(
                f"precision {req.precision} is smaller than the {int_len}-digit "
                f"integer part in base {target}"
            )
        source = sqrt_value_digits(value, req.base,
                                   (req.precision - int_len) * m)
        result = baseconv.regroup(source, m)
        runs = present = None
        if req.detect:
            found = blocks.detect_blocks(result.digits.digits,
                                         min_reps=req.min_reps,
                                         max_period=req.max_period)
            runs = len(found)
            present = runs >= 2
        conversions.append(
            ConversionModel(
                power=m,
                base=target,
                digits=compact(result.digits),
                dropped=result.dropped,
                runs=runs,
                present=present,
            )
        )
    return CommandResponse(
        command="convert",
        base=req.base,
        n=n,
        k=k,
        precision=req.precision,
        digits=conversions[0].digits if len(conversions) == 1 else None,
        conversions=conversions,
    )
