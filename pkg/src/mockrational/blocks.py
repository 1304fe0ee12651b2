"""Predict, detect, and verify the repeating-block structure.

Prediction evaluates the closed-form length theorems (via the taylor
module) and assembles per-block start positions, sub-block lengths, and
repeating words.  Detection segments an actual digit stream greedily into
periodic runs.  Verification runs both and compares them block by block.

All positions count significand digits from the leading digit, straight
across the radix point: the leading run of 1s in the base-10 example of
sqrt(f(49)) spans positions 0..46 even though the radix point sits after
position 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateInstance, InsufficientPrecision, InternalInconsistency
from .expansion import sqrt_digits
from .numeric import floor_log
from .taylor import (
    block_cycle_anchor,
    block_period,
    carry_correction,
    shift_params,
    taylor_term,
)


@dataclass(frozen=True)
class BlockPrediction:
    index: int
    start: int
    nonrep_len: int
    rep_len: int
    length: int                 # total block length; nonrep_len + rep_len
    period: tuple[int, ...]     # repeating word, phase-aligned to the rep start

    @property
    def rep_start(self) -> int:
        return self.start + self.nonrep_len

    @property
    def end(self) -> int:
        return self.start + self.length


@dataclass(frozen=True)
class PatternPrediction:
    base: int
    k: int
    blocks: tuple[BlockPrediction, ...]
    truncated: bool = False
    truncation_reason: str | None = None
    warnings: tuple[str, ...] = ()


@dataclass(frozen=True)
class DetectedBlock:
    start_pos: int                   # where the periodic run begins
    nonrep_digits: tuple[int, ...]   # unmatched digits since the previous run
    period: tuple[int, ...]          # minimal repeating word
    repetitions: int                 # count of full copies observed
    run_length: int                  # matched digits, including a partial copy


@dataclass(frozen=True)
class BlockComparison:
    predicted: BlockPrediction
    detected: DetectedBlock | None
    boundary_match: bool
    period_match: bool

    @property
    def matched(self) -> bool:
        return self.boundary_match and self.period_match


@dataclass(frozen=True)
class VerificationReport:
    base: int
    k: int
    precision: int
    blocks: tuple[BlockComparison, ...]
    extra_detected: tuple[DetectedBlock, ...]
    truncated: bool
    truncation_reason: str | None
    warnings: tuple[str, ...]
    first_divergence_pos: int | None

    @property
    def all_matched(self) -> bool:
        return bool(self.blocks) and all(b.matched for b in self.blocks)


def term_nonrepeating_length(base: int, k: int, l: int) -> int:
    """Non-repeating digit count contributed by term l on its own:
    floor_log of the term magnitude, plus one, plus the power-of-2 tail."""
    if l < 1:
        raise ValueError("term index must be at least 1")
    e = floor_log(base, taylor_term(base, k, l).magnitude)
    return e + 1 + shift_params(base, l).tail_length


def nonrepeating_length(base: int, k: int, l: int) -> int:
    """Length of block l's non-repeating sub-block (term length + carry)."""
    return term_nonrepeating_length(base, k, l) + carry_correction(base, k, l)


def _block_start(base: int, k: int, l: int) -> int:
    """Significand position where block l begins."""
    if l == 0:
        return 0
    e = floor_log(base, taylor_term(base, k, l).magnitude)
    return 2 * k * l - (e + 1 + carry_correction(base, k, l))


def block_length(base: int, k: int, l: int) -> int:
    """Total length of block l (the non-repeating head plus the repeating
    run, up to where the next term's digits land)."""
    if l < 0:
        raise ValueError("block index must be nonnegative")
    length = _block_start(base, k, l + 1) - _block_start(base, k, l)
    if length <= 0:
        raise DegenerateInstance(l, f"computed block length {length}")
    return length


def repeating_length(base: int, k: int, l: int) -> int:
    """Length of block l's repeating sub-block."""
    if l < 1:
        raise ValueError("block index must be at least 1")
    e_next = floor_log(base, taylor_term(base, k, l + 1).magnitude)
    e_here = floor_log(base, taylor_term(base, k, l).magnitude)
    eps = carry_correction(base, k, l + 1) + carry_correction(base, k, l)
    tail = shift_params(base, l).tail_length
    length = 2 * k * (l + 1) - (e_next + e_here) - eps - (tail + 2) - _block_start(base, k, l)
    if length <= 0:
        raise DegenerateInstance(l, f"computed repeating length {length}")
    return length


def predict_pattern(base: int, k: int, terms: int) -> PatternPrediction:
    """Blocks 0..terms of sqrt(f(2k-1)) from the length theorems.

    Stops early (with the truncation marker set) at the first block whose
    computed lengths are no longer positive: the pattern has faded out and
    the theorems stop describing anything.
    """
    if base < 2:
        raise ValueError("base must be at least 2")
    if k < 2:
        raise ValueError("k must be at least 2")
    if terms < 0:
        raise ValueError("terms must be nonnegative")

    blocks: list[BlockPrediction] = []
    warnings: list[str] = []
    truncated = False
    reason = None
    position = 0
    for l in range(terms + 1):
        try:
            length = block_length(base, k, l)
            if l == 0:
                nonrep, rep = 0, length
            else:
                nonrep = nonrepeating_length(base, k, l)
                rep = repeating_length(base, k, l)
                if nonrep + rep != length:
                    raise InternalInconsistency(
                        f"block {l}: nonrep {nonrep} + rep {rep} != length {length}"
                    )
        except DegenerateInstance as exc:
            truncated = True
            reason = str(exc)
            break
        word = block_period(base, k, l)
        anchor = block_cycle_anchor(base, k, l)
        rep_start = position + nonrep
        phase = (rep_start - anchor) % len(word)
        if phase:
            word = word[phase:] + word[:phase]
        if anchor != rep_start:
            warnings.append(
                f"block {l}: cycle anchor {anchor} differs from predicted "
                f"repeating start {rep_start}"
            )
        if l >= 1 and word == (0,):
            # terminating partial sum (only happens in base 2): the trailing
            # zeros all flip under the next negative term, so the word is a
            # formal artifact, not a digit-level prediction
            warnings.append(
                f"block {l}: partial sum terminates in base {base}; "
                f"predicted repeating word is formal only"
            )
        blocks.append(BlockPrediction(l, position, nonrep, rep, length, word))
        position += length
    return PatternPrediction(base, k, tuple(blocks), truncated, reason, tuple(warnings))


def detect_blocks(
    digits: Sequence[int], min_reps: int = 4, max_period: int = 8
) -> list[DetectedBlock]:
    """Greedy left-to-right segmentation of a digit stream into periodic runs.

    At each position the shortest period p <= max_period repeating at least
    min_reps times wins; the digits skipped since the previous run become
    the new block's non-repeating head.  The run includes any partial final
    copy.  Unmatched trailing digits are not reported.
    """
    if min_reps < 3:
        raise ValueError("min_reps must be at least 3")
    if max_period < 1:
        raise ValueError("max_period must be at least 1")
    digits = list(digits)
    n = len(digits)
    found: list[DetectedBlock] = []
    pending = 0
    i = 0
    while i < n:
        emitted = False
        for p in range(1, max_period + 1):
            if i + p * min_reps > n:
                break
            t = p
            while i + t < n and digits[i + t] == digits[i + t - p]:
                t += 1
            if t // p >= min_reps:
                found.append(
                    DetectedBlock(
                        start_pos=i,
                        nonrep_digits=tuple(digits[pending:i]),
                        period=tuple(digits[i: i + p]),
                        repetitions=t // p,
                        run_length=t,
                    )
                )
                i += t
                pending = i
                emitted = True
                break
        if not emitted:
            i += 1
    return found


def _cyclic_equal(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = a + a
    return any(doubled[i: i + len(b)] == b for i in range(len(a)))


def verify_pattern(
    base: int,
    k: int,
    terms: int,
    precision: int | None = None,
    min_reps: int = 4,
    max_period: int = 8,
) -> VerificationReport:
    """Compare predicted blocks against detection on the real digits.

    ``precision`` counts significand digits; default 2k(terms+2), enough to
    cover the requested blocks with room for the detector to see each
    boundary break.  A predicted block the detector cannot certify (its
    word is longer than max_period, or too few copies fit) is checked
    directly against the digit stream instead: its repeating region must
    tile with the predicted word and the tiling must break at the block
    boundary.
    """
    prediction = predict_pattern(base, k, terms)
    if precision is None:
        precision = 2 * k * (terms + 2)
    if prediction.blocks:
        needed = prediction.blocks[-1].end
        if precision < needed:
            raise InsufficientPrecision(
                f"need at least {needed} significand digits to cover the last "
                f"predicted block, got {precision}"
            )
    ds = sqrt_digits(base, 2 * k - 1, precision - k)
    if len(ds.digits) != precision:
        raise InternalInconsistency(
            f"expected {precision} significand digits, computed {len(ds.digits)}"
        )
    digits = ds.digits
    detected = detect_blocks(digits, min_reps=min_reps, max_period=max_period)
    by_rep_start = {d.start_pos: d for d in detected}

    comparisons: list[BlockComparison] = []
    paired: set[int] = set()
    divergence: int | None = None
    for p in prediction.blocks:
        word = p.period
        span = len(word)
        d = by_rep_start.get(p.rep_start)
        if d is None:
            # fall back to any run starting inside the block
            for cand in detected:
                if p.start < cand.start_pos < p.end and cand.start_pos not in paired:
                    d = cand
                    break
        if d is not None:
            paired.add(d.start_pos)
            boundary = (
                d.start_pos == p.rep_start
                and len(d.nonrep_digits) == p.nonrep_len
                and d.run_length == p.rep_len
            )
            period = _cyclic_equal(d.period, word)
        else:
            mismatch = None
            for j in range(p.rep_start, min(p.end, len(digits))):
                if digits[j] != word[(j - p.rep_start) % span]:
                    mismatch = j
                    break
            period = mismatch is None and p.end <= len(digits)
            boundary = period and (
                p.end == len(digits)
                or digits[p.end] != word[(p.end - p.rep_start) % span]
            )
            if mismatch is not None and (divergence is None or mismatch < divergence):
                divergence = mismatch
        if d is not None and not _cyclic_equal(d.period, word):
            if divergence is None or p.rep_start < divergence:
                divergence = p.rep_start
        comparisons.append(BlockComparison(p, d, boundary, period))
    extras = tuple(d for d in detected if d.start_pos not in paired)
    return VerificationReport(
        base=base,
        k=k,
        precision=precision,
        blocks=tuple(comparisons),
        extra_detected=extras,
        truncated=prediction.truncated,
        truncation_reason=prediction.truncation_reason,
        warnings=prediction.warnings,
        first_divergence_pos=divergence,
    )
