"""Acceptance gate: one test per criterion, one PASS/FAIL line per criterion.

Each criterion runs at its stated tolerance — byte-exact for the golden
listings, exact integer/rational equality for the theorem values, wall-clock
bounds where stated.  A criterion that cannot be met fails loudly; nothing
here is skipped or loosened.
"""
import random
import time
from fractions import Fraction

import pytest

from mockrational import baseconv, blocks, taylor
from mockrational.errors import DegenerateInstance
from mockrational.expansion import DigitString, sqrt_digits
from mockrational.numeric import floor_log, isqrt
from mockrational.recurrence import f_closed, f_iterative


def _gate(capsys, num: int, desc: str, check) -> None:
    try:
        check()
    except BaseException:
        with capsys.disabled():
            print(f"FAIL criterion {num}: {desc}")
        raise
    with capsys.disabled():
        print(f"PASS criterion {num}: {desc}")


def test_criterion_1_base10_golden(run_cli, golden, capsys):
    def check():
        t0 = time.perf_counter()
        result = run_cli("expand", "--base", "10", "--n", "49",
                         "--precision", "191")
        elapsed = time.perf_counter() - t0
        assert result.returncode == 0
        assert result.stdout == golden("base10_n49.txt")
        stream = "".join(result.stdout.split()).replace(".", "")
        assert len(stream.split("_")[0]) == 191
        assert elapsed < 1.0, f"took {elapsed:.3f}s"
    _gate(capsys, 1, "base-10 expansion byte-exact (191 significand digits, < 1 s)",
          check)


def test_criterion_2_base8_golden(run_cli, golden, capsys):
    def check():
        result = run_cli("expand", "--base", "8", "--n", "49", "--precision", "191")
        assert result.stdout == golden("base8_n49.txt")
        result = run_cli("expand", "--base", "8", "--n", "49", "--precision", "191",
                         "--display-base", "10")
        assert result.stdout == golden("base8_n49_display10.txt")
    _gate(capsys, 2, "base-8 expansion and its base-10 rendering byte-exact", check)


def test_criterion_3_base11_base13_golden(run_cli, golden, capsys):
    def check():
        result = run_cli("expand", "--base", "11", "--n", "49", "--precision", "191")
        assert result.stdout == golden("base11_n49.txt")
        result = run_cli("expand", "--base", "13", "--n", "49", "--precision", "140")
        assert result.stdout == golden("base13_n49.txt")
    _gate(capsys, 3, "base-11 and base-13 expansions byte-exact", check)


def test_criterion_4_length_theorems(capsys):
    def check():
        pred = blocks.predict_pattern(10, 25, 2)
        assert [b.length for b in pred.blocks] == [47, 49, 48]
        assert pred.blocks[1].nonrep_len == 4 and pred.blocks[1].rep_len == 45
        assert pred.blocks[2].nonrep_len == 7 and pred.blocks[2].rep_len == 41
        magnitude = taylor.taylor_term(10, 25, 2).magnitude
        assert magnitude == Fraction(203401, 72)
        assert floor_log(10, magnitude) == 3
    _gate(capsys, 4, "block-length theorem values for b=10, k=25 (exact)", check)


def test_criterion_5_carry_and_words(capsys):
    def check():
        assert taylor.carry_correction(10, 25, 1) == 1
        assert taylor.carry_correction(10, 25, 2) == 0
        assert taylor.block_period(10, 25, 0) == (1,)
        assert taylor.block_period(10, 25, 1) == (5,)
        assert taylor.block_period(10, 25, 2) == (6,)
    _gate(capsys, 5, "worked carry corrections and repeating words (exact)", check)


def test_criterion_6_verifier_oracle(run_cli, capsys):
    def check():
        t0 = time.perf_counter()
        for base in (10, 8, 11, 13, 3):
            result = run_cli("verify", "--base", str(base), "--k", "25",
                             "--terms", "3", "--precision", "250")
            assert result.returncode == 0, (base, result.stdout, result.stderr)
            assert "all 4 blocks match" in result.stdout, base
        elapsed = time.perf_counter() - t0
        assert elapsed < 5.0, f"took {elapsed:.3f}s"
    _gate(capsys, 6,
          "verify matches prediction for five instances, first 4 blocks, "
          "precision 250, exit 0, < 5 s", check)


# Transcribed reference rows for the growing-pattern table (base 5, odd n,
# 50 significand digits).  The reference display rounds half-up at its last
# place (visible in four of the nine rows, n = 7, 13, 15, 17, where the 51st
# significand digit is >= 3 — including the carry that turns n=7's exact
# ...234 into ...240); the sequence command reproduces that convention,
# while the digit-listing commands (expand, convert) stay exact truncations.
REFERENCE_TABLE_ROWS = {
    7: "1111.1102030301340212321423323443031320022421310240_5",
    9: "11111.111010303030100244100302243334320304302441412_5",
    11: "111111.11110003030303000302132433034013044313334032_5",
    13: "1.1111111111044030303030244012441021320101332242102_5×5^6",
    15: "1.1111111111110430303030303024241021324410201331002_5×5^7",
    17: "1.1111111111111104203030303030302412124410213244033_5×5^8",
    19: "1.1111111111111111041030303030303030234430213244102_5×5^9",
    21: "1.1111111111111111110400303030303030303023310244102_5×5^10",
    23: "1.1111111111111111111103403030303030303030302311402_5×5^11",
}


def test_criterion_7_sequence_table(run_cli, capsys):
    def check():
        result = run_cli("sequence", "--base", "5", "--n", "7..23",
                         "--precision", "50")
        assert result.returncode == 0
        produced = {}
        for row in result.stdout.splitlines():
            n_text, text = row.split(" ", 1)
            produced[int(n_text)] = text
        assert list(produced) == sorted(REFERENCE_TABLE_ROWS)
        for n, want in REFERENCE_TABLE_ROWS.items():
            assert produced[n] == want, f"n={n}: {produced[n]} != {want}"
    _gate(capsys, 7, "growing-pattern table: all nine base-5 rows byte-exact",
          check)


def test_criterion_8_base_power_persistence(run_cli, golden, capsys):
    def check():
        result = run_cli("convert", "--base", "3", "--n", "49", "--power", "2",
                         "--precision", "141")
        assert "\n".join(result.stdout.splitlines()[1:5]) + "\n" == \
            golden("base3_n49_base9.txt")
        result = run_cli("convert", "--base", "3", "--n", "49", "--power", "3",
                         "--precision", "91")
        assert "\n".join(result.stdout.splitlines()[1:4]) + "\n" == \
            golden("base3_n49_base27.txt")
        report = baseconv.check_persistence(3, 25, (1, 2, 3), 200)
        assert report.all_present
    _gate(capsys, 8, "regrouped digits match the base-9/base-27 listings; "
          "pattern persists for m in {1,2,3}", check)


def test_criterion_9_property_suites(capsys):
    def check():
        t0 = time.perf_counter()
        rng = random.Random(20260814)

        # isqrt invariant on 10^4 random inputs up to 2^256
        for _ in range(10_000):
            x = rng.getrandbits(rng.randrange(1, 257))
            r = isqrt(x)
            assert r * r <= x < (r + 1) * (r + 1)

        # closed form == iteration across all small bases
        for base in range(2, 37):
            value = 0
            for n in range(0, 101):
                if n:
                    value = base * value + n
                assert f_closed(base, n) == value == f_iterative(base, n)

        # length theorems: lambda <= 2k and nonrep+rep == lambda,
        # degenerate truncations flagged rather than asserted
        degenerate = []
        for base in range(2, 17):
            for k in (10, 25):
                for l in range(0, 5):
                    try:
                        lam = blocks.block_length(base, k, l)
                        if l:
                            nonrep = blocks.nonrepeating_length(base, k, l)
                            rep = blocks.repeating_length(base, k, l)
                            assert nonrep + rep == lam, (base, k, l)
                        assert lam <= 2 * k, (base, k, l)
                    except DegenerateInstance:
                        degenerate.append((base, k, l))
        assert all(k == 10 for _, k, _ in degenerate), \
            "k=25 instances must not degenerate below l=5"

        # regroup value preservation on fuzzed digit strings
        for _ in range(500):
            base = rng.randrange(2, 10)
            length = rng.randrange(1, 30)
            offset = rng.randrange(1, length + 1)
            digits = [rng.randrange(base) for _ in range(length)]
            if offset >= 2 and digits[0] == 0:
                digits[0] = rng.randrange(1, base)
            ds = DigitString(base, tuple(digits), offset)
            m = rng.randrange(1, 5)
            out = baseconv.regroup(ds, m)
            kept = len(ds.fraction_digits) - out.dropped
            trimmed = DigitString(base, ds.digits[: offset + kept], offset)
            assert out.digits.value() == trimmed.value()

        # partial sums agree with the true digits through block L-1
        for base in (3, 8, 10, 11, 13):
            for L in range(1, 5):
                start = blocks.predict_pattern(base, 25, L).blocks[L].start
                frac = start - 25
                s = taylor.partial_sum(base, 25, L)
                approx = s.numerator * base ** frac // s.denominator
                true = sqrt_digits(base, 49, frac)
                scaled = true.value() * base ** frac
                assert scaled.denominator == 1 and approx == scaled.numerator, \
                    (base, L)

        elapsed = time.perf_counter() - t0
        assert elapsed < 60.0, f"took {elapsed:.3f}s"
    _gate(capsys, 9, "property suites (isqrt, recurrence, lengths, regroup, "
          "partial sums) all exact, < 60 s", check)
