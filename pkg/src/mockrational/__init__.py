"""Schizophrenic (mock-rational) number toolkit.

Computes arbitrary-precision radix expansions of sqrt(f(2k-1)) for the
family f(n) = base*f(n-1) + n, predicts the repeating-block structure of
those digits from closed-form length theorems, detects the blocks
empirically, verifies the two against each other, and checks that the
pattern survives regrouping into powers of the base.
"""
from .baseconv import (
    PersistenceReport,
    RegroupResult,
    check_persistence,
    max_regroup_power,
    regroup,
)
from .blocks import (
    BlockPrediction,
    DetectedBlock,
    PatternPrediction,
    VerificationReport,
    block_length,
    detect_blocks,
    nonrepeating_length,
    predict_pattern,
    repeating_length,
    verify_pattern,
)
from .errors import DegenerateInstance, InsufficientPrecision, InternalInconsistency
from .expansion import (
    DigitString,
    PeriodicExpansion,
    compact,
    parse,
    rational_expansion,
    render,
    sqrt_digits,
    sqrt_value_digits,
)
from .recurrence import f_closed, f_iterative, series_constant
from .taylor import TaylorTerm, carry_correction, partial_sum, taylor_term

__version__ = "0.1.0"

__all__ = [
    "BlockPrediction",
    "DegenerateInstance",
    "DetectedBlock",
    "DigitString",
    "InsufficientPrecision",
    "InternalInconsistency",
    "PatternPrediction",
    "PeriodicExpansion",
    "PersistenceReport",
    "RegroupResult",
    "TaylorTerm",
    "VerificationReport",
    "__version__",
    "block_length",
    "carry_correction",
    "check_persistence",
    "compact",
    "detect_blocks",
    "f_closed",
    "f_iterative",
    "max_regroup_power",
    "nonrepeating_length",
    "parse",
    "partial_sum",
    "predict_pattern",
    "rational_expansion",
    "regroup",
    "render",
    "repeating_length",
    "series_constant",
    "sqrt_digits",
    "sqrt_value_digits",
    "taylor_term",
    "verify_pattern",
]
