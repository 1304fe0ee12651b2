"""Exception types shared across the package.

Plain ``ValueError`` is used for ordinary precondition violations; the
classes here mark conditions that callers are expected to branch on.
"""


class InternalInconsistency(RuntimeError):
    """An algebraic identity the code relies on failed to hold.

    Raised e.g. when the closed form of the recurrence is not exactly
    divisible.  Must never happen; surfaced as exit status 2 by the CLI.
    """


class DegenerateInstance(ValueError):
    """A block-length formula produced a non-positive length.

    The pattern is exhausted at this term; prediction truncates here.
    """

    def __init__(self, index: int, reason: str):
        super().__init__(f"block {index} is degenerate: {reason}")
        self.index = index
        self.reason = reason


class InsufficientPrecision(ValueError):
    """The digit expansion is too short for the requested comparison."""
