"""Exception hierarchy shared by the library and the command line tool.

Exit-code mapping used by the CLI: UsageError -> 1, InconclusiveError -> 2,
InternalCheckError (and bare AssertionError) -> 3.
"""


class UsageError(ValueError):
    """Invalid input: malformed element, field mismatch, non-generating pair."""


class ZeroIdealError(UsageError):
    """The zero ideal was requested where a nonzero ideal is required."""


class InconclusiveError(RuntimeError):
    """A bounded search ran out of budget before reaching a verdict.

    Raised instead of ever returning a possibly wrong answer.
    """


class InternalCheckError(AssertionError):
    """A theorem-backed identity failed; indicates a bug, not bad input."""
