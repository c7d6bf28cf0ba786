"""Desk-scale search budgets.

Bounded searches (principality, class enumeration, norm equations) never
guess: when a budget is exhausted they raise InconclusiveError. The default
budget can be overridden with the CUSPIDAL_BOUND environment variable or per
call via a `bound` argument.
"""

from __future__ import annotations

import os

DEFAULT_BOUND = 2_000_000


def resolve_bound(bound: int | None = None) -> int:
    if bound is not None:
        if bound < 1:
            raise ValueError(f"bound must be positive, got {bound}")
        return bound
    env = os.environ.get("CUSPIDAL_BOUND")
    return int(env) if env else DEFAULT_BOUND
