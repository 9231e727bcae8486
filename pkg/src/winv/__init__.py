"""Exact genus-0 complex and real curve counts for P2, P1xP1, blowups of P2, P3 and (P1)^3."""

import sys

from .exact import IntegralityError, SchedulingError
from .store import Context, MemoStore, Options, default_context

__version__ = "0.1.0"

# the recursions are memoized top-down; deep tables need more than the default stack
if sys.getrecursionlimit() < 20000:
    sys.setrecursionlimit(20000)

__all__ = ["Context", "MemoStore", "Options", "default_context", "SchedulingError",
           "IntegralityError", "__version__"]
