"""Cooperative time budget for long-running solver loops.

The CLI installs a deadline before dispatching; solvers call checkpoint()
between fixed-point sweeps (and between graphs in harness loops), so an
exhausted budget aborts cleanly with partial progress and never yields a
wrong answer.
"""

from __future__ import annotations

import time

_deadline: float | None = None


class TimeBudgetExceeded(RuntimeError):
    pass


def set_time_budget(seconds) -> None:
    """Install a budget of the given seconds, or clear it with None."""
    global _deadline
    _deadline = None if seconds is None else time.monotonic() + float(seconds)


def checkpoint(note: str = "") -> None:
    if _deadline is not None and time.monotonic() > _deadline:
        raise TimeBudgetExceeded(note or "time budget exhausted")
