"""Resource budgets for exhaustive computations.

The active budget lives in a context variable so library calls pick up
whatever the caller (usually the CLI) configured without threading it
through every signature.
"""
from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass

from .errors import BudgetExceeded

DEFAULT_MAX_STATES = 2 ** 24
DEFAULT_MAX_SEARCH = 10 ** 7


@dataclass(frozen=True)
class Budget:
    max_states: int = DEFAULT_MAX_STATES
    max_search: int = DEFAULT_MAX_SEARCH


_current: contextvars.ContextVar[Budget] = contextvars.ContextVar("projmet_budget", default=Budget())


def current_budget() -> Budget:
    return _current.get()


@contextlib.contextmanager
def budget_scope(budget: Budget):
    token = _current.set(budget)
    try:
        yield budget
    finally:
        _current.reset(token)


def check_states(count: int, what: str = "state space") -> None:
    """Raise :class:`BudgetExceeded` if ``count`` states exceed the budget."""
    limit = current_budget().max_states
    if count > limit:
        raise BudgetExceeded(f"{what} needs {count} states, budget is {limit}")


def check_search(count: int, what: str = "search") -> None:
    limit = current_budget().max_search
    if count > limit:
        raise BudgetExceeded(f"{what} needs {count} steps, budget is {limit}")
