"""Node budget for the exponential enumeration kernels.

A budget is opened per command with :func:`work_budget`; every kernel that walks a
search tree calls :func:`charge` once per node. Without an open budget, charging is free.
"""

from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass

import structlog

from shared.errors import BudgetExceededError

logger = structlog.get_logger()


@dataclass
class WorkBudget:
    """Mutable node counter with an upper limit."""

    limit: int
    spent: int = 0

    @property
    def remaining(self) -> int:
        return max(self.limit - self.spent, 0)

    def charge(self, nodes: int = 1) -> None:
        self.spent += nodes
        if self.spent > self.limit:
            logger.warning("budget_exceeded", limit=self.limit, spent=self.spent)
            raise BudgetExceededError(self.limit, self.spent)


_current_budget: ContextVar[WorkBudget | None] = ContextVar("work_budget", default=None)


def charge(nodes: int = 1) -> None:
    """Charge the active budget, if any."""
    budget = _current_budget.get()
    if budget is not None:
        budget.charge(nodes)


@contextmanager
def work_budget(limit: int | None) -> Iterator[WorkBudget | None]:
    """Open a budget of ``limit`` nodes for the enclosed block.

    Args:
        limit: Maximum number of nodes; ``None`` leaves enumeration uncapped.

    Yields:
        The active budget, or ``None`` when uncapped.
    """
    if limit is None:
        yield None
        return
    budget = WorkBudget(limit=limit)
    token = _current_budget.set(budget)
    try:
        yield budget
    finally:
        _current_budget.reset(token)
        logger.debug("budget_closed", limit=limit, spent=budget.spent)
