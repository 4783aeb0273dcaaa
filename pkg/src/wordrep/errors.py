"""Shared exception types."""


class GraphSizeError(ValueError):
    """An operation was asked to exceed its hard vertex/edge size limit."""


class BudgetExceededError(RuntimeError):
    """A search ran past its configured budget.

    Deliberately distinct from a negative answer: callers must never
    conflate "no witness exists" with "we stopped looking".
    """
