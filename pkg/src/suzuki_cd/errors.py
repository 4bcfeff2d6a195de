"""Shared exception types."""


class BudgetExceededError(Exception):
    """Raised when an exhaustive oracle is asked to run past its size budget.

    Closed-form code paths have no budget; only the brute-force
    enumeration oracles refuse oversized inputs, so callers can always
    fall back to the closed forms.
    """
