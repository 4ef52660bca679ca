class InputError(ValueError):
    """Invalid input: dimension mismatch, bad descriptor, empty set, ..."""


class ResourceBudgetError(RuntimeError):
    """An enumeration exceeded its configured budget.

    Carries the budget and the partial count so callers can report how far
    the computation got.
    """

    def __init__(self, message, budget, count=None):
        super().__init__(message)
        self.budget = budget
        self.count = count
