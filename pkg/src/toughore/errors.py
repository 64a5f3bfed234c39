"""Exceptions shared across modules."""


class PreconditionError(ValueError):
    """Input outside the domain where a statement or construction applies."""


class BudgetExceeded(ValueError):
    """An exhaustive routine refused an input larger than its budget."""

    def __init__(self, budget: str, limit: int, n: int):
        self.budget = budget
        self.limit = limit
        self.n = n
        super().__init__(f"{budget} budget: n={n} exceeds {limit}")
