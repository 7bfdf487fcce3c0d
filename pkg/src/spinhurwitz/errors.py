"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain where a quantity is defined."""


class BudgetExceeded(RuntimeError):
    """A brute-force enumeration would exceed its configured work budget."""

    def __init__(self, estimate: int, budget: int):
        self.estimate = estimate
        self.budget = budget
        super().__init__(
            f"estimated work {estimate} exceeds budget {budget}; no partial answer returned"
        )
