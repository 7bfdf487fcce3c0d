"""Exact degree-3 spin Hurwitz numbers, with ordinary Hurwitz-number oracles."""

from .errors import BudgetExceeded, DomainError
from .partitions import Partition, partitions_of
from .spin import EVEN, ODD, Parity, SpinQuery, closed_form, recursion

__all__ = [
    "BudgetExceeded", "DomainError", "EVEN", "ODD", "Parity", "Partition",
    "SpinQuery", "closed_form", "partitions_of", "recursion",
]
