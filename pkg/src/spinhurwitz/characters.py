"""Characters of ``S_d`` and ordinary Hurwitz numbers from the character sum.

Character values come from the Murnaghan-Nakayama rule. Border strips are
removed on the beta-set (abacus) of the shape: removing a strip of length
``r`` moves one bead from position ``b`` to an empty ``b - r``, with sign
``(-1)^(beads strictly between)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DomainError
from .partitions import Partition, class_size, partitions_of

MAX_CHARACTER_DEGREE = 8


@dataclass(frozen=True)
class HurwitzQuery:
    d: int
    h: int
    profiles: tuple[Partition, ...] = ()

    def __init__(self, d: int, h: int, profiles: Sequence[Partition] = ()):
        object.__setattr__(self, "d", int(d))
        object.__setattr__(self, "h", int(h))
        object.__setattr__(self, "profiles", tuple(profiles))
        if self.d < 1:
            raise DomainError(f"degree must be positive, got {self.d}")
        if self.h < 0:
            raise DomainError(f"genus must be nonnegative, got {self.h}")
        for m in self.profiles:
            if m.d != self.d:
                raise DomainError(f"profile {m} is not a partition of {self.d}")

    def to_json(self) -> dict:
        return {"d": self.d, "h": self.h, "profiles": [str(m) for m in self.profiles]}


def _to_beta(shape: tuple[int, ...]) -> tuple[int, ...]:
    n = len(shape)
    return tuple(part + n - 1 - i for i, part in enumerate(shape))


def _from_beta(beta: Sequence[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    n = len(beta)
    return tuple(p for p in (b - (n - 1 - i) for i, b in enumerate(beta)) if p > 0)


@lru_cache(maxsize=None)
def mn_character(shape: tuple[int, ...], cycle_type: tuple[int, ...]) -> int:
    """``chi_shape(cycle_type)`` for weakly decreasing tuples of equal size.

    Strips are removed for the largest remaining cycle first.
    """
    if not cycle_type:
        return 1 if not shape else 0
    r, rest = cycle_type[0], cycle_type[1:]
    beta = _to_beta(shape)
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_shape = _from_beta([target if c == b else c for c in beta])
        term = mn_character(new_shape, rest)
        total += -term if height % 2 else term
    return total


@dataclass(frozen=True)
class CharacterTable:
    d: int
    partitions: tuple[Partition, ...]
    chi: dict[tuple[Partition, Partition], int] = field(repr=False)

    def __call__(self, lam: Partition, mu: Partition) -> int:
        try:
            return self.chi[lam, mu]
        except KeyError:
            raise DomainError(f"{lam}, {mu} are not partitions of {self.d}") from None

    def dim(self, lam: Partition) -> int:
        return self(lam, Partition.trivial(self.d))


@lru_cache(maxsize=None)
def _table(d: int) -> CharacterTable:
    parts = tuple(partitions_of(d))
    chi = {(lam, mu): mn_character(lam.parts, mu.parts) for lam in parts for mu in parts}
    return CharacterTable(d=d, partitions=parts, chi=chi)


def character_table(d: int, max_degree: int = MAX_CHARACTER_DEGREE) -> CharacterTable:
    if not 1 <= d <= max_degree:
        raise DomainError(f"character tables are built for 1 <= d <= {max_degree}, got {d}")
    return _table(d)


def central_char(lam: Partition, mu: Partition, table: CharacterTable) -> Fraction:
    """Normalized character ``|C_mu| chi_lam(mu) / dim lam``."""
    if lam.d != table.d or mu.d != table.d:
        raise DomainError(f"{lam} and {mu} must both be partitions of {table.d}")
    return Fraction(class_size(mu) * table(lam, mu), table.dim(lam))


def burnside_hurwitz(q: HurwitzQuery, max_degree: int = MAX_CHARACTER_DEGREE) -> Fraction:
    """Disconnected Hurwitz number ``sum_f 1/|Aut f|`` from the character sum

    ``sum_lam (dim lam / d!)^(2-2h) prod_i |C_i| chi_lam(C_i) / dim lam``.
    """
    table = character_table(q.d, max_degree)
    d_fact = math.factorial(q.d)
    total = Fraction(0)
    for lam in table.partitions:
        term = Fraction(table.dim(lam), d_fact) ** (2 - 2 * q.h)
        for m in q.profiles:
            term *= central_char(lam, m, table)
        total += term
    return total
