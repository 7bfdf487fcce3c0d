"""Brute-force count of monodromy tuples in ``S_d``.

Counts tuples ``(a_1, b_1, ..., a_h, b_h, c_1, ..., c_r)`` with ``c_i`` of cycle
type ``m^i`` and ``prod [a_j, b_j] * prod c_i = 1``. Dividing by ``d!`` gives
the automorphism-weighted count of possibly disconnected covers.

The last ``c_r`` is never enumerated: it is forced to be the inverse of the
accumulated product and only its cycle type is checked.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .characters import HurwitzQuery
from .errors import BudgetExceeded
from .partitions import Partition

BUDGET_ENV = "SPINHURWITZ_BUDGET"
DEFAULT_BUDGET = 10**8
_TABLE_MAX_DEGREE = 6


def default_budget() -> int:
    return int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))


@dataclass(frozen=True)
class TupleCount:
    count: int
    work_performed: int


def cycle_type(perm: tuple[int, ...]) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        n, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            n += 1
        lengths.append(n)
    return Partition(lengths)


class SymmetricGroup:
    """``S_d`` with elements numbered ``0 .. d!-1``; element 0 is the identity."""

    def __init__(self, d: int):
        self.d = d
        self.elements = list(itertools.permutations(range(d)))
        self.index = {p: i for i, p in enumerate(self.elements)}
        self.inverse = [self.index[_invert(p)] for p in self.elements]
        self.types = [cycle_type(p) for p in self.elements]
        self.table = None
        if d <= _TABLE_MAX_DEGREE:
            self.table = [[self._compose(i, j) for j in range(len(self.elements))]
                          for i in range(len(self.elements))]

    def _compose(self, i: int, j: int) -> int:
        p, q = self.elements[i], self.elements[j]
        return self.index[tuple(p[x] for x in q)]

    def mul(self, i: int, j: int) -> int:
        if self.table is not None:
            return self.table[i][j]
        return self._compose(i, j)

    def conjugacy_class(self, m: Partition) -> list[int]:
        return [i for i, t in enumerate(self.types) if t == m]


def _invert(p):
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


@lru_cache(maxsize=8)
def symmetric_group(d: int) -> SymmetricGroup:
    return SymmetricGroup(d)


def estimated_work(q: HurwitzQuery) -> int:
    return math.factorial(q.d) ** (2 * q.h + len(q.profiles))


class _Search:
    def __init__(self, q: HurwitzQuery):
        self.group = symmetric_group(q.d)
        self.h = q.h
        self.classes = [self.group.conjugacy_class(m) for m in q.profiles[:-1]]
        self.last = q.profiles[-1] if q.profiles else None
        self.work = 0

    def run(self, first: int | None = None) -> int:
        return self._pairs(0, 0, first)

    def _pairs(self, j: int, acc: int, first: int | None) -> int:
        if j == self.h:
            return self._classes(0, acc, first)
        g = self.group
        mul, inv = g.mul, g.inverse
        choices = range(len(g.elements)) if first is None else (first,)
        total = 0
        for a in choices:
            for b in range(len(g.elements)):
                x = mul(mul(mul(mul(acc, a), b), inv[a]), inv[b])
                self.work += 4
                total += self._pairs(j + 1, x, None)
        return total

    def _classes(self, i: int, acc: int, first: int | None) -> int:
        g = self.group
        if i == len(self.classes):
            if self.last is None:
                return 1 if acc == 0 else 0
            return 1 if g.types[g.inverse[acc]] == self.last else 0
        choices = self.classes[i] if first is None else (first,)
        total = 0
        for c in choices:
            self.work += 1
            total += self._classes(i + 1, g.mul(acc, c), None)
        return total

    def outer_choices(self) -> list[int] | None:
        if self.h > 0:
            return list(range(len(self.group.elements)))
        if self.classes:
            return list(self.classes[0])
        return None


def _count_slice(q: HurwitzQuery, firsts: list[int]) -> tuple[int, int]:
    search = _Search(q)
    count = sum(search.run(x) for x in firsts)
    return count, search.work


def count_monodromy_tuples(q: HurwitzQuery, budget: int | None = None,
                           workers: int = 1) -> TupleCount:
    """Exact tuple count; raises :class:`BudgetExceeded` before doing any work."""
    budget = default_budget() if budget is None else budget
    estimate = estimated_work(q)
    if estimate > budget:
        raise BudgetExceeded(estimate, budget)
    search = _Search(q)
    firsts = search.outer_choices()
    if firsts is None or workers <= 1:
        count = search.run()
        return TupleCount(count=count, work_performed=search.work)
    chunks = [firsts[i::workers] for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_count_slice, [q] * len(chunks), chunks))
    return TupleCount(count=sum(c for c, _ in results), work_performed=sum(w for _, w in results))


def monodromy_hurwitz(q: HurwitzQuery, budget: int | None = None, workers: int = 1) -> Fraction:
    result = count_monodromy_tuples(q, budget=budget, workers=workers)
    return Fraction(result.count, math.factorial(q.d))
