"""Integer partitions used as ramification profiles and conjugacy-class labels.

A partition is stored with its parts weakly decreasing, so two partitions
compare equal exactly when they have the same multiset of parts.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError

MAX_DEGREE = 10


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if not parts:
            raise DomainError("a partition needs at least one part")
        if parts[-1] < 1:
            raise DomainError(f"parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def trivial(cls, d: int) -> Partition:
        """The profile ``(1^d)`` of an unramified fibre."""
        return cls((1,) * d)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Read ``"2,1"``, ``"1^3"`` or mixed forms like ``"3^2,1"``."""
        body = text.strip().strip("()[]").replace(" ", "")
        if not body:
            raise DomainError(f"empty partition string {text!r}")
        parts: list[int] = []
        for token in body.split(","):
            try:
                if "^" in token:
                    base, exp = token.split("^")
                    parts.extend([int(base)] * int(exp))
                else:
                    parts.append(int(token))
            except ValueError:
                raise DomainError(f"cannot parse partition {text!r}") from None
        return cls(parts)

    @property
    def d(self) -> int:
        return sum(self.parts)

    @property
    def ell(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __repr__(self) -> str:
        return f"Partition({self})"

    def is_trivial(self) -> bool:
        return self.parts[0] == 1

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def conjugate(self) -> Partition:
        return Partition(sum(1 for p in self.parts if p > i) for i in range(self.parts[0]))


@dataclass(frozen=True)
class PartitionStats:
    aut_order: int
    prod_parts: int
    z: int
    class_size: int


def partitions_of(d: int, max_degree: int = MAX_DEGREE) -> list[Partition]:
    """All partitions of ``d`` in reverse lexicographic order.

    >>> [str(m) for m in partitions_of(3)]
    ['3', '2,1', '1,1,1']
    """
    if not 1 <= d <= max_degree:
        raise DomainError(f"degree {d} outside supported range 1..{max_degree}")
    return [Partition(p) for p in _revlex(d, d)]


def _revlex(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _revlex(n - first, first):
            yield (first,) + rest


def is_odd_partition(m: Partition) -> bool:
    return all(p % 2 == 1 for p in m.parts)


def is_strict(m: Partition) -> bool:
    return len(set(m.parts)) == len(m.parts)


def stats(m: Partition) -> PartitionStats:
    aut = math.prod(math.factorial(c) for c in m.multiplicities().values())
    prod_parts = math.prod(m.parts)
    z = aut * prod_parts
    size, rem = divmod(math.factorial(m.d), z)
    assert rem == 0
    return PartitionStats(aut_order=aut, prod_parts=prod_parts, z=z, class_size=size)


def aut_order(m: Partition) -> int:
    return stats(m).aut_order


def centralizer_order(m: Partition) -> int:
    return stats(m).z


def class_size(m: Partition) -> int:
    return stats(m).class_size


def hook_length_dimension(lam: Partition) -> int:
    """Dimension of the irreducible ``S_d`` representation ``lam`` by the hook formula."""
    conj = lam.conjugate().parts
    hooks = 1
    for i, row in enumerate(lam.parts):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    dim, rem = divmod(math.factorial(lam.d), hooks)
    assert rem == 0
    return dim
