"""Degree-3 spin Hurwitz numbers ``H^{h,p}_{(3)^k}``.

Three routes compute the same numbers:

* :func:`recursion` -- the degeneration recursion, seeded by the genus 0 and
  genus 1 families and splitting off a genus-1 even piece at each step;
* :func:`closed_form` -- ``3^(2h-2) * ((-1)^k 2^(k+h-1) +/- 1)``;
* :func:`eop_genus1_odd` -- the genus-1 odd-parity character formula, built
  on the two central character values of ``f_(3)``.

:func:`transfer_matrix_eval` repackages the recursion as a 2x2 matrix power.
Here ``k`` counts insertions of the profile ``(3)``; profiles ``(1,1,1)`` are
dropped beforehand by :func:`reduce_profiles`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .errors import DomainError
from .partitions import Partition, is_strict


class Parity(enum.Enum):
    EVEN = 0
    ODD = 1

    def __add__(self, other: Parity) -> Parity:
        if not isinstance(other, Parity):
            return NotImplemented
        return Parity((self.value + other.value) % 2)

    @property
    def sign(self) -> int:
        return 1 if self is Parity.EVEN else -1

    @property
    def symbol(self) -> str:
        return "+" if self is Parity.EVEN else "-"

    def __str__(self) -> str:
        return self.symbol

    @classmethod
    def parse(cls, text: str) -> Parity:
        key = text.strip().lower()
        if key in ("+", "even", "0"):
            return cls.EVEN
        if key in ("-", "−", "odd", "1"):
            return cls.ODD
        raise DomainError(f"unknown parity {text!r}; use '+' or '-'")


EVEN, ODD = Parity.EVEN, Parity.ODD


def parity_add(p1: Parity, p2: Parity) -> Parity:
    return p1 + p2


@dataclass(frozen=True)
class SpinQuery:
    h: int
    p: Parity
    k: int

    def __post_init__(self):
        validate(self.h, self.p, self.k)

    def __str__(self) -> str:
        return f"H^{{{self.h},{self.p}}}_{{(3)^{self.k}}}"


def validate(h: int, p: Parity, k: int) -> None:
    if not isinstance(p, Parity):
        raise DomainError(f"parity must be a Parity, got {p!r}")
    if h < 0 or k < 0:
        raise DomainError(f"genus and k must be nonnegative (h={h}, k={k})")
    if h == 0 and p is ODD:
        raise DomainError("genus-0 spin curves have only the even theta characteristic")


# Central character f_(3) on the strict partitions of 3.
CENTRAL_CHARACTER_F3: dict[Partition, Fraction] = {
    Partition((3,)): Fraction(2),
    Partition((2, 1)): Fraction(-4),
}


def central_character_f3(mu: Partition) -> Fraction:
    if mu.d != 3 or not is_strict(mu):
        raise DomainError(f"f_(3) is defined only on strict partitions of 3, got {mu}")
    return CENTRAL_CHARACTER_F3[mu]


def supersym_p1(m: Partition) -> Fraction:
    return m.d - Fraction(1, 24)


def supersym_p3(m: Partition) -> Fraction:
    return sum(part**3 for part in m.parts) - Fraction(1, 240)


def closed_form(h: int, p: Parity, k: int) -> Fraction:
    validate(h, p, k)
    power_of_two = Fraction(2) ** (k + h - 1)
    return Fraction(3) ** (2 * h - 2) * ((-1) ** k * power_of_two + p.sign)


def genus0_even(k: int) -> Fraction:
    validate(0, EVEN, k)
    return -Fraction(1, 9) * ((-1) ** (k + 1) * Fraction(2) ** (k - 1) - 1)


def genus1_odd(k: int) -> Fraction:
    validate(1, ODD, k)
    return Fraction((-2) ** k - 1)


def genus1_even(k: int) -> Fraction:
    validate(1, EVEN, k)
    return Fraction((-2) ** k + 1)


def eop_genus1_odd(k: int) -> Fraction:
    validate(1, ODD, k)
    f21 = central_character_f3(Partition((2, 1)))
    f3 = central_character_f3(Partition((3,)))
    return (f21**k - f3**k) / 2**k


def split_eval(h1: int, p1: Parity, k1: int, h2: int, p2: Parity, k2: int,
               values: Callable[[int, Parity, int], Fraction] | None = None) -> Fraction:
    """Right-hand side of the degeneration recursion for one split.

    ``values`` supplies the sub-invariants and defaults to :func:`recursion`.
    """
    validate(h1, p1, k1)
    validate(h2, p2, k2)
    H = values or recursion
    return 6 * H(h1, p1, k1) * H(h2, p2, k2) + 3 * H(h1, p1, k1 + 1) * H(h2, p2, k2 + 1)


@lru_cache(maxsize=None)
def _recursion(h: int, p: Parity, k: int) -> Fraction:
    if h == 0:
        return genus0_even(k)
    if h == 1:
        return genus1_even(k) if p is EVEN else genus1_odd(k)
    # canonical split: a genus-1 even piece with no (3) insertions
    return split_eval(1, EVEN, 0, h - 1, p, k, values=_recursion)


def recursion(h: int, p: Parity, k: int) -> Fraction:
    validate(h, p, k)
    return _recursion(h, p, k)


def _matmul(a, b):
    return [[sum((a[i][t] * b[t][j] for t in range(len(b))), Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]


def _genus1_step(k: int):
    H = genus1_even
    return [[6 * H(k), 3 * H(k + 1)], [6 * H(k + 1), 3 * H(k + 2)]]


def transfer_matrix_eval(h: int, p: Parity, k: int) -> Fraction:
    """``H^{h,p}_{(3)^k}`` for ``h >= 2`` as ``M_k T^(h-2) v``.

    ``M_k`` and ``T = M_0`` carry genus-1 even values and ``v`` holds
    ``(H^{1,p}_{(3)^0}, H^{1,p}_{(3)^1})``.
    """
    validate(h, p, k)
    if h < 2:
        raise DomainError(f"transfer-matrix route needs h >= 2, got h={h}")
    genus1 = genus1_even if p is EVEN else genus1_odd
    vec = [[genus1(0)], [genus1(1)]]
    step = _genus1_step(0)
    for _ in range(h - 2):
        vec = _matmul(step, vec)
    return _matmul(_genus1_step(k), vec)[0][0]


def local_gw_deg12(d: int, h: int, p: Parity) -> Fraction:
    """Dimension-zero local invariants of a spin curve in degrees 1 and 2."""
    if d == 1:
        return Fraction(p.sign)
    if d == 2:
        return p.sign * Fraction(2) ** (h - 1)
    raise DomainError(f"local invariant formula covers d in (1, 2), got d={d}")


def reduce_profiles(profiles: Sequence[Partition], d: int) -> list[Partition]:
    """Drop unramified ``(1^d)`` profiles, keeping the order of the rest."""
    for m in profiles:
        if m.d != d:
            raise DomainError(f"profile {m} is not a partition of {d}")
    return [m for m in profiles if not m.is_trivial()]


def spin3(h: int, p: Parity, profiles: Sequence[Partition]) -> Fraction:
    """``H^{h,p}`` for any list of odd degree-3 profiles, via reduction to ``(3)^k``."""
    reduced = reduce_profiles(profiles, 3)
    for m in reduced:
        if m != Partition((3,)):
            raise DomainError(f"profile {m} is not an odd partition of 3")
    return closed_form(h, p, len(reduced))


def _eop_checked(h: int, p: Parity, k: int) -> Fraction:
    if (h, p) != (1, ODD):
        raise DomainError("the character-formula route applies only to genus 1, odd parity")
    return eop_genus1_odd(k)


METHODS: dict[str, Callable[[int, Parity, int], Fraction]] = {
    "recursion": recursion,
    "closed": closed_form,
    "eop": _eop_checked,
    "transfer": transfer_matrix_eval,
}


def applicable_methods(h: int, p: Parity) -> list[str]:
    names = ["recursion", "closed"]
    if (h, p) == (1, ODD):
        names.append("eop")
    if h >= 2:
        names.append("transfer")
    return names
