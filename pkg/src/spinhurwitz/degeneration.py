"""Counting identities behind the degeneration recursion.

These are the numerical shadows of the nodal-curve argument: Euler
characteristic bookkeeping, the number of maps on the middle rational
component, node-smoothing multiplicities, and the resulting coefficients
``6`` and ``3`` attached to the gluing profiles ``(1,1,1)`` and ``(3)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError
from .partitions import Partition, is_odd_partition, stats


def forced_chi(d: int, h: int, profiles: Sequence[Partition]) -> int:
    """Domain Euler characteristic fixed by Riemann-Hurwitz."""
    return 2 * d * (1 - h) + sum(m.ell - d for m in profiles)


def formal_dimension(d: int, h: int, chi: int, profiles: Sequence[Partition]) -> int:
    return 2 * d * (1 - h) - chi - sum(d - m.ell for m in profiles)


@dataclass(frozen=True)
class CoverShape:
    d: int
    h: int
    profiles: tuple[Partition, ...]
    chi: int

    def __post_init__(self):
        if formal_dimension(self.d, self.h, self.chi, self.profiles) != 0:
            raise DomainError(
                f"chi={self.chi} violates Riemann-Hurwitz; expected "
                f"{forced_chi(self.d, self.h, self.profiles)}")

    @classmethod
    def of(cls, d: int, h: int, profiles: Sequence[Partition]) -> CoverShape:
        profiles = tuple(profiles)
        return cls(d, h, profiles, forced_chi(d, h, profiles))


def lemma22_count(m: Partition) -> int:
    """Number of maps on the middle ``P^1``: ``d! |Aut m| / prod m_j``."""
    s = stats(m)
    count, rem = divmod(math.factorial(m.d) * s.aut_order, s.prod_parts)
    assert rem == 0, m
    return count


def gluing_multiplicity(m: Partition) -> int:
    """Maps produced by smoothing the two nodes: ``(prod m_j)^2``."""
    return math.prod(m.parts) ** 2


def schiffer_solution_count(n: int, ell: int) -> int:
    if n < 1 or n % 2 == 0:
        raise DomainError(f"n must be a positive odd integer, got {n}")
    if ell < 1:
        raise DomainError(f"ell must be positive, got {ell}")
    return n ** (2 * ell)


def recursion_coefficient(m: Partition) -> int:
    """``gluing_multiplicity * lemma22_count / d!``, checked against ``z_m``."""
    num = gluing_multiplicity(m) * lemma22_count(m)
    coeff, rem = divmod(num, math.factorial(m.d))
    z = stats(m).z
    if rem or coeff != z:
        raise AssertionError(f"coefficient chain broke for {m}: {num}/{m.d}! vs z={z}")
    return coeff


def nodal_chi_check(chi1: int, chi0: int, chi2: int, m: Partition, chi: int) -> bool:
    """Whether a three-component nodal configuration is admissible.

    ``chi`` is the Euler characteristic of the glued cover (normally
    :func:`forced_chi` of the full data).
    """
    if chi0 != 2 * m.ell:
        return False
    if (m.d - m.ell) % 2:
        return False
    return chi1 + chi0 + chi2 - 4 * m.ell == chi


def split_chis(d: int, h1: int, profiles1: Sequence[Partition], h2: int,
               profiles2: Sequence[Partition], m: Partition) -> tuple[int, int, int]:
    """Forced Euler characteristics of the three pieces of a nodal degeneration.

    Side ``i`` carries its own profiles plus ``m`` at the node (and an
    unramified marked fibre, which changes nothing); the middle ``P^1``
    carries ``m`` at both nodes.
    """
    trivial = Partition.trivial(d)
    chi1 = forced_chi(d, h1, [trivial, *profiles1, m])
    chi0 = forced_chi(d, 0, [m, trivial, m])
    chi2 = forced_chi(d, h2, [m, *profiles2, trivial])
    return chi1, chi0, chi2


def theta_degree_identity(d: int, h: int, profiles: Sequence[Partition]) -> bool:
    """Twisted pull-back degree equals the degree of a theta characteristic.

    ``deg f^*N + sum (m_j - 1)/2 = d(h-1) + sum (m_j - 1)/2`` must equal
    ``-chi/2``. Only odd profiles give an integral twist.
    """
    for m in profiles:
        if m.d != d:
            raise DomainError(f"profile {m} is not a partition of {d}")
        if not is_odd_partition(m):
            raise DomainError(f"profile {m} is not odd; the twist would be half-integral")
    twist = sum((part - 1) // 2 for m in profiles for part in m.parts)
    chi = forced_chi(d, h, profiles)
    return 2 * (d * (h - 1) + twist) == -chi


def aut_trivial_check(profiles: Sequence[Partition]) -> bool:
    return any(m.is_trivial() for m in profiles)
