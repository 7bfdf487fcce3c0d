"""Self-audit suites run by ``spinhurwitz check``.

Each check returns a :class:`CheckResult`; a suite is a list of them.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable

from . import spin
from .characters import HurwitzQuery, burnside_hurwitz, character_table
from .degeneration import (
    forced_chi, gluing_multiplicity, lemma22_count, nodal_chi_check,
    recursion_coefficient, schiffer_solution_count, split_chis, theta_degree_identity,
)
from .monodromy import monodromy_hurwitz
from .partitions import Partition, hook_length_dimension, partitions_of, stats
from .series import TruncatedSeries, series_exp, series_log
from .spin import EVEN, ODD, Parity

SUITES = ("identities", "oracle", "spin")


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""

    def to_json(self) -> dict:
        return asdict(self)


def _run(name: str, fn: Callable[[], tuple[int, list[str]]]) -> CheckResult:
    try:
        cases, failures = fn()
    except Exception as exc:  # a crashing check is a failing check
        return CheckResult(name, False, 0, f"{type(exc).__name__}: {exc}")
    return CheckResult(name, not failures, cases, "; ".join(failures[:5]))


def spin_queries(h_max: int, k_max: int):
    for h in range(h_max + 1):
        for p in (EVEN, ODD):
            if h == 0 and p is ODD:
                continue
            for k in range(k_max + 1):
                yield h, p, k


# -- spin suite ---------------------------------------------------------------

GOLDEN = [
    ((0, EVEN, 0), Fraction(1, 6)),
    ((0, EVEN, 3), Fraction(-1, 3)),
    ((1, EVEN, 0), Fraction(2)),
    ((1, ODD, 0), Fraction(0)),
    ((1, ODD, 1), Fraction(-3)),
    ((1, ODD, 2), Fraction(3)),
    ((1, EVEN, 1), Fraction(-1)),
    ((1, EVEN, 2), Fraction(5)),
    ((2, EVEN, 0), Fraction(27)),
    ((2, EVEN, 1), Fraction(-27)),
]


def check_golden():
    failures = []
    cases = 0
    for (h, p, k), want in GOLDEN:
        for name in spin.applicable_methods(h, p):
            cases += 1
            got = spin.METHODS[name](h, p, k)
            if got != want:
                failures.append(f"{name}({h},{p},{k})={got}, want {want}")
    return cases, failures


def check_route_equality(h_max: int = 6, k_max: int = 12):
    failures = []
    cases = 0
    for h, p, k in spin_queries(h_max, k_max):
        ref = spin.closed_form(h, p, k)
        for name in spin.applicable_methods(h, p):
            cases += 1
            got = spin.METHODS[name](h, p, k)
            if got != ref:
                failures.append(f"{name}({h},{p},{k})={got} != closed {ref}")
    return cases, failures


def check_split_invariance(h_max: int = 5, k_max: int = 8):
    failures = []
    cases = 0
    for h, p, k in spin_queries(h_max, k_max):
        ref = spin.closed_form(h, p, k)
        for h1 in range(h + 1):
            for k1 in range(k + 1):
                for p1 in (EVEN, ODD):
                    p2 = p + p1
                    if (h1 == 0 and p1 is ODD) or (h - h1 == 0 and p2 is ODD):
                        continue
                    cases += 1
                    got = spin.split_eval(h1, p1, k1, h - h1, p2, k - k1)
                    if got != ref:
                        failures.append(f"split ({h1},{p1},{k1})+({h - h1},{p2},{k - k1}) "
                                        f"= {got} != {ref}")
    return cases, failures


def check_parity_gap(h_max: int = 6, k_max: int = 12):
    failures = []
    cases = 0
    for h in range(1, h_max + 1):
        for k in range(k_max + 1):
            cases += 1
            gap = spin.closed_form(h, EVEN, k) - spin.closed_form(h, ODD, k)
            if gap != 2 * Fraction(3) ** (2 * h - 2):
                failures.append(f"gap(h={h},k={k})={gap}")
    return cases, failures


def check_central_character():
    three, two_one = Partition((3,)), Partition((2, 1))
    lhs = spin.central_character_f3(two_one) - spin.central_character_f3(three)
    rhs = (spin.supersym_p3(two_one) - spin.supersym_p3(three)) / 3
    failures = []
    if not lhs == rhs == -6:
        failures.append(f"f difference {lhs}, p3 difference/3 {rhs}")
    if spin.supersym_p1(three) != spin.supersym_p1(two_one):
        failures.append("p1 differs on partitions of 3")
    return 1, failures


def check_parity_group():
    failures = []
    ps = list(Parity)
    for a, b, c in itertools.product(ps, repeat=3):
        if a + b != b + a or (a + b) + c != a + (b + c):
            failures.append(f"parity law fails at {a},{b},{c}")
    for a in ps:
        if a + EVEN != a:
            failures.append(f"even is not an identity for {a}")
    return len(ps) ** 3, failures


# -- oracle suite -------------------------------------------------------------

def oracle_grid():
    """(d, h, profile multisets) cells compared between the two oracles."""
    d3 = partitions_of(3)
    for h in range(3):
        for r in range(4):
            for prof in itertools.combinations_with_replacement(d3, r):
                yield HurwitzQuery(3, h, prof)
    d4 = partitions_of(4)
    for h in range(2):
        for r in range(3):
            for prof in itertools.product(d4, repeat=r):
                yield HurwitzQuery(4, h, prof)
    for d in (1, 2):
        for h in range(4):
            for r in range(5):
                for prof in itertools.combinations_with_replacement(partitions_of(d), r):
                    yield HurwitzQuery(d, h, prof)


def check_oracles():
    failures = []
    cases = 0
    for q in oracle_grid():
        cases += 1
        a, b = burnside_hurwitz(q), monodromy_hurwitz(q)
        if a != b:
            failures.append(f"{q.to_json()}: burnside {a} vs monodromy {b}")
    return cases, failures


def check_character_tables(d_max: int = 8):
    failures = []
    cases = 0
    for d in range(1, d_max + 1):
        table = character_table(d)
        parts = table.partitions
        for mu, nu in itertools.product(parts, repeat=2):
            cases += 1
            inner = sum(table(lam, mu) * table(lam, nu) for lam in parts)
            want = stats(mu).z if mu == nu else 0
            if inner != want:
                failures.append(f"d={d} columns {mu},{nu}: {inner} != {want}")
        for lam in parts:
            cases += 1
            if table.dim(lam) != hook_length_dimension(lam) or table.dim(lam) <= 0:
                failures.append(f"dim {lam}: {table.dim(lam)} vs hook {hook_length_dimension(lam)}")
        if sum(table.dim(lam) ** 2 for lam in parts) != math.factorial(d):
            failures.append(f"sum of squared dimensions wrong for d={d}")
    return cases, failures


# -- identities suite ---------------------------------------------------------

def check_coefficients(d_max: int = 8):
    failures = []
    cases = 0
    for d in range(1, d_max + 1):
        for m in partitions_of(d):
            cases += 1
            if recursion_coefficient(m) != math.prod(m.parts) * stats(m).aut_order:
                failures.append(f"coefficient {m}")
    fixed = {
        "recursion_coefficient(1^3)": (recursion_coefficient(Partition.trivial(3)), 6),
        "recursion_coefficient(3)": (recursion_coefficient(Partition((3,))), 3),
        "lemma22_count(1^3)": (lemma22_count(Partition.trivial(3)), 36),
        "lemma22_count(3)": (lemma22_count(Partition((3,))), 2),
    }
    for name, (got, want) in fixed.items():
        cases += 1
        if got != want:
            failures.append(f"{name}={got}, want {want}")
    return cases, failures


def check_schiffer():
    failures = []
    cases = 0
    for n in (1, 3, 5, 7):
        for ell in range(1, 5):
            cases += 1
            if schiffer_solution_count(n, ell) != gluing_multiplicity(Partition((n,) * ell)):
                failures.append(f"schiffer({n},{ell})")
    return cases, failures


def random_odd_partition(rng: random.Random, d: int) -> Partition:
    """Uniformly chosen odd partition of ``d``."""
    odd = [m for m in partitions_of(d) if all(p % 2 for p in m.parts)]
    return rng.choice(odd)


def check_theta_degree(samples: int = 500, seed: int = 20260101):
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        d = rng.randint(1, 9)
        h = rng.randint(0, 4)
        profiles = [random_odd_partition(rng, d) for _ in range(rng.randint(0, 4))]
        if not theta_degree_identity(d, h, profiles):
            failures.append(f"theta degree ({d},{h},{[str(m) for m in profiles]})")
    return samples, failures


def check_nodal_chi(samples: int = 300, seed: int = 7):
    rng = random.Random(seed)
    failures = []
    cases = 0
    for _ in range(samples):
        d = rng.randint(1, 7)
        h1, h2 = rng.randint(0, 3), rng.randint(0, 3)
        prof1 = [random_odd_partition(rng, d) for _ in range(rng.randint(0, 3))]
        prof2 = [random_odd_partition(rng, d) for _ in range(rng.randint(0, 3))]
        chi = forced_chi(d, h1 + h2, prof1 + prof2)
        for m in partitions_of(d):
            cases += 1
            c1, c0, c2 = split_chis(d, h1, prof1, h2, prof2, m)
            ok = nodal_chi_check(c1, c0, c2, m, chi)
            if ok != ((d - m.ell) % 2 == 0):
                failures.append(f"nodal chi d={d} m={m}")
    return cases, failures


def check_series_roundtrip(samples: int = 200, seed: int = 11):
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        n = rng.randint(0, 8)
        coeffs = [0] + [Fraction(rng.randint(-20, 20), rng.randint(1, 12)) for _ in range(n)]
        s = TruncatedSeries(coeffs)
        if series_log(series_exp(s)) != s:
            failures.append(f"round trip {s}")
    return samples, failures


SUITE_CHECKS = {
    "spin": [
        ("golden_values", check_golden),
        ("route_equality", check_route_equality),
        ("split_invariance", check_split_invariance),
        ("parity_gap", check_parity_gap),
        ("central_character", check_central_character),
        ("parity_group", check_parity_group),
    ],
    "oracle": [
        ("character_tables", check_character_tables),
        ("burnside_vs_monodromy", check_oracles),
    ],
    "identities": [
        ("recursion_coefficients", check_coefficients),
        ("schiffer_vs_gluing", check_schiffer),
        ("theta_degree", check_theta_degree),
        ("nodal_chi", check_nodal_chi),
        ("series_roundtrip", check_series_roundtrip),
    ],
}


def run_suite(suite: str) -> list[CheckResult]:
    names = SUITES if suite == "all" else (suite,)
    if any(name not in SUITE_CHECKS for name in names):
        raise ValueError(f"unknown suite {suite!r}")
    return [_run(f"{name}.{label}", fn) for name in names for label, fn in SUITE_CHECKS[name]]
