import itertools
import math
from fractions import Fraction

import pytest

from spinhurwitz.characters import (
    HurwitzQuery, burnside_hurwitz, central_char, character_table, mn_character,
)
from spinhurwitz.errors import DomainError
from spinhurwitz.partitions import Partition, hook_length_dimension, partitions_of, stats
from spinhurwitz.spin import reduce_profiles

P = Partition


def test_s3_table_by_hand():
    t = character_table(3)
    assert t(P((2, 1)), P((3,))) == -1
    assert t(P((2, 1)), P((2, 1))) == 0
    assert t(P((2, 1)), P((1, 1, 1))) == 2
    assert all(t(P((3,)), mu) == 1 for mu in partitions_of(3))
    # sign character
    assert [t(P((1, 1, 1)), mu) for mu in partitions_of(3)] == [1, -1, 1]


def test_trivial_degree():
    t = character_table(1)
    assert t(P((1,)), P((1,))) == 1


def test_s4_known_row():
    # standard representation (3,1): chi = fixed points - 1
    t = character_table(4)
    row = {mu.parts: t(P((3, 1)), mu) for mu in partitions_of(4)}
    assert row == {(4,): -1, (3, 1): 0, (2, 2): -1, (2, 1, 1): 1, (1, 1, 1, 1): 3}


@pytest.mark.parametrize("d", range(1, 9))
def test_column_orthogonality(d):
    t = character_table(d)
    for mu, nu in itertools.product(t.partitions, repeat=2):
        inner = sum(t(lam, mu) * t(lam, nu) for lam in t.partitions)
        assert inner == (stats(mu).z if mu == nu else 0)


@pytest.mark.parametrize("d", range(1, 9))
def test_row_orthogonality(d):
    t = character_table(d)
    for lam, rho in itertools.product(t.partitions, repeat=2):
        inner = sum(stats(mu).class_size * t(lam, mu) * t(rho, mu) for mu in t.partitions)
        assert inner == (math.factorial(d) if lam == rho else 0)


@pytest.mark.parametrize("d", range(1, 9))
def test_dimensions_match_hook_formula(d):
    t = character_table(d)
    for lam in t.partitions:
        assert t.dim(lam) == hook_length_dimension(lam) > 0
    assert sum(t.dim(lam) ** 2 for lam in t.partitions) == math.factorial(d)


def test_conjugate_shape_twists_by_sign():
    t = character_table(6)
    sign = {mu: (-1) ** (mu.d - mu.ell) for mu in t.partitions}
    for lam in t.partitions:
        for mu in t.partitions:
            assert t(lam.conjugate(), mu) == sign[mu] * t(lam, mu)


def test_table_range():
    with pytest.raises(DomainError):
        character_table(9)
    with pytest.raises(DomainError):
        character_table(0)
    assert character_table(9, max_degree=9).d == 9


def test_mn_empty():
    assert mn_character((), ()) == 1


def test_central_char_examples():
    t = character_table(3)
    assert central_char(P((2, 1)), P((3,)), t) == -1
    assert central_char(P((3,)), P((3,)), t) == 2
    for d in range(1, 7):
        td = character_table(d)
        for lam in td.partitions:
            assert central_char(lam, Partition.trivial(d), td) == 1
    with pytest.raises(DomainError):
        central_char(P((2,)), P((3,)), t)


def commuting_pairs(d):
    perms = list(itertools.permutations(range(d)))

    def comp(p, q):
        return tuple(p[x] for x in q)
    return sum(1 for a in perms for b in perms if comp(a, b) == comp(b, a))


def test_burnside_examples():
    three = P((3,))
    assert burnside_hurwitz(HurwitzQuery(3, 0, [three] * 3)) == Fraction(1, 3)
    assert burnside_hurwitz(HurwitzQuery(3, 0)) == Fraction(1, 6)
    assert commuting_pairs(3) == 18
    assert burnside_hurwitz(HurwitzQuery(3, 1)) == Fraction(commuting_pairs(3), 6) == 3
    assert burnside_hurwitz(HurwitzQuery(2, 1)) == Fraction(commuting_pairs(2), 2) == 2


@pytest.mark.parametrize("d", range(1, 8))
def test_genus1_unramified_counts_partitions(d):
    # sum over irreducibles of 1 = number of conjugacy classes
    assert burnside_hurwitz(HurwitzQuery(d, 1)) == len(partitions_of(d))


def test_burnside_invariances():
    profiles = [P((3,)), P((2, 1)), P((1, 1, 1)), P((2, 1))]
    base = burnside_hurwitz(HurwitzQuery(3, 1, profiles))
    for perm in itertools.permutations(profiles):
        assert burnside_hurwitz(HurwitzQuery(3, 1, perm)) == base
    assert burnside_hurwitz(HurwitzQuery(3, 1, reduce_profiles(profiles, 3))) == base


def test_query_validation():
    with pytest.raises(DomainError):
        HurwitzQuery(3, 0, [P((2, 1)), P((2,))])
    with pytest.raises(DomainError):
        HurwitzQuery(0, 0)
    with pytest.raises(DomainError):
        HurwitzQuery(2, -1)
