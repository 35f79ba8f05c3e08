"""Partition combinatorics: conjugation, dominance, cells, enumeration."""

import pytest

from macdet.partitions import (
    CellStat,
    arm_leg_cells,
    conjugate,
    distinct_permutations,
    dominance_compare,
    dominance_downset,
    dominance_upset,
    format_partition,
    parse_partition,
    partition,
    partitions_of,
    permutation_count,
)


def test_conjugate_examples():
    assert conjugate((3, 1, 1)) == (3, 1, 1)
    assert conjugate((2, 2)) == (2, 2)
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()


def test_conjugate_involution_up_to_weight_10():
    for w in range(11):
        for lam in partitions_of(w):
            assert conjugate(conjugate(lam)) == lam


def test_dominance_examples():
    assert dominance_compare((2, 2), (3, 1)) == "less"
    assert dominance_compare((3, 1, 1, 1), (2, 2, 2)) == "incomparable"
    assert dominance_compare((3, 1), (3, 1)) == "equal"
    assert dominance_compare((3, 1), (2, 2)) == "greater"


def test_dominance_rejects_unequal_weights():
    with pytest.raises(ValueError):
        dominance_compare((2, 1), (2, 2))


def test_dominance_reverses_under_conjugation():
    for w in range(9):
        parts = partitions_of(w)
        for lam in parts:
            for mu in parts:
                verdict = dominance_compare(lam, mu)
                flipped = dominance_compare(conjugate(mu), conjugate(lam))
                assert verdict == flipped


def test_upset_matches_pinned_column_order():
    assert dominance_upset((2, 2, 1)) == (
        (2, 2, 1), (3, 1, 1), (3, 2), (4, 1), (5,))


def test_upset_extremes():
    assert dominance_upset((4,)) == ((4,),)
    assert dominance_upset((1, 1, 1)) == ((1, 1, 1), (2, 1), (3,))
    assert set(dominance_upset((1, 1, 1))) == set(partitions_of(3))


def test_downset_mirrors_upset():
    downs = dominance_downset((5,))
    assert downs[0] == (5,)
    assert set(downs) == set(partitions_of(5))
    assert dominance_downset((1, 1, 1)) == ((1, 1, 1),)


def test_distinct_permutations_examples():
    assert distinct_permutations((2, 0), 2) == ((2, 0), (0, 2))
    assert distinct_permutations((1, 1), 2) == ((1, 1),)
    assert len(distinct_permutations((2, 1, 0), 3)) == 6


def test_distinct_permutations_rejects_too_long():
    with pytest.raises(ValueError):
        distinct_permutations((1, 1, 1), 2)


def test_distinct_permutation_counts():
    for w in range(7):
        for nu in partitions_of(w):
            for n in range(len(nu), len(nu) + 3):
                perms = distinct_permutations(nu, n)
                assert len(perms) == permutation_count(nu, n)
                assert len(set(perms)) == len(perms)


def test_arm_leg_examples():
    assert arm_leg_cells((1,)) == [CellStat(1, 1, 0, 0)]
    assert [(c.arm, c.leg) for c in arm_leg_cells((2,))] == [(1, 0), (0, 0)]
    assert [(c.arm, c.leg) for c in arm_leg_cells((2, 1))] == [
        (1, 1), (0, 0), (0, 0)]


def test_cell_count_is_weight():
    for w in range(9):
        for lam in partitions_of(w):
            assert len(arm_leg_cells(lam)) == sum(lam)


def test_partition_validation():
    assert partition([3, 2, 0, 0]) == (3, 2)
    with pytest.raises(ValueError):
        partition([1, 2])
    with pytest.raises(ValueError):
        partition([2, -1])


def test_serialization_round_trip():
    assert format_partition((2, 2, 1)) == "2,2,1"
    assert parse_partition("2,2,1") == (2, 2, 1)
    assert parse_partition("0") == ()
    assert format_partition(()) == "0"
    with pytest.raises(ValueError):
        parse_partition("1,2")
    with pytest.raises(ValueError):
        parse_partition("a,b")
