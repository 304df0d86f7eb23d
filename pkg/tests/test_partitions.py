import pytest

from multidisc import (
    classification_order,
    conjugate,
    is_valid_partition,
    lex_compare,
    partitions_of,
)


def partition_count(n: int) -> int:
    """Independent oracle: p(n, k) = partitions of n with parts <= k."""
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        table[0][k] = 1
    for total in range(1, n + 1):
        for k in range(1, n + 1):
            table[total][k] = table[total][k - 1]
            if total >= k:
                table[total][k] += table[total - k][k]
    return table[n][n]


def test_partitions_of_five_matches_known_set():
    got = partitions_of(5)
    assert set(got) == {
        (1, 1, 1, 1, 1),
        (2, 1, 1, 1),
        (2, 2, 1),
        (3, 1, 1),
        (3, 2),
        (4, 1),
        (5,),
    }
    # descending lexicographic enumeration, no duplicates
    assert got == sorted(set(got), reverse=True)
    assert got[0] == (5,)
    assert got[-1] == (1, 1, 1, 1, 1)


def test_partitions_of_one():
    assert partitions_of(1) == [(1,)]


def test_partition_counts_against_recurrence():
    for n in range(1, 13):
        assert len(partitions_of(n)) == partition_count(n)
    assert len(partitions_of(9)) == 30


def test_partitions_are_valid_and_sum_correctly():
    for n in range(1, 11):
        for p in partitions_of(n):
            assert is_valid_partition(p)
            assert sum(p) == n


def test_partitions_of_rejects_nonpositive():
    with pytest.raises(ValueError):
        partitions_of(0)
    with pytest.raises(ValueError):
        partitions_of(-3)


def test_conjugate_examples():
    assert conjugate((3, 2)) == (2, 2, 1)
    assert conjugate((2, 2, 1)) == (3, 2)
    for n in range(1, 8):
        assert conjugate((n,)) == (1,) * n


def test_conjugate_is_involution():
    for n in range(1, 13):
        for p in partitions_of(n):
            assert conjugate(conjugate(p)) == p


def test_conjugate_part_counts():
    # first conjugate part = number of parts; number of conjugate parts = largest part
    for n in range(1, 13):
        for mu in partitions_of(n):
            gamma = conjugate(mu)
            assert gamma[0] == len(mu)
            assert len(gamma) == mu[0]


def test_lex_compare_examples():
    assert lex_compare((3, 1, 1), (2, 2, 1)) == 1
    assert lex_compare((5,), (4, 1)) == 1
    assert lex_compare((3, 2), (3, 1, 1)) == 1
    assert lex_compare((2, 2, 1), (2, 2, 1)) == 0
    assert lex_compare((2, 1, 1, 1), (3, 2)) == -1


def test_lex_compare_rejects_different_sums():
    with pytest.raises(ValueError):
        lex_compare((3, 1), (3, 2))


def test_lex_compare_is_a_strict_total_order():
    for n in range(1, 10):
        parts = partitions_of(n)
        for i, p in enumerate(parts):
            for q in parts[i + 1 :]:
                assert lex_compare(p, q) == -lex_compare(q, p) != 0


def test_classification_order_for_degree_five():
    pairs = classification_order(5)
    assert [g for _, g in pairs] == [
        (5,),
        (4, 1),
        (3, 2),
        (3, 1, 1),
        (2, 2, 1),
        (2, 1, 1, 1),
        (1, 1, 1, 1, 1),
    ]
    assert [m for m, _ in pairs] == [
        (1, 1, 1, 1, 1),
        (2, 1, 1, 1),
        (2, 2, 1),
        (3, 1, 1),
        (3, 2),
        (4, 1),
        (5,),
    ]


def test_classification_order_degenerate_and_large():
    assert classification_order(1) == [((1,), (1,))]
    pairs = classification_order(9)
    assert len(pairs) == 30
    gammas = [g for _, g in pairs]
    for a, b in zip(gammas, gammas[1:]):
        assert lex_compare(a, b) == 1
    # both columns cover all partitions exactly once
    assert set(gammas) == set(partitions_of(9))
    assert set(m for m, _ in pairs) == set(partitions_of(9))
    for mu, gamma in pairs:
        assert conjugate(mu) == gamma
