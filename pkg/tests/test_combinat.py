from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from charsheaves.combinat import (
    EMPTY,
    Bipartition,
    CyclicCharacter,
    Partition,
    bipartitions_of,
    characters_of_order,
    divisors,
    euler_phi,
    partitions_of,
    transpose,
)


def _euler_pentagonal(n_max):
    # p(n) = sum_k (-1)^{k+1} (p(n - k(3k-1)/2) + p(n - k(3k+1)/2))
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        k, total = 1, 0
        while True:
            g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def test_transpose_examples():
    assert transpose(EMPTY) == EMPTY
    assert transpose(Partition((2, 1))) == Partition((2, 1))
    assert transpose(Partition((2, 2))) == Partition((2, 2))
    assert transpose(Partition((3, 1))) == Partition((2, 1, 1))


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_partition_counts_match_recurrence():
    ref = _euler_pentagonal(20)
    for n in range(21):
        parts = partitions_of(n)
        assert len(parts) == ref[n]
        assert len(set(parts)) == len(parts)
        assert all(p.size == n for p in parts)


def test_partitions_small():
    assert partitions_of(0) == [EMPTY]
    assert partitions_of(1) == [Partition((1,))]
    assert len(partitions_of(4)) == 5


def test_bipartitions():
    assert bipartitions_of(0) == [Bipartition(EMPTY, EMPTY)]
    assert len(bipartitions_of(1)) == 2
    assert len(bipartitions_of(2)) == 5
    ref = _euler_pentagonal(8)
    for n in range(9):
        assert len(bipartitions_of(n)) == sum(ref[a] * ref[n - a] for a in range(n + 1))


def test_characters_of_order():
    assert characters_of_order(1, 1) == [CyclicCharacter(1, 0)]
    assert {c.exponent for c in characters_of_order(6, 3)} == {2, 4}
    assert characters_of_order(6, 4) == []


def test_euler_phi():
    assert [euler_phi(n) for n in (1, 2, 12)] == [1, 1, 4]
    assert sum(euler_phi(d) for d in divisors(360)) == 360


@given(st.integers(1, 60), st.data())
def test_character_orders_partition_the_group(d, data):
    by_order = {m: characters_of_order(d, m) for m in divisors(d)}
    assert sum(len(v) for v in by_order.values()) == d
    m = data.draw(st.sampled_from(divisors(d)))
    assert len(by_order[m]) == euler_phi(m)
    assert all(c.order == m for c in by_order[m])


@given(st.integers(1, 40), st.integers(0, 200))
def test_angle_round_trip(d, k):
    chi = CyclicCharacter(d, k % d)
    assert CyclicCharacter.from_angle(chi.angle, d) == chi
    assert chi.angle == Fraction(k % d, d)


@given(st.integers(0, 12).flatmap(lambda n: st.sampled_from(partitions_of(n))))
def test_transpose_is_involution(p):
    assert transpose(transpose(p)) == p
    assert transpose(p).size == p.size
