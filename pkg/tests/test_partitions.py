import pytest
from hypothesis import given, strategies as st

from partotient.partitions import (
    Partition,
    build_partition_table,
    distinct_parts_sum_oracle,
    enumerate_partitions,
    multiplicity_vectors,
    part_count_S,
    part_count_S_oracle,
    partition_count,
)

ORACLE_N = 20


def as_lists(n, r=1):
    return [list(p.parts) for p in enumerate_partitions(n, r)]


def test_table_examples():
    assert build_partition_table(1, 5)[5] == 7
    assert build_partition_table(2, 6)[6] == 4
    assert build_partition_table(3, 8)[8] == 3


def test_table_rejects_bad_min_part():
    with pytest.raises(ValueError):
        build_partition_table(0, 5)


@pytest.mark.parametrize("r", [1, 2, 3, 5])
def test_table_invariants(r):
    t = build_partition_table(r, 60)
    assert t[0] == 1
    assert all(t[n] == 0 for n in range(1, min(r, 61)))


def test_p2_is_first_difference():
    p = partition_count(500)
    t2 = build_partition_table(2, 500)
    assert all(t2[n] == p[n] - p[n - 1] for n in range(1, 501))


def test_partition_count_values():
    p = partition_count(20)
    assert p[0] == 1 and p[5] == 7
    assert p[20] == 627 == sum(1 for _ in enumerate_partitions(20))


def test_partition_count_empty():
    assert partition_count(-1) == []
    assert partition_count(0) == [1]


def test_pentagonal_vs_dp():
    assert partition_count(600) == list(build_partition_table(1, 600).counts)


def test_enumerate_5_in_listed_order():
    assert as_lists(5) == [[5], [4, 1], [3, 2], [3, 1, 1], [2, 2, 1], [2, 1, 1, 1], [1, 1, 1, 1, 1]]


def test_enumerate_6_without_ones():
    assert as_lists(6, 2) == [[6], [4, 2], [3, 3], [2, 2, 2]]


def test_enumerate_zero():
    assert as_lists(0) == [[]]
    assert as_lists(0, 4) == [[]]


def test_enumerate_no_solutions():
    assert as_lists(1, 2) == []
    assert as_lists(5, 3) == [[5]]


@given(st.integers(0, 16), st.integers(1, 5))
def test_enumeration_reverse_lex_and_complete(n, r):
    got = as_lists(n, r)
    assert got == sorted(got, reverse=True)
    assert len(set(map(tuple, got))) == len(got)
    assert len(got) == build_partition_table(r, n)[n]
    for parts in got:
        assert sum(parts) == n and all(x >= r for x in parts)
        assert parts == sorted(parts, reverse=True)


def test_partition_type():
    p = Partition((3, 1, 1))
    assert p.n == 5 and p.multiplicity(1) == 2 and p.distinct_count() == 2
    with pytest.raises(ValueError):
        Partition((1, 3))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_S_examples():
    assert part_count_S(build_partition_table(1, 5), 5, 1) == 12
    t2 = build_partition_table(2, 6)
    assert [part_count_S(t2, 6, k) for k in (2, 3, 4, 6)] == [4, 2, 1, 1]
    assert part_count_S(build_partition_table(3, 8), 8, 4) == 2


def test_S_zero_when_k_exceeds_n():
    t = build_partition_table(1, 30)
    assert all(part_count_S(t, n, k) == 0 for n in range(31) for k in range(n + 1, 40))


def test_S_errors():
    t = build_partition_table(2, 10)
    with pytest.raises(ValueError):
        part_count_S(t, 5, 1)
    with pytest.raises(ValueError):
        part_count_S(t, 11, 2)


@pytest.mark.parametrize("n,k,r,expected", [(5, 1, 1, 12), (6, 5, 2, 0), (8, 3, 3, 1)])
def test_S_oracle_examples(n, k, r, expected):
    assert part_count_S_oracle(n, k, r) == expected


def test_S_oracle_rejects_k_below_r():
    with pytest.raises(ValueError):
        part_count_S_oracle(5, 1, 2)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_S_formula_vs_oracle(r):
    t = build_partition_table(r, ORACLE_N)
    for n in range(ORACLE_N + 1):
        for k in range(r, n + 2):
            assert part_count_S(t, n, k) == part_count_S_oracle(n, k, r)


@pytest.mark.parametrize("n,expected", [(5, 12), (0, 0), (4, 7)])
def test_distinct_parts_sum(n, expected):
    assert distinct_parts_sum_oracle(n) == expected


def test_multiplicity_vectors_match_enumeration():
    for n in range(12):
        vecs = list(multiplicity_vectors(n, range(1, n + 1)))
        assert len(vecs) == partition_count(n)[n]
        for v in vecs:
            assert sum(s * t for s, t in v.items()) == n
