"""Partition counts p(n), p_r(n), the part-count statistic S^(r)_{n,k}, and
a brute force enumerator used as the oracle for all of them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class PartitionTable:
    """p_r(0..max_n) for a fixed minimum part r = ``min_part``."""

    min_part: int
    max_n: int
    counts: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.counts[n]


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(x < 1 for x in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be nonincreasing: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def multiplicity(self, k: int) -> int:
        return self.parts.count(k)

    def distinct_count(self) -> int:
        return len(set(self.parts))

    def __str__(self):
        return "+".join(map(str, self.parts)) if self.parts else "()"


def build_partition_table(min_part: int, max_n: int) -> PartitionTable:
    """Tabulate p_r(n) for 0 <= n <= max_n, r = min_part.

    Classic coin-change DP: each allowed part size m in r..max_n multiplies
    the running series by 1/(1 - q^m).
    """
    if min_part < 1:
        raise ValueError(f"min_part must be >= 1, got {min_part}")
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    counts = [0] * (max_n + 1)
    counts[0] = 1
    for m in range(min_part, max_n + 1):
        for i in range(m, max_n + 1):
            counts[i] += counts[i - m]
    return PartitionTable(min_part, max_n, tuple(counts))


def partition_count(max_n: int) -> list[int]:
    """p(0..max_n) by Euler's pentagonal number recurrence.

    p(n) = sum_{j>=1} (-1)^(j+1) [p(n - j(3j-1)/2) + p(n - j(3j+1)/2)]
    """
    if max_n < 0:
        return []
    p = [0] * (max_n + 1)
    p[0] = 1
    for n in range(1, max_n + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > n:
                break
            term = p[n - g1]
            g2 = g1 + j
            if g2 <= n:
                term += p[n - g2]
            total += term if j % 2 else -term
            j += 1
        p[n] = total
    return p


def part_count_S(table: PartitionTable, n: int, k: int) -> int:
    """Total number of parts equal to k over the partitions of n with
    smallest part >= table.min_part, as sum_{t>=1} p_r(n - t*k)."""
    if k < table.min_part:
        raise ValueError(f"S^({table.min_part})_(n,k) needs k >= {table.min_part}, got k={k}")
    if n > table.max_n:
        raise ValueError(f"n={n} exceeds table max_n={table.max_n}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    counts = table.counts
    return sum(counts[m] for m in range(n - k, -1, -k))


def enumerate_partitions(n: int, min_part: int = 1) -> Iterator[Partition]:
    """Yield every partition of n with all parts >= min_part, in reverse
    lexicographic order (``5, 4+1, 3+2, 3+1+1, ...``).

    Uses an explicit stack, so depth is not bounded by the recursion limit.
    Branches that cannot be completed are pruned only partially; this is an
    oracle, not a fast path.
    """
    if min_part < 1:
        raise ValueError(f"min_part must be >= 1, got {min_part}")
    if n < 0:
        return
    stack: list[tuple[tuple[int, ...], int, int]] = [((), n, n)]
    while stack:
        prefix, remaining, cap = stack.pop()
        if remaining == 0:
            yield Partition(prefix)
            continue
        # push ascending so the largest next part is popped first
        for x in range(min_part, min(remaining, cap) + 1):
            rest = remaining - x
            if rest == 0 or rest >= min_part:
                stack.append((prefix + (x,), rest, x))


def part_count_S_oracle(n: int, k: int, r: int) -> int:
    """S^(r)_{n,k} straight from its definition over the enumerator."""
    if not k >= r >= 1:
        raise ValueError(f"need k >= r >= 1, got k={k}, r={r}")
    return sum(p.multiplicity(k) for p in enumerate_partitions(n, r))


def distinct_parts_sum_oracle(n: int) -> int:
    """Number of distinct part sizes, summed over all partitions of n."""
    return sum(p.distinct_count() for p in enumerate_partitions(n, 1))


def multiplicity_vectors(n: int, sizes: Sequence[int]) -> Iterator[dict[int, int]]:
    """Yield every map {size: t_size} with sum(size * t_size) == n.

    Independent of :func:`enumerate_partitions`; sizes with t = 0 are
    included so callers can index freely.
    """
    sizes = sorted(set(sizes), reverse=True)

    def rec(i: int, rem: int, acc: dict[int, int]):
        if i == len(sizes):
            if rem == 0:
                yield dict(acc)
            return
        s = sizes[i]
        for t in range(rem // s, -1, -1):
            acc[s] = t
            yield from rec(i + 1, rem - s * t, acc)
        del acc[s]

    yield from rec(0, n, {})

