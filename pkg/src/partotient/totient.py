"""Euler's totient and the half totient.

Tables are built with a linear sieve, so every composite is visited exactly
once through its smallest prime factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt


@dataclass(frozen=True)
class TotientTable:
    """phi(1..limit); ``values[i]`` holds phi(i + 1)."""

    limit: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.limit:
            raise ValueError("values must have exactly `limit` entries")

    def __getitem__(self, n: int) -> int:
        """phi(n), 1-based."""
        if not 1 <= n <= self.limit:
            raise IndexError(f"phi({n}) outside table range 1..{self.limit}")
        return self.values[n - 1]

    def __len__(self):
        return self.limit


def build_totient_table(limit: int) -> TotientTable:
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    phi = [0] * (limit + 1)
    phi[1] = 1
    primes: list[int] = []
    for i in range(2, limit + 1):
        if phi[i] == 0:
            phi[i] = i - 1
            primes.append(i)
        phi_i = phi[i]
        for p in primes:
            m = i * p
            if m > limit:
                break
            if i % p == 0:
                # p already divides i: phi(i*p) = phi(i) * p
                phi[m] = phi_i * p
                break
            phi[m] = phi_i * (p - 1)
    return TotientTable(limit, tuple(phi[1:]))


def half_totient(table: TotientTable, k: int) -> int:
    """Number of partitions of k into two coprime parts, phi(k)/2.

    Only defined for k >= 3; for k in {1, 2} phi(k) is odd and the
    counting interpretation breaks down, so those are rejected.
    """
    if k < 3:
        raise ValueError(f"half totient is defined for k >= 3, got {k}")
    if k > table.limit:
        raise ValueError(f"k={k} exceeds table limit {table.limit}")
    phi_k = table[k]
    assert phi_k % 2 == 0, f"phi({k}) = {phi_k} is odd"
    return phi_k // 2


def coprime_pair_count_oracle(n: int) -> int:
    """Count pairs a >= b >= 1 with a + b = n and gcd(a, b) = 1 directly."""
    if n < 3:
        raise ValueError(f"oracle is defined for n >= 3, got {n}")
    return sum(1 for b in range(1, n // 2 + 1) if gcd(n - b, b) == 1)


def totient_oracle(n: int) -> int:
    """phi(n) by a direct gcd loop."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return sum(1 for m in range(1, n + 1) if gcd(m, n) == 1)


def divisors(n: int) -> list[int]:
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def divisor_totient_sum(table: TotientTable, n: int) -> int:
    """Sum of phi(d) over the divisors d of n (always equal to n)."""
    if not 1 <= n <= table.limit:
        raise ValueError(f"n={n} outside table range 1..{table.limit}")
    return sum(table[d] for d in divisors(n))


def divisor_totient_sums(table: TotientTable) -> list[int]:
    """Divisor sums of phi for every n in the table, by scattering each
    phi(d) onto the multiples of d. Entry 0 is unused and left at 0."""
    limit = table.limit
    acc = [0] * (limit + 1)
    for d in range(1, limit + 1):
        phi_d = table.values[d - 1]
        for m in range(d, limit + 1, d):
            acc[m] += phi_d
    return acc
