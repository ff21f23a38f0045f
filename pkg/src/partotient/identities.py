"""Verifiers for the partition/totient identities.

Every verifier sweeps a range, never raises on a mismatch, and returns an
:class:`IdentityReport` holding the first counterexample (exact integers).
Each identity is checked with at least two independent routes: closed
formulas over tables on one side, enumeration or series on the other.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from partotient.partitions import (
    build_partition_table,
    distinct_parts_sum_oracle,
    enumerate_partitions,
    multiplicity_vectors,
    part_count_S,
    part_count_S_oracle,
    partition_count,
)
from partotient.qseries import TruncatedSeries, geometric, lambert_phi
from partotient.totient import (
    build_totient_table,
    coprime_pair_count_oracle,
    divisor_totient_sums,
    half_totient,
    totient_oracle,
)

IDENTITY_NAMES = (
    "stanley",
    "theorem2",
    "theorem3",
    "interchange",
    "weighted_form",
    "euler_divisor_sum",
    "lambert",
)

INTERCHANGE_TRIALS = 100
INTERCHANGE_MAX_N = 200
INTERCHANGE_VALUE_RANGE = (-9, 9)


@dataclass(frozen=True)
class Failure:
    n: int
    lhs: int
    rhs: int


@dataclass
class IdentityReport:
    identity_name: str
    range_checked: tuple[int, int]
    status: str = "pass"
    first_failure: Optional[Failure] = None
    notes: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.identity_name not in IDENTITY_NAMES:
            raise ValueError(f"unknown identity {self.identity_name!r}")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def record(self, n: int, lhs: int, rhs: int) -> bool:
        """Compare one instance; keep only the first failure."""
        if lhs == rhs:
            return True
        if self.first_failure is None:
            self.first_failure = Failure(n, lhs, rhs)
            self.status = "fail"
        return False


def _sweep(name: str, lo: int, hi: int, lhs: Callable[[int], int], rhs: Callable[[int], int], **notes) -> IdentityReport:
    report = IdentityReport(name, (lo, hi), notes={k: str(v) for k, v in notes.items()})
    for n in range(lo, hi + 1):
        report.record(n, lhs(n), rhs(n))
    return report


def verify_stanley(n_max: int) -> IdentityReport:
    """Number of 1's over the partitions of n vs. number of distinct parts
    summed over the same partitions, both by enumeration."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    return _sweep(
        "stanley", 1, n_max,
        lambda n: part_count_S_oracle(n, 1, 1),
        distinct_parts_sum_oracle,
        route="enumeration",
    )


def verify_theorem2(n_max: int, route: str = "formula") -> IdentityReport:
    """S^(1)_{n,1} == sum_{k=2}^{n+1} phi(k) S^(2)_{n+1,k} for 1 <= n <= n_max.

    ``route="formula"`` uses sieve totients and the p_r tables;
    ``route="oracle"`` uses gcd-loop totients and enumeration.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if route == "formula":
        phi = build_totient_table(n_max + 1)
        t1 = build_partition_table(1, n_max)
        t2 = build_partition_table(2, n_max + 1)

        def lhs(n):
            return part_count_S(t1, n, 1)

        def rhs(n):
            return sum(phi[k] * part_count_S(t2, n + 1, k) for k in range(2, n + 2))

    elif route == "oracle":
        def lhs(n):
            return sum(p.multiplicity(1) for p in enumerate_partitions(n, 1))

        def rhs(n):
            return sum(totient_oracle(k) * part_count_S_oracle(n + 1, k, 2) for k in range(2, n + 2))

    else:
        raise ValueError(f"unknown route {route!r}")
    return _sweep("theorem2", 1, n_max, lhs, rhs, route=route)


def verify_theorem3(n_max: int, route: str = "formula") -> IdentityReport:
    """p(n) == sum_{k=3}^{n+3} P_phi(k) S^(3)_{n+3,k} for 0 <= n <= n_max."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if route == "formula":
        phi = build_totient_table(n_max + 3)
        p = partition_count(n_max)
        t3 = build_partition_table(3, n_max + 3)

        def lhs(n):
            return p[n]

        def rhs(n):
            return sum(half_totient(phi, k) * part_count_S(t3, n + 3, k) for k in range(3, n + 4))

    elif route == "oracle":
        def lhs(n):
            return sum(1 for _ in enumerate_partitions(n, 1))

        def rhs(n):
            return sum(
                coprime_pair_count_oracle(k) * part_count_S_oracle(n + 3, k, 3) for k in range(3, n + 4)
            )

    else:
        raise ValueError(f"unknown route {route!r}")
    return _sweep("theorem3", 0, n_max, lhs, rhs, route=route)


def interchange_sides(a: Sequence[int], b: Sequence[int], n: int) -> tuple[int, int]:
    """Both sides of

        sum_{k=1}^n (sum_{d|k} a_d) b_{n-k} == sum_{k=1}^n (sum_{i=1}^{n//k} b_{n-ik}) a_k

    with ``a[k-1]`` = a_k (k = 1..n) and ``b[j]`` = b_j (j = 0..n-1).
    """
    if len(a) < n or len(b) < n:
        raise ValueError(f"need len(a) >= {n} and len(b) >= {n}")
    divsum = [0] * (n + 1)
    for d in range(1, n + 1):
        for m in range(d, n + 1, d):
            divsum[m] += a[d - 1]
    lhs = sum(divsum[k] * b[n - k] for k in range(1, n + 1))
    rhs = sum(sum(b[n - i * k] for i in range(1, n // k + 1)) * a[k - 1] for k in range(1, n + 1))
    return lhs, rhs


def verify_interchange(a: Sequence[int], b: Sequence[int], n: int) -> IdentityReport:
    """Check the divisor-sum interchange identity for one pair of sequences."""
    report = IdentityReport("interchange", (n, n), notes={"instance": "explicit"})
    report.record(n, *interchange_sides(a, b, n))
    return report


def verify_interchange_random(
    seed: int,
    trials: int = INTERCHANGE_TRIALS,
    max_n: int = INTERCHANGE_MAX_N,
) -> IdentityReport:
    """Interchange identity on ``trials`` seeded random integer sequences.

    The failure's ``n`` field is the sequence length of the failing trial.
    """
    rng = random.Random(seed)
    lo, hi = INTERCHANGE_VALUE_RANGE
    report = IdentityReport(
        "interchange", (1, max_n),
        notes={"instance": "random", "seed": str(seed), "trials": str(trials)},
    )
    for _ in range(trials):
        n = rng.randint(1, max_n)
        a = [rng.randint(lo, hi) for _ in range(n)]
        b = [rng.randint(lo, hi) for _ in range(n)]
        report.record(n, *interchange_sides(a, b, n))
    return report


def verify_interchange_phi_p2(n_max: int) -> IdentityReport:
    """The interchange identity at (a, b) = (phi, p_2), as in the
    combinatorial proof. For each 1 <= n <= n_max both sides are also
    required to match their evaluated forms:

        left  == p(n-1) + S^(1)_{n-1,1}
        right == p(n-1) + sum_{k=2}^n S^(2)_{n,k} phi(k)

    The reported lhs/rhs on failure are the interchange sides, or the side
    and its evaluated form when only that step breaks.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    phi = build_totient_table(n_max)
    p = partition_count(n_max)
    t1 = build_partition_table(1, n_max)
    t2 = build_partition_table(2, n_max)
    a = list(phi.values)
    b = list(t2.counts)
    report = IdentityReport("interchange", (1, n_max), notes={"instance": "phi,p2"})
    for n in range(1, n_max + 1):
        lhs, rhs = interchange_sides(a, b, n)
        if not report.record(n, lhs, rhs):
            continue
        ones = part_count_S(t1, n - 1, 1) if n >= 2 else 0
        if not report.record(n, lhs, p[n - 1] + ones):
            continue
        weighted = sum(part_count_S(t2, n, k) * phi[k] for k in range(2, n + 1))
        report.record(n, rhs, p[n - 1] + weighted)
    return report


WEIGHTED_FORM_READING = (
    "LHS sums t_1 over multiplicity vectors with 1 + t_1 + 2 t_2 + ... + n t_n = n "
    "(partitions of n-1, one extra 1 adjoined); RHS sums phi(2) t_2 + ... + phi(n) t_n "
    "over vectors with 2 t_2 + ... + n t_n = n"
)


def verify_weighted_form(n_max: int) -> IdentityReport:
    """Multiplicity-vector form of the phi-weighted identity, checked
    literally by enumerating vectors (t_1, ..., t_n) for 2 <= n <= n_max."""
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    phi = build_totient_table(n_max)

    def lhs(n):
        return sum(t[1] for t in multiplicity_vectors(n - 1, range(1, n + 1)))

    def rhs(n):
        return sum(
            sum(phi[i] * t[i] for i in range(2, n + 1))
            for t in multiplicity_vectors(n, range(2, n + 1))
        )

    return _sweep("weighted_form", 2, n_max, lhs, rhs, reading=WEIGHTED_FORM_READING)


def verify_euler_divisor_sum(n_max: int) -> IdentityReport:
    """sum_{d|n} phi(d) == n for 1 <= n <= n_max, over the sieve table."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    sums = divisor_totient_sums(build_totient_table(n_max))
    return _sweep("euler_divisor_sum", 1, n_max, lambda n: sums[n], lambda n: n)


def verify_lambert(order: int) -> IdentityReport:
    """Coefficients of the phi Lambert series against n and against the
    independently built series q/(1-q)^2 = q/(1-q) * (1 + q/(1-q))."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    lam = lambert_phi(build_totient_table(order), order)
    g = geometric(1, order)
    closed = g * (TruncatedSeries.one(order) + g)
    report = _sweep("lambert", 1, order, lambda n: lam[n], lambda n: n)
    for n in range(1, order + 1):
        report.record(n, lam[n], closed[n])
    return report
