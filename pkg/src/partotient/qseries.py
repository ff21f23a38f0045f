"""Truncated formal power series in q with exact integer coefficients.

A series of order T knows c_0..c_T and nothing above. Binary operations
return a result of order min(a.order, b.order); nothing is ever extended.
There is no general division: each 1/(...) needed here is built
constructively (geometric tails, products of 1/(1 - q^m)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from partotient.partitions import partition_count
from partotient.totient import TotientTable, build_totient_table


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be >= 0, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"order {self.order} needs {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls(order, (0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff: int = 1) -> TruncatedSeries:
        """coeff * q**power, truncated at ``order``."""
        c = [0] * (order + 1)
        if power <= order:
            c[power] = coeff
        return cls(order, tuple(c))

    @classmethod
    def polynomial(cls, coeffs: Iterable[int], order: int) -> TruncatedSeries:
        """Series from a finite coefficient list; terms above ``order`` drop."""
        c = list(coeffs)[: order + 1]
        c.extend([0] * (order + 1 - len(c)))
        return cls(order, tuple(c))

    def __getitem__(self, i: int) -> int:
        if not 0 <= i <= self.order:
            raise IndexError(f"coefficient of q^{i} unknown at order {self.order}")
        return self.coeffs[i]

    def __len__(self):
        return self.order + 1

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        t = min(self.order, other.order)
        return TruncatedSeries(t, tuple(a + b for a, b in zip(self.coeffs[: t + 1], other.coeffs)))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        t = min(self.order, other.order)
        return TruncatedSeries(t, tuple(a - b for a, b in zip(self.coeffs[: t + 1], other.coeffs)))

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, int):
            return TruncatedSeries(self.order, tuple(other * a for a in self.coeffs))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        t = min(self.order, other.order)
        a, b = self.coeffs[: t + 1], other.coeffs[: t + 1]
        # iterate over the sparser operand's nonzero terms
        if sum(1 for x in a if x) > sum(1 for x in b if x):
            a, b = b, a
        out = [0] * (t + 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(t + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncatedSeries(t, tuple(out))

    __rmul__ = __mul__

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*q^{i}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.order + 1})"


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a - b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def geometric(k: int, order: int) -> TruncatedSeries:
    """q^k / (1 - q^k) = q^k + q^2k + ..., truncated at ``order``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    c = [0] * (order + 1)
    for i in range(k, order + 1, k):
        c[i] = 1
    return TruncatedSeries(order, tuple(c))


def inv_pochhammer(r: int, order: int) -> TruncatedSeries:
    """1 / (q^r; q)_inf, i.e. the product of 1/(1 - q^m) over m >= r.

    Factors with m > order are 1 + O(q^(order+1)) and are skipped. Each
    factor is expanded as 1 + q^m/(1 - q^m) and multiplied in.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    one = TruncatedSeries.one(order)
    acc = one
    for m in range(r, order + 1):
        acc = acc * (one + geometric(m, order))
    return acc


def lambert_phi(table: TotientTable, order: int) -> TruncatedSeries:
    """sum_{k>=1} phi(k) q^k / (1 - q^k), truncated at ``order``."""
    if table.limit < order:
        raise ValueError(f"totient table limit {table.limit} < order {order}")
    acc = TruncatedSeries.zero(order)
    for k in range(1, order + 1):
        acc = acc + geometric(k, order) * table[k]
    return acc


def part_count_series(r: int, k: int, order: int, _inv: Optional[TruncatedSeries] = None) -> TruncatedSeries:
    """Generating function of S^(r)_{n,k} in n: q^k/(1-q^k) * 1/(q^r; q)_inf."""
    if r < 1 or k < r:
        raise ValueError(f"need k >= r >= 1, got r={r}, k={k}")
    inv = _inv if _inv is not None else inv_pochhammer(r, order)
    return geometric(k, order) * inv


def first_mismatch(a: TruncatedSeries, b: TruncatedSeries) -> Optional[tuple[int, int, int]]:
    """(n, a_n, b_n) for the lowest differing coefficient, compared through
    min(a.order, b.order); None if they agree there."""
    t = min(a.order, b.order)
    for n in range(t + 1):
        if a.coeffs[n] != b.coeffs[n]:
            return n, a.coeffs[n], b.coeffs[n]
    return None


@dataclass(frozen=True)
class EqualityCheck:
    label: str
    order: int
    mismatch: Optional[tuple[int, int, int]] = None

    @property
    def passed(self) -> bool:
        return self.mismatch is None


@dataclass
class ChainReport:
    """Result of replaying a chain of series equalities through ``order``.

    ``series`` keeps the named intermediate series for inspection.
    """

    name: str
    order: int
    checks: list[EqualityCheck] = field(default_factory=list)
    series: dict[str, TruncatedSeries] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Optional[EqualityCheck]:
        return next((c for c in self.checks if not c.passed), None)

    def check(self, label: str, lhs: TruncatedSeries, rhs: TruncatedSeries) -> EqualityCheck:
        c = EqualityCheck(label, min(lhs.order, rhs.order), first_mismatch(lhs, rhs))
        self.checks.append(c)
        return c


def _weighted_part_count_sum(table: TotientTable, r: int, order: int, inv_r: TruncatedSeries) -> TruncatedSeries:
    # sum_{k>=r} phi(k) * q^k/(1-q^k) * 1/(q^r;q)_inf
    acc = TruncatedSeries.zero(order)
    for k in range(r, order + 1):
        acc = acc + part_count_series(r, k, order, inv_r) * table[k]
    return acc


def replay_theorem2_chain(order: int) -> ChainReport:
    """Replay the generating-function proof that the number of 1's in the
    partitions of n equals sum_{k=2}^{n+1} phi(k) S^(2)_{n+1,k}.

    Checks, through ``order``:
      lhs  = (1-q)/(q;q)_inf * L(q)                 where L is the phi Lambert series
      mid  = q/(q;q)_inf + sum_{k>=2} phi(k) S^(2)_{n,k} q^n
      rhs  = q/(q;q)_inf + q/(1-q) * q/(q;q)_inf
      tail = sum_n S^(1)_{n,1} q^(n+1)              equals rhs - q/(q;q)_inf
    and the coefficientwise conclusion S^(1)_{n,1} = [q^(n+1)] of the phi-weighted sum.
    """
    if order < 2:
        raise ValueError(f"order must be >= 2, got {order}")
    T = order
    phi = build_totient_table(T)
    q = TruncatedSeries.monomial(1, T)
    inv1 = inv_pochhammer(1, T)
    inv2 = inv_pochhammer(2, T)
    lam = lambert_phi(phi, T)

    lhs = (TruncatedSeries.one(T) - q) * inv1 * lam
    weighted = _weighted_part_count_sum(phi, 2, T, inv2)
    mid = q * inv1 + weighted
    rhs = q * inv1 + geometric(1, T) * (q * inv1)
    ones = part_count_series(1, 1, T, inv1)  # sum_n S^(1)_{n,1} q^n
    tail = q * ones

    report = ChainReport("theorem2", T)
    report.series.update(lhs=lhs, mid=mid, rhs=rhs, weighted=weighted, ones=ones)
    report.check("(1-q)/(q;q) * Lambert == q/(q;q) + sum phi(k) S2 q^n", lhs, mid)
    report.check("(1-q)/(q;q) * Lambert == q/(q;q) + q/(1-q) * q/(q;q)", lhs, rhs)
    report.check("q/(1-q) * q/(q;q) == sum S1_(n,1) q^(n+1)", rhs - q * inv1, tail)
    report.check("sum phi(k) S2_(n,k) q^n == sum S1_(n-1,1) q^n", weighted, tail)
    return report


def replay_theorem3_chain(order: int) -> ChainReport:
    """Replay the generating-function proof of the half-totient formula
    for p(n).

    Checks, through ``order``:
      lhs   = (1-q)(1-q^2)/(q;q)_inf * L(q)
      mid   = (q + q^2 - 2q^3)/(q;q)_inf + sum_{k>=3} phi(k) S^(3)_{n,k} q^n
      rhs   = (q + q^2)/(q;q)_inf
      final = sum_{k>=3} phi(k) S^(3)_{n,k} q^n == 2 q^3/(q;q)_inf
    and that [q^n] final == 2 p(n-3) with p from the pentagonal recurrence.
    """
    if order < 3:
        raise ValueError(f"order must be >= 3, got {order}")
    T = order
    phi = build_totient_table(T)
    inv1 = inv_pochhammer(1, T)
    inv3 = inv_pochhammer(3, T)
    lam = lambert_phi(phi, T)
    poly = TruncatedSeries.polynomial

    lhs = poly([1, -1, -1, 1], T) * inv1 * lam  # (1-q)(1-q^2) = 1 - q - q^2 + q^3
    final = _weighted_part_count_sum(phi, 3, T, inv3)
    mid = poly([0, 1, 1, -2], T) * inv1 + final
    rhs = poly([0, 1, 1], T) * inv1
    closed = TruncatedSeries.monomial(3, T, 2) * inv1
    p = partition_count(T)
    expected = TruncatedSeries.polynomial([0, 0, 0] + [2 * p[n - 3] for n in range(3, T + 1)], T)

    report = ChainReport("theorem3", T)
    report.series.update(lhs=lhs, mid=mid, rhs=rhs, final=final)
    report.check("(1-q)(1-q^2)/(q;q) * Lambert == (q+q^2-2q^3)/(q;q) + sum phi(k) S3 q^n", lhs, mid)
    report.check("(1-q)(1-q^2)/(q;q) * Lambert == (q+q^2)/(q;q)", lhs, rhs)
    report.check("sum phi(k) S3_(n,k) q^n == 2q^3/(q;q)", final, closed)
    report.check("[q^n] sum phi(k) S3_(n,k) q^n == 2 p(n-3)", final, expected)
    return report
