"""Acceptance criteria, one test each. A PASS/FAIL line per criterion is
printed at the end of the module (also when run directly as a script)."""

import time

import pytest

from partotient.identities import (
    interchange_sides,
    verify_euler_divisor_sum,
    verify_interchange_random,
    verify_stanley,
    verify_theorem2,
    verify_theorem3,
)
from partotient.partitions import (
    build_partition_table,
    distinct_parts_sum_oracle,
    part_count_S,
    part_count_S_oracle,
    partition_count,
)
from partotient.qseries import lambert_phi, replay_theorem2_chain, replay_theorem3_chain
from partotient.totient import build_totient_table

RESULTS: dict[str, str] = {}


@pytest.fixture(scope="module", autouse=True)
def summary(request):
    yield
    tr = request.config.pluginmanager.getplugin("terminalreporter")
    lines = [f"{status} {name}" for name, status in sorted(RESULTS.items())]
    if tr is not None:
        tr.write_line("")
        for line in lines:
            tr.write_line(line)
    else:
        print("\n".join(lines))


def record(name, ok, detail=""):
    RESULTS[name] = "PASS" if ok else f"FAIL ({detail})"
    assert ok, f"{name}: {detail}"


def test_c1_worked_example():
    t0 = time.perf_counter()
    s1 = part_count_S(build_partition_table(1, 5), 5, 1)
    distinct = distinct_parts_sum_oracle(5)
    t2 = build_partition_table(2, 6)
    s2 = tuple(part_count_S(t2, 6, k) for k in (2, 3, 4, 5, 6))
    phi = build_totient_table(6)
    weighted = phi[2] * 4 + phi[3] * 2 + phi[4] * 1 + phi[6] * 1
    elapsed = time.perf_counter() - t0
    ok = s1 == 12 and distinct == 12 and s2 == (4, 2, 1, 0, 1) and weighted == 12 and elapsed < 1.0
    record("C1 worked example", ok, f"S={s1} distinct={distinct} S2={s2} weighted={weighted} t={elapsed:.3f}s")


def test_c2_theorem2():
    t0 = time.perf_counter()
    formula = verify_theorem2(300, "formula")
    oracle = verify_theorem2(30, "oracle")
    elapsed = time.perf_counter() - t0
    ok = formula.passed and oracle.passed and elapsed < 10.0
    record("C2 theorem 2 (n<=300 formula, n<=30 oracle)", ok,
           f"{formula.first_failure} {oracle.first_failure} t={elapsed:.2f}s")


def test_c3_theorem3():
    formula = verify_theorem3(300, "formula")
    oracle = verify_theorem3(30, "oracle")
    p = partition_count(5)
    ok = formula.passed and oracle.passed and p[0] == 1 and p[5] == 7
    record("C3 theorem 3 (n<=300 formula, n<=30 oracle)", ok, f"{formula.first_failure} {oracle.first_failure}")


def test_c4_stanley():
    rep = verify_stanley(30)
    record("C4 Stanley by double enumeration, n<=30", rep.passed, str(rep.first_failure))


def test_c5_lambert_and_divisor_sum():
    lam = lambert_phi(build_totient_table(500), 500)
    bad = next((n for n in range(1, 501) if lam[n] != n), None)
    divsum = verify_euler_divisor_sum(10**5)
    record("C5 Lambert c_n = n (n<=500), divisor sum (n<=1e5)", bad is None and divsum.passed,
           f"lambert n={bad} divisor={divsum.first_failure}")


def test_c6_qseries_replays():
    r2 = replay_theorem2_chain(200)
    r3 = replay_theorem3_chain(200)
    p = partition_count(197)
    final = r3.series["final"]
    coeff_ok = all(final[n] == 2 * p[n - 3] for n in range(3, 201))
    ok = r2.passed and r3.passed and coeff_ok and len(r2.checks) == 4 and len(r3.checks) == 4
    record("C6 q-series replays at T=200", ok, f"{r2.first_failure} {r3.first_failure} coeffs={coeff_ok}")


def test_c7_interchange():
    rand = verify_interchange_random(seed=20240101, trials=100, max_n=200)
    phi = build_totient_table(6)
    p2 = build_partition_table(2, 6)
    sides = interchange_sides(list(phi.values), list(p2.counts), 6)
    ok = rand.passed and rand.notes["trials"] == "100" and sides == (19, 19)
    record("C7 interchange (100 random, (phi,p2) at n=6)", ok, f"{rand.first_failure} sides={sides}")


def test_c8_pentagonal_vs_dp():
    p = partition_count(2000)
    dp = build_partition_table(1, 2000).counts
    bad = next((n for n in range(2001) if p[n] != dp[n]), None)
    ok = bad is None and len(str(p[2000])) > 40
    record("C8 pentagonal p(n) == DP p_1(n), n<=2000", ok, f"first mismatch n={bad}")


def test_c9_oracle_consistency():
    bad = None
    for r in (1, 2, 3):
        table = build_partition_table(r, 25)
        for n in range(26):
            for k in range(r, n + 1):
                if part_count_S(table, n, k) != part_count_S_oracle(n, k, r):
                    bad = bad or (n, k, r)
    record("C9 S formula == S oracle, n<=25, r in {1,2,3}", bad is None, f"first mismatch {bad}")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
