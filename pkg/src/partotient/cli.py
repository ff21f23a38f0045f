"""Command line interface: ``partotient compute|verify|bench``.

Exit status is 0 on success, 1 when a verification fails and 2 on bad
arguments. Every number in the payload is written as a decimal string.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Optional, Sequence

from partotient import identities, qseries
from partotient.partitions import build_partition_table, part_count_S, partition_count
from partotient.totient import build_totient_table, half_totient

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

COMPUTE_TARGETS = ("p", "p_r", "phi", "S", "P_phi")
VERIFY_TARGETS = (
    "stanley",
    "theorem2",
    "theorem3",
    "interchange",
    "weighted-form",
    "euler-divisor-sum",
    "lambert",
    "qseries-chains",
    "all",
)
REPORT_COLUMNS = ("identity", "detail", "range_lo", "range_hi", "status", "failure_n", "failure_lhs", "failure_rhs")


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    """``"2..6"`` -> (2, 6); a bare integer is a one-element range."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or LO..HI, got {text!r}") from None


def _stringify(row: dict) -> dict:
    return {k: "" if v is None else str(v) for k, v in row.items()}


def render(record: dict, fmt: str) -> str:
    rows = [_stringify(r) for r in record["rows"]]
    if fmt == "json":
        out = dict(record)
        out["parameters"] = {k: "" if v is None else str(v) for k, v in record["parameters"].items()}
        out["rows"] = rows
        return json.dumps(out, indent=2) + "\n"
    buf = io.StringIO()
    columns = list(rows[0]) if rows else list(record.get("columns", ()))
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def output_record(command: str, parameters: dict, rows: list[dict], status: str, columns=()) -> dict:
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "rows": rows,
        "status": status,
    }
    if columns:
        # only used to label an empty CSV; dropped from JSON below
        record["columns"] = tuple(columns)
    return record


def emit(record: dict, fmt: str, out: Optional[str]):
    record = dict(record)
    columns = record.pop("columns", ())
    if fmt == "csv" and not record["rows"]:
        record["columns"] = columns
    text = render(record, fmt)
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- compute ---------------------------------------------------------------

def _need(args, name: str):
    v = getattr(args, name.replace("-", "_"))
    if v is None:
        raise UsageError(f"compute {args.target} requires --{name}")
    return v


def compute_rows(args) -> tuple[dict, list[dict], tuple[str, ...]]:
    target = args.target
    if target in ("p", "phi", "P_phi", "p_r"):
        max_n = _need(args, "max-n")
        if max_n < 0:
            raise UsageError("--max-n must be >= 0")
    if target == "p":
        p = partition_count(max_n)
        return {"max_n": max_n}, [{"n": n, "value": v} for n, v in enumerate(p)], ("n", "value")
    if target == "p_r":
        r = _need(args, "r")
        if r < 1:
            raise UsageError("--r must be >= 1")
        t = build_partition_table(r, max_n)
        return {"r": r, "max_n": max_n}, [{"n": n, "value": v} for n, v in enumerate(t.counts)], ("n", "value")
    if target == "phi":
        if max_n < 1:
            return {"max_n": max_n}, [], ("n", "value")
        t = build_totient_table(max_n)
        return {"max_n": max_n}, [{"n": n, "value": t[n]} for n in range(1, max_n + 1)], ("n", "value")
    if target == "P_phi":
        if max_n < 3:
            return {"max_n": max_n}, [], ("k", "value")
        t = build_totient_table(max_n)
        return {"max_n": max_n}, [{"k": k, "value": half_totient(t, k)} for k in range(3, max_n + 1)], ("k", "value")
    # S
    r = _need(args, "r")
    if r < 1:
        raise UsageError("--r must be >= 1")
    if args.n is not None and args.n_range is not None:
        raise UsageError("give only one of --n and --n-range")
    if args.n is not None:
        n_lo = n_hi = args.n
    elif args.n_range is not None:
        n_lo, n_hi = args.n_range
    else:
        raise UsageError("compute S requires --n or --n-range")
    if n_lo < 0 or n_lo > n_hi:
        raise UsageError(f"bad n range {n_lo}..{n_hi}")
    k_lo, k_hi = args.k_range if args.k_range is not None else (r, n_hi)
    if k_lo < r:
        raise UsageError(f"S^(r)_(n,k) needs k >= r; got k={k_lo} < r={r}")
    if k_lo > k_hi:
        raise UsageError(f"bad k range {k_lo}..{k_hi}")
    table = build_partition_table(r, n_hi)
    rows = [
        {"n": n, "k": k, "value": part_count_S(table, n, k)}
        for n in range(n_lo, n_hi + 1)
        for k in range(k_lo, k_hi + 1)
    ]
    params = {"r": r, "n_range": f"{n_lo}..{n_hi}", "k_range": f"{k_lo}..{k_hi}"}
    return params, rows, ("n", "k", "value")


def cmd_compute(args) -> int:
    params, rows, columns = compute_rows(args)
    params = {"target": args.target, **params}
    emit(output_record("compute", params, rows, "n/a", columns), args.format, args.out)
    return EXIT_OK


# -- verify ----------------------------------------------------------------

def report_row(report: identities.IdentityReport) -> dict:
    f = report.first_failure
    return {
        "identity": report.identity_name,
        "detail": ";".join(f"{k}={v}" for k, v in report.notes.items()),
        "range_lo": report.range_checked[0],
        "range_hi": report.range_checked[1],
        "status": report.status,
        "failure_n": f.n if f else None,
        "failure_lhs": f.lhs if f else None,
        "failure_rhs": f.rhs if f else None,
    }


def chain_rows(chain: qseries.ChainReport) -> list[dict]:
    rows = []
    for c in chain.checks:
        m = c.mismatch
        rows.append({
            "identity": f"qseries-{chain.name}",
            "detail": c.label,
            "range_lo": 0,
            "range_hi": c.order,
            "status": "pass" if c.passed else "fail",
            "failure_n": m[0] if m else None,
            "failure_lhs": m[1] if m else None,
            "failure_rhs": m[2] if m else None,
        })
    return rows


def run_verifications(target: str, max_n: int, oracle_max_n: int, seed: int) -> list[dict]:
    wanted = VERIFY_TARGETS[:-1] if target == "all" else (target,)
    rows: list[dict] = []
    add = lambda rep: rows.append(report_row(rep))  # noqa: E731
    for name in wanted:
        if name == "stanley":
            add(identities.verify_stanley(oracle_max_n))
        elif name == "theorem2":
            add(identities.verify_theorem2(max_n, "formula"))
            add(identities.verify_theorem2(oracle_max_n, "oracle"))
        elif name == "theorem3":
            add(identities.verify_theorem3(max_n, "formula"))
            add(identities.verify_theorem3(oracle_max_n, "oracle"))
        elif name == "interchange":
            add(identities.verify_interchange_random(seed))
            add(identities.verify_interchange_phi_p2(max_n))
        elif name == "weighted-form":
            add(identities.verify_weighted_form(oracle_max_n))
        elif name == "euler-divisor-sum":
            add(identities.verify_euler_divisor_sum(max_n))
        elif name == "lambert":
            add(identities.verify_lambert(max_n))
        elif name == "qseries-chains":
            rows.extend(chain_rows(qseries.replay_theorem2_chain(max_n)))
            rows.extend(chain_rows(qseries.replay_theorem3_chain(max_n)))
    return rows


def cmd_verify(args) -> int:
    if args.max_n < 3:
        raise UsageError("--max-n must be >= 3")
    if args.oracle_max_n < 2:
        raise UsageError("--oracle-max-n must be >= 2")
    rows = run_verifications(args.identity, args.max_n, args.oracle_max_n, args.seed)
    ok = all(r["status"] == "pass" for r in rows)
    params = {"identity": args.identity, "max_n": args.max_n, "oracle_max_n": args.oracle_max_n, "seed": args.seed}
    emit(output_record("verify", params, rows, "pass" if ok else "fail", REPORT_COLUMNS), args.format, args.out)
    return EXIT_OK if ok else EXIT_FAIL


# -- bench -----------------------------------------------------------------

def bench_phases(max_n: int):
    """(phase, size, thunk) triples; sizes of 0 give empty-range timings."""
    order = min(max_n, 200)
    return [
        ("totient_sieve", max_n, lambda: build_totient_table(max_n) if max_n >= 1 else None),
        ("partition_pentagonal", max_n, lambda: partition_count(max_n)),
        ("partition_dp_r1", max_n, lambda: build_partition_table(1, max_n)),
        ("partition_dp_r3", max_n, lambda: build_partition_table(3, max_n)),
        ("verify_theorem2_formula", max_n, lambda: max_n >= 1 and identities.verify_theorem2(max_n)),
        ("verify_theorem3_formula", max_n, lambda: identities.verify_theorem3(max_n)),
        ("replay_theorem2_chain", order, lambda: order >= 2 and qseries.replay_theorem2_chain(order)),
        ("replay_theorem3_chain", order, lambda: order >= 3 and qseries.replay_theorem3_chain(order)),
    ]


def cmd_bench(args) -> int:
    if args.max_n < 0 or args.reps < 1:
        raise UsageError("--max-n must be >= 0 and --reps >= 1")
    rows = []
    for phase, size, thunk in bench_phases(args.max_n):
        times = []
        for _ in range(args.reps):
            t0 = time.perf_counter()
            thunk()
            times.append(time.perf_counter() - t0)
        rows.append({
            "phase": phase,
            "size": size,
            "reps": args.reps,
            "best_seconds": f"{min(times):.6f}",
            "mean_seconds": f"{sum(times) / len(times):.6f}",
        })
    emit(output_record("bench", {"max_n": args.max_n, "reps": args.reps}, rows, "n/a"), args.format, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partotient",
        description="Partition and totient tables, identity verification, timings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", metavar="PATH", help="write payload here instead of stdout")

    pc = sub.add_parser("compute", help="tabulate p, p_r, phi, S or P_phi")
    pc.add_argument("target", choices=COMPUTE_TARGETS)
    pc.add_argument("--max-n", type=int)
    pc.add_argument("--r", type=int)
    pc.add_argument("--n", type=int)
    pc.add_argument("--n-range", type=parse_range)
    pc.add_argument("--k-range", type=parse_range)
    common(pc)
    pc.set_defaults(func=cmd_compute)

    pv = sub.add_parser("verify", help="check identities over a range")
    pv.add_argument("identity", choices=VERIFY_TARGETS)
    pv.add_argument("--max-n", type=int, default=100)
    pv.add_argument("--oracle-max-n", type=int, default=25)
    pv.add_argument("--seed", type=int, default=0)
    common(pv)
    pv.set_defaults(func=cmd_verify)

    pb = sub.add_parser("bench", help="time table builds and verification sweeps")
    pb.add_argument("--max-n", type=int, default=1000)
    pb.add_argument("--reps", type=int, default=1)
    common(pb)
    pb.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"{parser.prog} {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"{parser.prog} {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
