"""Command-line interface: counting, table emission, property suites,
conjecture sweeps, and step tracing.

Exit codes: 0 success, 1 budget exceeded or verification failure, 2 bad
arguments.  Counts are cached as newline-delimited JSON under the directory
named by ALTPERM_CACHE (default ./.altperm-cache).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .perms import parse_class, parse_perm
from .enumeration import (
    AvoidanceQuery,
    BudgetExceeded,
    count_avoiders,
    count_avoiders_parallel,
)
from .diagrams import parse_ad, is_valid_transversal
from .bijection import J3, phi_to_fixpoint, psi_to_fixpoint
from .cache import CountCache
from .equivalence import check_conjecture
from .tables import TABLES, TABLE_CLASS
from .verify import run_suite


def cmd_count(args: argparse.Namespace) -> int:
    try:
        pattern = parse_perm(args.pattern)
        cls = parse_class(args.cls)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    cache = CountCache()
    cached = cache.get(pattern, cls, args.n)
    t0 = time.perf_counter()
    if cached is not None and not args.verify:
        count, was_cached = cached, True
    else:
        query = AvoidanceQuery(pattern, cls, args.n)
        try:
            if args.jobs > 1:
                result = count_avoiders_parallel(query, args.jobs)
            else:
                result = count_avoiders(query, budget=args.budget)
        except BudgetExceeded as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        count, was_cached = result.count, False
        if cached is not None and cached != count:
            print(
                f"error: cache held {cached} but recomputation gives {count}",
                file=sys.stderr,
            )
            return 1
        cache.put(pattern, cls, args.n, count)
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    if args.json:
        print(
            json.dumps(
                {
                    "query": {"pattern": args.pattern, "class": cls.label(), "n": args.n},
                    "count": count,
                    "elapsed_ms": round(elapsed_ms, 3),
                    "cached": was_cached,
                }
            )
        )
    else:
        print(count)
    return 0


def cmd_tables(args: argparse.Namespace) -> int:
    rows = TABLES[args.which]
    cls = parse_class(TABLE_CLASS[args.which])
    cache = CountCache()
    ns = [n for n in sorted(rows[0].counts) if n <= args.max_n]
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow(["patterns", *ns])
    deadline = time.perf_counter() + args.budget if args.budget else None
    for row in rows:
        record = [row.label]
        for n in ns:
            pattern = row.patterns[0]
            hit = cache.get(pattern, cls, n)
            if hit is None:
                if deadline is not None and time.perf_counter() > deadline:
                    print("error: budget exceeded", file=sys.stderr)
                    return 1
                hit = count_avoiders(AvoidanceQuery(pattern, cls, n)).count
                cache.put(pattern, cls, n, hit)
            record.append(hit)
        writer.writerow(record)
    sys.stdout.write(out.getvalue())
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    kwargs = {}
    if args.suite in ("shape2",):
        kwargs["rows"] = args.rows or 6
    elif args.suite in ("bijection",):
        kwargs["rows"] = args.rows or 6
    elif args.suite in ("eboard",):
        kwargs["rows"] = args.rows or 5
    elif args.suite in ("extension",):
        kwargs["rows"] = args.rows or 5
    elif args.suite == "doubling":
        kwargs["k_max"] = args.k or 6
    elif args.suite == "injections":
        kwargs["n_max"] = args.n or 8
    results = run_suite(args.suite, **kwargs)
    bad = 0
    for r in results:
        if r.ok:
            print(f"PASS {r.name}")
        else:
            bad += 1
            print(f"FAIL {r.name}: {r.detail}")
    return 1 if bad else 0


def cmd_conjecture(args: argparse.Namespace) -> int:
    cache = CountCache()
    try:
        verdict = check_conjecture(
            args.which,
            k_max=args.k,
            rows_max=args.rows,
            n_max=args.n,
            cache=cache,
            budget=args.budget,
        )
    except TimeoutError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 1
    if verdict.ok:
        print(f"no counterexample ({verdict.conjecture}, {verdict.swept})")
        return 0
    print(f"counterexample: {verdict.counterexample}")
    return 1


def cmd_trace(args: argparse.Namespace) -> int:
    try:
        ady = parse_ad(args.diagram)
        T = parse_perm(args.transversal)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not is_valid_transversal(ady, T):
        print("error: not a valid transversal of the triple", file=sys.stderr)
        return 2
    steps: list = []
    fix = psi_to_fixpoint if args.psi else phi_to_fixpoint
    final = fix(ady, T, check=True, trace=steps)
    for s in steps:
        print(
            f"{s.index} {s.direction} triple={s.triple} type={s.block_type} "
            f"{','.join(map(str, s.before))} -> {','.join(map(str, s.after))}"
        )
    print(f"fixpoint after {len(steps)} steps: {','.join(map(str, final))}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="altperm",
        description="Exact enumeration and bijection checks for pattern "
        "avoidance in alternating and descent-type permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count avoiders in a class")
    p_count.add_argument("--pattern", required=True)
    p_count.add_argument(
        "--class", dest="cls", default="all",
        help="all | alt | ralt | dk:K | dset:1,3 | aset:2",
    )
    p_count.add_argument("--n", type=int, required=True)
    p_count.add_argument("--json", action="store_true")
    p_count.add_argument("--jobs", type=int, default=1)
    p_count.add_argument("--budget", type=float, default=None, help="seconds")
    p_count.add_argument(
        "--verify", action="store_true",
        help="recompute even on a cache hit and compare",
    )
    p_count.set_defaults(func=cmd_count)

    p_tables = sub.add_parser("tables", help="emit a bundled table as CSV")
    p_tables.add_argument("which", choices=sorted(TABLES))
    p_tables.add_argument("--max-n", type=int, default=10, dest="max_n")
    p_tables.add_argument("--budget", type=float, default=None, help="seconds")
    p_tables.set_defaults(func=cmd_tables)

    p_verify = sub.add_parser("verify", help="run a property suite")
    p_verify.add_argument(
        "suite",
        choices=["bijection", "eboard", "extension", "doubling", "injections", "shape2"],
    )
    p_verify.add_argument("--rows", type=int, default=None)
    p_verify.add_argument("--k", type=int, default=None)
    p_verify.add_argument("--n", type=int, default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_conj = sub.add_parser("conjecture", help="sweep a conjecture")
    p_conj.add_argument(
        "which", choices=["sesa", "decreasing", "dk-2134", "dk-1243"]
    )
    p_conj.add_argument("--k", type=int, default=4)
    p_conj.add_argument("--rows", type=int, default=6)
    p_conj.add_argument("--n", type=int, default=9)
    p_conj.add_argument("--budget", type=float, default=None, help="seconds")
    p_conj.set_defaults(func=cmd_conjecture)

    p_trace = sub.add_parser("trace", help="print replacement steps")
    p_trace.add_argument("--diagram", required=True, help='e.g. "4,4,2,2;A=;D=3"')
    p_trace.add_argument("--transversal", required=True, help='e.g. "3412"')
    p_trace.add_argument(
        "--psi", action="store_true", help="trace the reverse direction"
    )
    p_trace.set_defaults(func=cmd_trace)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
