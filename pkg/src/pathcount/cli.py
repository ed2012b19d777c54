"""Command-line front end.

Subcommands: count, enumerate, symbolic, verify, probability, bench.
Exit codes: 0 success, 1 failed check/disagreement, 2 usage or parse error,
3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction
from itertools import combinations_with_replacement

from . import counting, identities
from .counting import (
    DEFAULT_THEOREM_CAP,
    ENGINES,
    CapacityError,
    count,
    count_recurrence,
    dp_oracle,
    enumerate_restricted,
    macmahon_bruteforce,
    macmahon_total,
)
from .exactmath import binom
from .paths import Heights, delta, format_heights, parse_path_spec
from .symbolic import expand, serialize, symbolic_lp, verify_det_identity

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

ENUMERATE_CAP = 100_000
BENCH_SIZES = (20, 50, 100, 200)
BENCH_ENGINES = ("determinant", "triangular", "recurrence")
VERIFY_SUITES = (
    "cross-engine",
    "macmahon",
    "lemma",
    "vandermonde",
    "children",
    "det-identity",
    "eq3",
)


class UsageError(Exception):
    """Bad command input: unparsable path spec, unknown suite, bad endpoint."""


def _parse_path(spec: str) -> Heights:
    try:
        return parse_path_spec(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_count(args) -> int:
    p = _parse_path(args.path)
    engines = ENGINES if args.engine == "all" else (args.engine,)
    results = {}
    for engine in engines:
        if args.engine == "all" and engine == "theorem" and len(p) > args.theorem_cap:
            print(
                f"note: theorem engine skipped (n = {len(p)} is over the cap {args.theorem_cap})",
                file=sys.stderr,
            )
            continue
        results[engine] = count(p, engine, theorem_cap=args.theorem_cap)
    for engine, value in results.items():
        if args.format == "json":
            print(json.dumps({"path": {"heights": list(p)}, "engine": engine, "count": str(value)}))
        elif args.engine == "all":
            print(f"{engine} {value}")
        else:
            print(value)
    if len(set(results.values())) > 1:
        print("error: engines disagree", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def cmd_enumerate(args) -> int:
    p = _parse_path(args.path)
    total = count_recurrence(delta(p))
    if args.count_only:
        print(total)
        return EXIT_OK
    if total > ENUMERATE_CAP:
        raise CapacityError(
            f"{total} paths is over the output cap {ENUMERATE_CAP}; use --count-only"
        )
    for q in enumerate_restricted(p):
        if args.format == "json":
            print(json.dumps({"heights": list(q)}))
        else:
            print(format_heights(q))
    return EXIT_OK


def cmd_symbolic(args) -> int:
    poly = symbolic_lp(args.n, cap=args.theorem_cap)
    if args.count_terms:
        print(len(poly.terms))
        return EXIT_OK
    if args.expand:
        mono = expand(poly)
        if args.format == "json":
            terms = [
                {"coeff": f"{c.numerator}/{c.denominator}", "exponents": list(e)}
                for e, c in sorted(mono.coeffs.items())
            ]
            print(json.dumps({"nvars": mono.nvars, "basis": "monomial", "terms": terms}))
        else:
            print(serialize(mono))
        return EXIT_OK
    if args.format == "json":
        terms = [
            {"coeff": f"{t.coeff.numerator}/{t.coeff.denominator}", "exponents": list(t.exponents)}
            for t in poly.terms
        ]
        print(json.dumps({"nvars": poly.nvars, "basis": "rising-factorial", "terms": terms}))
    else:
        print(serialize(poly))
    return EXIT_OK


def _suite_cross_engine(seed: int, theorem_cap: int) -> tuple[bool, str]:
    checked = 0
    for n in range(6):
        for p in combinations_with_replacement(range(6), n):
            values = {engine: count(p, engine, theorem_cap=theorem_cap) for engine in ENGINES}
            checked += 1
            if len(set(values.values())) > 1:
                return False, f"p={p}: {values}"
    rng = random.Random(seed)
    for _ in range(60):
        n = rng.randint(0, 9)
        p = tuple(sorted(rng.randint(0, 40) for _ in range(n)))
        values = {engine: count(p, engine, theorem_cap=theorem_cap) for engine in ENGINES}
        checked += 1
        if len(set(values.values())) > 1:
            return False, f"p={p}: {values}"
    return True, f"{checked} paths agree across all engines"


def _suite_macmahon(seed: int, theorem_cap: int) -> tuple[bool, str]:
    for n in range(6):
        for m in range(6):
            got = macmahon_bruteforce(n, m)
            want = macmahon_total(n, m)
            if got != want:
                return False, f"n={n} m={m}: brute force {got} != closed form {want}"
    return True, "aggregate matches the closed form for all endpoints up to (5, 5)"


def _suite_lemma(seed: int, theorem_cap: int) -> tuple[bool, str]:
    bad = identities.check_lemma(20) + identities.check_telescoping(20)
    if bad:
        return False, bad[0]
    return True, "9261 triples agree (both sides, closed form, telescoping)"


def _suite_vandermonde(seed: int, theorem_cap: int) -> tuple[bool, str]:
    bad = identities.check_vandermonde(20)
    if bad:
        return False, bad[0]
    return True, "all d, e <= 20 with f <= e + 1 agree"


def _suite_children(seed: int, theorem_cap: int) -> tuple[bool, str]:
    bad = identities.check_children_partition(8) + identities.check_parent_child_box(6, 6)
    if bad:
        return False, bad[0]
    return True, "children tile every polytope up to n = 8 and parent inverts them"


def _suite_det_identity(seed: int, theorem_cap: int) -> tuple[bool, str]:
    for n in range(7):
        if not verify_det_identity(n, 100, seed=seed * 31 + n):
            return False, f"determinant identity failed at n = {n}"
    return True, "determinant equals the rising-factorial sum at 100 random points per n <= 6"


def _suite_eq3(seed: int, theorem_cap: int) -> tuple[bool, str]:
    bad = identities.check_eq3(6)
    if bad:
        return False, bad[0]
    return True, "two-coordinate reduction agrees for all v1, v2, y <= 6"


_SUITE_RUNNERS = {
    "cross-engine": _suite_cross_engine,
    "macmahon": _suite_macmahon,
    "lemma": _suite_lemma,
    "vandermonde": _suite_vandermonde,
    "children": _suite_children,
    "det-identity": _suite_det_identity,
    "eq3": _suite_eq3,
}


def cmd_verify(args) -> int:
    if args.suite == "all":
        names = VERIFY_SUITES
    elif args.suite in _SUITE_RUNNERS:
        names = (args.suite,)
    else:
        raise UsageError(
            f"unknown suite {args.suite!r}; expected one of: all, {', '.join(VERIFY_SUITES)}"
        )
    all_passed = True
    for name in names:
        passed, detail = _SUITE_RUNNERS[name](args.seed, args.theorem_cap)
        all_passed = all_passed and passed
        if args.format == "json":
            print(json.dumps({"suite": name, "passed": passed, "detail": detail}))
        else:
            print(f"{name}: {'pass' if passed else 'FAIL'} ({detail})")
    return EXIT_OK if all_passed else EXIT_FAILED


def cmd_probability(args) -> int:
    p = _parse_path(args.path)
    n, m = args.n, args.m
    if n < 0 or m < 0:
        raise UsageError(f"endpoint ({n}, {m}) has a negative coordinate")
    if len(p) != n or (p and p[-1] > m):
        raise UsageError(
            f"path {format_heights(p)} is inconsistent with endpoint ({n}, {m})"
        )
    favorable = dp_oracle(p)
    probability = Fraction(favorable, binom(n + m, n))
    if args.format == "json":
        print(
            json.dumps(
                {
                    "path": {"heights": list(p)},
                    "n": n,
                    "m": m,
                    "favorable": str(favorable),
                    "total": str(binom(n + m, n)),
                    "probability": f"{probability.numerator}/{probability.denominator}",
                }
            )
        )
    else:
        print(probability)
    return EXIT_OK


def cmd_bench(args) -> int:
    rng = random.Random(args.seed)
    rows = []
    for n in BENCH_SIZES:
        p = tuple(sorted(rng.randint(0, n) for _ in range(n)))
        for engine in BENCH_ENGINES:
            start = time.perf_counter()
            value = count(p, engine)
            elapsed = time.perf_counter() - start
            rows.append(
                {"n": n, "engine": engine, "seconds": round(elapsed, 6), "result_bits": value.bit_length()}
            )
        if n > args.theorem_cap:
            rows.append({"n": n, "engine": "theorem", "status": f"refused (over cap {args.theorem_cap})"})
        else:
            start = time.perf_counter()
            value = count(p, "theorem", theorem_cap=args.theorem_cap)
            elapsed = time.perf_counter() - start
            rows.append(
                {"n": n, "engine": "theorem", "seconds": round(elapsed, 6), "result_bits": value.bit_length()}
            )
    if args.format == "json":
        print(json.dumps(rows))
    else:
        for row in rows:
            if "status" in row:
                print(f"n={row['n']:>4}  {row['engine']:<12} {row['status']}")
            else:
                print(
                    f"n={row['n']:>4}  {row['engine']:<12} {row['seconds']:>10.4f}s"
                    f"  {row['result_bits']} bits"
                )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathcount",
        description="Exact counting of northeast lattice paths below a bounding path.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, seed=False):
        sp.add_argument("--format", choices=("plain", "json"), default="plain")
        sp.add_argument("--theorem-cap", type=int, default=DEFAULT_THEOREM_CAP, dest="theorem_cap")
        if seed:
            sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("count", help="count paths below a path spec (w:/h:/d:)")
    sp.add_argument("path")
    sp.add_argument("--engine", choices=ENGINES + ("all",), default="all")
    add_common(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("enumerate", help="list every path below a path spec")
    sp.add_argument("path")
    sp.add_argument("--count-only", action="store_true", dest="count_only")
    add_common(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("symbolic", help="rising-factorial count polynomial in n variables")
    sp.add_argument("n", type=int)
    sp.add_argument("--expand", action="store_true")
    sp.add_argument("--count-terms", action="store_true", dest="count_terms")
    add_common(sp)
    sp.set_defaults(func=cmd_symbolic)

    sp = sub.add_parser("verify", help="run the consistency suites")
    sp.add_argument("suite", nargs="?", default="all")
    add_common(sp, seed=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("probability", help="chance a uniform path to (n, m) stays below the given path")
    sp.add_argument("path")
    sp.add_argument("n", type=int)
    sp.add_argument("m", type=int)
    add_common(sp)
    sp.set_defaults(func=cmd_probability)

    sp = sub.add_parser("bench", help="time the scalable engines on random paths")
    add_common(sp, seed=True)
    sp.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
