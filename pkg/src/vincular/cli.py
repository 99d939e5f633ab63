"""Command line front end.

Subcommands: ``count`` for the counting sequence by several methods,
``generate`` for the avoiders themselves, ``triangle`` for csv dumps of
the refinement triangles, ``tree`` for dot or json exports of the
generating tree, and ``verify`` to run the consistency suites.  Output is
deterministic; caps that protect against runaway enumerations can be
lifted with ``--force``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import brute, counting, gentree
from .blocks import PATTERN
from .eco import expand, reduce
from .perms import parse_dashed_pattern

# Enumerating levels much past this takes minutes and gigabytes of text.
GENERATE_CAP = 11
CENSUS_CAP = 9


def _cmd_count(args: argparse.Namespace) -> int:
    pattern = parse_dashed_pattern(args.pattern)
    if args.method == "recurrence":
        if pattern == PATTERN:
            values = counting.avoider_counts(args.n)
        elif pattern == counting.PATTERN_3142:
            values = counting.callan_3142(args.n)
        else:
            raise ValueError(f"no recurrence known for {pattern}; use --method brute")
    elif args.method == "tree":
        if pattern != PATTERN:
            raise ValueError(f"the tree construction is specific to {PATTERN}")
        if args.n > GENERATE_CAP and not args.force:
            raise ValueError(f"tree counting past n={GENERATE_CAP} needs --force")
        values = [1] + [
            len(gentree.generate_level(n, workers=args.threads)) for n in range(1, args.n + 1)
        ]
    elif args.method == "brute":
        values = [
            len(brute.brute_avoiders(pattern, n, workers=args.threads, force=args.force))
            for n in range(args.n + 1)
        ]
    else:
        if pattern != PATTERN:
            raise ValueError(f"the continued fraction is specific to {PATTERN}")
        comparison = counting.compare_cfrac_with_counts(args.n)
        if comparison.first_mismatch is not None:
            print(f"warning: {comparison}", file=sys.stderr)
        values = list(comparison.series)
    for value in values:
        print(value)
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    if args.n > GENERATE_CAP and not args.force:
        raise ValueError(f"generating past n={GENERATE_CAP} needs --force")
    level = gentree.generate_level(args.n, workers=args.threads)
    if args.format == "lines":
        for word in level:
            print(" ".join(str(v) for v in word))
    else:
        print(json.dumps([list(word) for word in level]))
    return 0


def _cmd_triangle(args: argparse.Namespace) -> int:
    if args.which == "u":
        sys.stdout.write(counting.u_triangle(args.n).to_csv())
    elif args.which == "v":
        sys.stdout.write(counting.v_triangle(args.n).to_csv())
    else:
        if args.n > CENSUS_CAP and not args.force:
            raise ValueError(f"brute census past n={CENSUS_CAP} needs --force")
        lines = ["n,k,value"]
        for n in range(1, args.n + 1):
            row = brute.brute_census(PATTERN, n, force=args.force)
            lines.extend(f"{n},{k},{v}" for k, v in row.items())
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_tree(args: argparse.Namespace) -> int:
    sys.stdout.write(gentree.export_tree(args.n, args.format, force=args.force))
    return 0


def _verify_eco(n_max: int, workers: int) -> tuple[bool, str]:
    diff = brute.oracle_diff(n_max, workers=workers)
    if not diff.ok:
        return False, str(diff)
    for n in range(1, n_max):
        for parent in gentree.generate_level(n, workers=workers):
            for _, child in expand(parent):
                if reduce(child) != parent:
                    return False, f"reduce({child}) is not {parent}"
    return True, f"{diff}; reduce inverts expand through length {n_max}"


def _cmd_verify(args: argparse.Namespace) -> int:
    wanted = ("eco", "labelling", "series", "pde") if args.suite == "all" else (args.suite,)
    results: dict[str, dict[str, object]] = {}
    for suite in wanted:
        if suite == "eco":
            ok, detail = _verify_eco(args.n, args.threads)
        elif suite == "labelling":
            report = gentree.verify_labelling(args.n)
            ok, detail = report.ok, str(report)
        elif suite == "series":
            fe = counting.check_functional_equation(args.n)
            cf = counting.compare_cfrac_with_counts(args.n)
            ok = fe.ok
            detail = f"functional equation: {fe}; note: {cf}"
        else:
            report_pde = counting.check_pde(args.n)
            ok, detail = report_pde.ok, str(report_pde)
        results[suite] = {"ok": ok, "detail": detail}
    all_ok = all(bool(r["ok"]) for r in results.values())
    if args.json:
        print(json.dumps({"n": args.n, "ok": all_ok, "suites": results}, indent=2))
    else:
        for suite, r in results.items():
            print(f"{suite}: {'ok' if r['ok'] else 'FAIL'} ({r['detail']})")
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vincular",
        description="Generating tree, recurrences and checks for 1-32-4 avoiding permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="print the counting sequence for lengths 0..n")
    count.add_argument("--pattern", default="1-32-4")
    count.add_argument("--n", type=int, required=True)
    count.add_argument(
        "--method", choices=("tree", "recurrence", "brute", "cfrac"), default="recurrence"
    )
    count.add_argument("--threads", type=int, default=1)
    count.add_argument("--force", action="store_true", help="lift the size caps")
    count.set_defaults(func=_cmd_count)

    generate = sub.add_parser("generate", help="print all avoiders of length n in tree order")
    generate.add_argument("--n", type=int, required=True)
    generate.add_argument("--format", choices=("lines", "json"), default="lines")
    generate.add_argument("--threads", type=int, default=1)
    generate.add_argument("--force", action="store_true", help="lift the size caps")
    generate.set_defaults(func=_cmd_generate)

    triangle = sub.add_parser("triangle", help="csv dump of a refinement triangle")
    triangle.add_argument("--which", choices=("u", "v", "census"), required=True)
    triangle.add_argument("--n", type=int, required=True)
    triangle.add_argument("--force", action="store_true", help="lift the size caps")
    triangle.set_defaults(func=_cmd_triangle)

    tree = sub.add_parser("tree", help="export the generating tree")
    tree.add_argument("--n", type=int, required=True)
    tree.add_argument("--format", choices=("dot", "json"), default="dot")
    tree.add_argument("--force", action="store_true", help="lift the size caps")
    tree.set_defaults(func=_cmd_tree)

    verify = sub.add_parser("verify", help="run consistency suites; exit 0 only if all pass")
    verify.add_argument(
        "--suite", choices=("eco", "labelling", "series", "pde", "all"), default="all"
    )
    verify.add_argument("--n", type=int, default=6)
    verify.add_argument("--threads", type=int, default=1)
    verify.add_argument("--json", action="store_true", help="machine readable report")
    verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
