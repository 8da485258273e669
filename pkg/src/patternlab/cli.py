"""Command-line front end.

One binary with subcommands for enumeration, counting tables, the counting
triangles, weight polynomials, the growth algorithms, the invcode map,
generating trees and claim verification.  All numeric output is exact;
polynomials are serialized as coefficient arrays, lowest degree first.
JSON output is byte-deterministic: keys are sorted and wall-clock timing is
never included.

Exit codes: 0 success, 1 at least one claim failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import bijections, growth, numbers, stats, verify
from .errors import PatternLabError
from .patterns import filter_avoiding
from .seqcore import (
    ClassId,
    format_sequence,
    format_sequence_auto,
    parse_permutation,
    parse_sequence,
)

_CLASS_NAMES = {c.value: c for c in ClassId}


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


# ---------------------------------------------------------------------------
# subcommands

def _cmd_enumerate(args) -> int:
    class_id = _CLASS_NAMES[args.class_name]
    pats = list(args.avoid)
    stat_ids = [s for s in (args.stats.split(",") if args.stats else []) if s]
    fns = [stats.stat_function(s, class_id.kind) for s in stat_ids]
    objects = filter_avoiding(class_id, args.n, pats)
    rows = [
        [format_sequence(w, "comma")] + [fn(w) for fn in fns] for w in objects
    ]
    if args.format == "json":
        _emit_json(
            [
                {"object": list(w), **{s: fn(w) for s, fn in zip(stat_ids, fns)}}
                for w in objects
            ]
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["object", *stat_ids])
        writer.writerows(rows)
    else:
        for w, row in zip(objects, rows):
            extras = "  ".join(f"{s}={v}" for s, v in zip(stat_ids, row[1:]))
            print(f"{format_sequence_auto(w)}  {extras}".rstrip())
    return 0


def _cmd_count_table(args) -> int:
    class_id = _CLASS_NAMES[args.class_name]
    pats = list(args.avoid)
    by = args.by
    fn = stats.stat_function(by, class_id.kind) if by else None
    table = []
    for n in range(1, args.n_max + 1):
        objects = filter_avoiding(class_id, n, pats)
        if fn is None:
            table.append({"n": n, "count": len(objects)})
        else:
            counts: dict[int, int] = {}
            for w in objects:
                v = fn(w)
                counts[v] = counts.get(v, 0) + 1
            table.append(
                {"n": n, "count": len(objects), "by": {str(k): counts[k] for k in sorted(counts)}}
            )
    if args.format == "json":
        _emit_json(table)
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        if fn is None:
            writer.writerow(["n", "count"])
            writer.writerows([[r["n"], r["count"]] for r in table])
        else:
            writer.writerow(["n", by, "count"])
            for r in table:
                for k, v in r["by"].items():
                    writer.writerow([r["n"], k, v])
    else:
        for r in table:
            line = f"n={r['n']}: {r['count']}"
            if fn is not None:
                line += "  " + " ".join(f"{by}={k}:{v}" for k, v in r["by"].items())
            print(line)
    return 0


def _cmd_triangle(args) -> int:
    tri = (
        numbers.c_triangle(args.n_max)
        if args.name == "cnk"
        else numbers.t_triangle(args.n_max)
    )
    if args.format == "json":
        _emit_json({"name": tri.name, "k_start": tri.k_start, "rows": [list(r) for r in tri.rows]})
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["n", "k", "value"])
        for n, row in enumerate(tri.rows, start=1):
            for k, v in enumerate(row, start=tri.k_start):
                writer.writerow([n, k, v])
    else:
        for n, row in enumerate(tri.rows, start=1):
            print(f"n={n}: {' '.join(str(v) for v in row)}")
    return 0


def _cmd_poly(args) -> int:
    fn = numbers.f_poly_recursive if args.recursive else numbers.f_poly
    p = fn(args.k, args.i)
    if args.format == "json":
        _emit_json({"k": args.k, "i": args.i, "coefficients": p.coefficients()})
    else:
        print(f"f({args.k},{args.i}) = {p}   coefficients {p.coefficients()}")
    return 0


def _cmd_aztec_check(args) -> int:
    report = verify.verify_claim("aztec", args.k_max)
    for k in range(args.k_max + 1):
        print(f"k={k}: rhs {numbers.aztec_rhs(k)}")
    print(f"aztec identity up to k={args.k_max}: {'PASS' if report.passed else 'FAIL'}")
    if report.witness:
        print(f"  witness: {report.witness}")
    return 0 if report.passed else 1


def _cmd_grow(args) -> int:
    e = parse_sequence(args.input)
    children = growth.grow(e)
    for case, child in children:
        print(f"e^{case.tag} = {format_sequence_auto(child)}")
    if args.trace:
        zeros, blocks = growth.decompose_zero_blocks(e)
        print(f"zeros at {','.join(map(str, zeros))}; blocks "
              + " | ".join(format_sequence_auto(b) or "-" for b in blocks))
    return 0


def _cmd_bs(args) -> int:
    e = parse_sequence(args.input)
    trace: list | None = [] if args.trace else None
    out = growth.backward_shift(e, args.m, args.j, trace=trace)
    if trace:
        for snap, lo, hi in trace:
            print(f"  -> {format_sequence_auto(snap)}   (moved {lo}..{hi})")
    print(format_sequence_auto(out))
    return 0


def _cmd_fs(args) -> int:
    e = parse_sequence(args.input)
    trace: list | None = [] if args.trace else None
    out = growth.forward_shift(e, trace=trace)
    if trace:
        for snap, lo, hi in trace:
            print(f"  -> {format_sequence_auto(snap)}   (moved {lo}..{hi})")
    print(format_sequence_auto(out))
    return 0


def _cmd_invcode(args) -> int:
    if args.inverse:
        if not args.seq:
            raise PatternLabError("--inverse needs --seq")
        e = parse_sequence(args.seq)
        print(format_sequence(bijections.invcode_inverse(e), "comma"))
    else:
        if not args.perm:
            raise PatternLabError("invcode needs --perm (or --inverse with --seq)")
        pi = parse_permutation(args.perm)
        print(format_sequence(bijections.invcode(pi), "comma"))
    return 0


def _cmd_tree(args) -> int:
    levels = growth.tree_levels(args.rule, args.n_max)
    if args.format == "json":
        _emit_json(
            [
                {
                    "level": n,
                    "size": sum(d.values()),
                    "labels": {str(k): v for k, v in sorted(d.items())},
                }
                for n, d in enumerate(levels, start=1)
            ]
        )
    else:
        for n, d in enumerate(levels, start=1):
            labels = " ".join(f"{k}:{v}" for k, v in sorted(d.items()))
            print(f"level {n} (size {sum(d.values())}): {labels}")
    return 0


def _report_text(report) -> str:
    head = f"{report.claim_id} [{report.status}] n=1..{report.n_range[1]}: "
    head += "PASS" if report.passed else f"FAIL ({report.witness})"
    return head + f"  [{report.elapsed:.2f}s]"


def _cmd_verify(args) -> int:
    if not args.all and not args.claim:
        raise PatternLabError("verify needs --claim <id> or --all")
    if args.all:
        reports = verify.verify_all()
    else:
        reports = [verify.verify_claim(args.claim, args.n_max)]
    if args.format == "json":
        _emit_json([r.to_json_dict() for r in reports])
    else:
        for r in reports:
            print(_report_text(r))
    return 0 if all(r.passed for r in reports) else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="patternlab",
        description="enumerate pattern-avoiding sequences and verify their counting identities",
    )
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker count for enumeration fan-out (results never depend on it)")
    parser.add_argument("--seed", type=int, default=0,
                        help="accepted for interface stability; output never depends on it")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list class members, optionally filtered and annotated")
    p.add_argument("--class", dest="class_name", choices=sorted(_CLASS_NAMES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--avoid", action="append", default=[], help="pattern to avoid, e.g. '[12]0'")
    p.add_argument("--stats", default="", help="comma-separated statistic names")
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("count-table", help="counts by length, optionally refined by a statistic")
    p.add_argument("--class", dest="class_name", choices=sorted(_CLASS_NAMES), required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--avoid", action="append", default=[])
    p.add_argument("--by", default=None, help="statistic to refine by")
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=_cmd_count_table)

    p = sub.add_parser("triangle", help="print a counting triangle")
    p.add_argument("--name", choices=["cnk", "Tnk"], required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=_cmd_triangle)

    p = sub.add_parser("poly", help="weight enumerator polynomial for (k, i)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--recursive", action="store_true", help="compute by the recursion")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("aztec-check", help="check the weight enumerator identity per ascent count")
    p.add_argument("--k-max", type=int, default=4)
    p.set_defaults(func=_cmd_aztec_check)

    p = sub.add_parser("grow", help="all children of an avoiding inversion sequence")
    p.add_argument("--input", required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_grow)

    p = sub.add_parser("bs", help="backward shift")
    p.add_argument("--input", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_bs)

    p = sub.add_parser("fs", help="forward shift")
    p.add_argument("--input", required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_fs)

    p = sub.add_parser("invcode", help="invcode of a permutation, or its inverse")
    p.add_argument("--perm", help="one-line notation, e.g. '2,4,1,3'")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--seq", help="inversion sequence for --inverse")
    p.set_defaults(func=_cmd_invcode)

    p = sub.add_parser("tree", help="generating tree label counts per level")
    p.add_argument("--rule", choices=["pcat", "pq120"], required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_tree)

    p = sub.add_parser("verify", help="run claim drivers")
    p.add_argument("--claim", help="claim id; see --list")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--all", action="store_true", help="run every claim at its default bound")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("claims", help="list claim ids with descriptions")
    p.set_defaults(func=_cmd_claims)
    return parser


def _cmd_claims(args) -> int:
    for spec in verify.CLAIMS.values():
        print(f"{spec.claim_id:22s} [{spec.status}] default n={spec.default_n}: {spec.description}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PatternLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
