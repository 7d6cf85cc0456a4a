"""Command-line interface: ``polyq <command> ...``.

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

from .bending import LengthVector, complete_labeling, f_re, iter_labelings
from .geometry import realization_report
from .kaehler import kaehler_summary
from .notation import TreeSyntaxError, parse, serialize
from .trees import edge_key, enumerate_trivalent, internal_edges, parse_edge_key
from .verify import beta_table, verify_operad_axioms, verify_recurrence, verify_theorem


class UsageError(Exception):
    pass


def parse_lengths(text: str) -> list:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"--lengths must be comma-separated integers, got {text!r}") from None
    if not values:
        raise UsageError("--lengths is empty")
    return values


def _length_vector(tree, lengths) -> LengthVector:
    if len(lengths) != tree.n_leaves + 1:
        raise UsageError(f"tree {serialize(tree)} has {tree.n_leaves} leaves, so --lengths needs "
                         f"{tree.n_leaves + 1} entries (root first); got {len(lengths)}")
    return LengthVector.from_lengths(lengths)


def _emit(args, payload, rows=None, header=None):
    if args.csv and rows is not None:
        w = csv.writer(sys.stdout, lineterminator="\n")
        if header:
            w.writerow(header)
        w.writerows(rows)
    else:
        print(json.dumps(payload, indent=None if args.compact else 2, sort_keys=True))


def cmd_count_kahler(args) -> int:
    summary = kaehler_summary(parse_lengths(args.lengths))
    _emit(args, summary, rows=[[summary["dim_H0"], summary["smooth"], summary["nonempty"]]],
          header=["dim_H0", "smooth", "nonempty"])
    return 0


def cmd_count_bending(args) -> int:
    tree = parse(args.tree)
    lv = _length_vector(tree, parse_lengths(args.lengths))
    count = f_re(tree).eval(lv.d, lv.c)
    out = {"count": count, "internal_edges": len(internal_edges(tree))}
    _emit(args, out, rows=[[out["count"], out["internal_edges"]]], header=["count", "internal_edges"])
    return 0


def cmd_enumerate_trees(args) -> int:
    for tree in enumerate_trivalent(args.leaves):
        print(serialize(tree))
    return 0


def cmd_labelings(args) -> int:
    tree = parse(args.tree)
    lv = _length_vector(tree, parse_lengths(args.lengths))
    found = []
    for phi in iter_labelings(tree, lv):
        if args.limit is not None and len(found) >= args.limit:
            break
        found.append({edge_key(p): v for p, v in phi.items()})
    if args.csv:
        keys = list(found[0]) if found else []
        _emit(args, None, rows=[[phi[k] for k in keys] for phi in found], header=keys)
    else:
        _emit(args, found)
    return 0


def cmd_realize(args) -> int:
    tree = parse(args.tree)
    lv = _length_vector(tree, parse_lengths(args.lengths))
    try:
        with open(args.labeling) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read labeling file {args.labeling}: {exc}") from None
    if not isinstance(raw, dict):
        raise UsageError("labeling file must hold a JSON object {edge path: value}")
    phi = complete_labeling(tree, lv, {parse_edge_key(k): int(v) for k, v in raw.items()})
    _emit(args, realization_report(tree, lv, phi))
    return 0


def cmd_verify(args) -> int:
    reports = [verify_theorem(args.max_leaves, args.max_label)]
    if args.all:
        reports += [verify_operad_axioms(max_label=min(args.max_label, 3)), verify_recurrence(10)]
    payload = {
        "pass": all(r.passed for r in reports),
        "reports": [r.to_dict(timing=args.timing) for r in reports],
    }
    _emit(args, payload)
    return 0 if payload["pass"] else 1


def cmd_recurrence(args) -> int:
    if args.max_n < 3:
        raise UsageError("--max-n must be >= 3")
    header = ["n"] + [f"i={i}" for i in range(args.max_n + 1)]
    table = beta_table(args.max_n)
    if args.json:
        print(json.dumps({"beta": {str(row[0]): row[1:] for row in table}}, sort_keys=True))
    else:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(header)
        w.writerows(table)
    rep = verify_recurrence(max(args.max_n, 4))
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polyq", description=(
        "Count quantum states on spatial polygon spaces two ways and check they agree."))
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--csv", action="store_true", help="CSV instead of JSON where tabular")
    common.add_argument("--compact", action="store_true", help="single-line JSON")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("count-kahler", parents=[common], help="SO(3) multiplicity dim H^0")
    s.add_argument("--lengths", required=True, help="r0,r1,...,r_{n-1} (n >= 3, all positive)")
    s.set_defaults(func=cmd_count_kahler)

    s = sub.add_parser("count-bending", parents=[common], help="admissible labelings of a tree")
    s.add_argument("--tree", required=True)
    s.add_argument("--lengths", required=True, help="root length first, then one per leaf")
    s.set_defaults(func=cmd_count_bending)

    s = sub.add_parser("enumerate-trees", help="trivalent trees with a given leaf count")
    s.add_argument("--leaves", type=int, required=True)
    s.set_defaults(func=cmd_enumerate_trees)

    s = sub.add_parser("labelings", parents=[common], help="list admissible labelings")
    s.add_argument("--tree", required=True)
    s.add_argument("--lengths", required=True)
    s.add_argument("--limit", type=int, default=None)
    s.set_defaults(func=cmd_labelings)

    s = sub.add_parser("realize", parents=[common], help="polygon realizing a labeling")
    s.add_argument("--tree", required=True)
    s.add_argument("--lengths", required=True)
    s.add_argument("--labeling", required=True, help="JSON file {edge path: value}")
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("verify", parents=[common], help="exhaustive equality sweep")
    s.add_argument("--max-leaves", type=int, default=6)
    s.add_argument("--max-label", type=int, default=4)
    s.add_argument("--all", action="store_true", help="also check operad laws and the recurrence")
    s.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identical reruns)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("recurrence", help="caterpillar numbers as CSV (rows n, cols i)")
    s.add_argument("--max-n", type=int, default=10)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_recurrence)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, TreeSyntaxError, ValueError, IndexError) as exc:
        print(f"polyq: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
