"""Command-line front end: expansions, products, verification sweeps, and
step-by-step slide traces.

Output is deterministic: term lines are sorted lexicographically by shape
and printed one per line, sign first. Exit status is 0 on success or a
clean verification, 1 when a verification sweep reports failures, and 2 on
usage errors (including unparseable shapes or tableaux).
"""

from __future__ import annotations

import argparse
import json
import sys

from .insertion import REVERSE
from .involution import SlideContext, downward_slide, phi, upward_slide, verify_involution
from .rules import (
    skew_lr_product,
    skew_pieri,
    verify_perp_range,
    verify_skew_lr,
    verify_skew_pieri,
)
from .shapes import ParseError, format_partition, format_shape, parse_shape
from .symfunc import (
    SchurExpansion,
    SkewExpansion,
    expansion_to_json,
    schur_product,
    skew_to_schur,
)
from .tableaux import format_tableau, parse_tableau


def term_lines(x) -> list[str]:
    """One `+ s[...]` line per term, shapes in lexicographic order."""
    if isinstance(x, SchurExpansion):
        items = [(format_partition(p), c) for p, c in sorted(x.terms.items())]
    elif isinstance(x, SkewExpansion):
        items = [
            (format_shape(s), c)
            for s, c in sorted(x.terms.items(), key=lambda t: (t[0].outer.parts, t[0].inner.parts))
        ]
    else:
        raise TypeError(f"cannot format {type(x).__name__}")
    if not items:
        return ["0"]
    lines = []
    for label, c in items:
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        lines.append(f"{'-' if c < 0 else '+'} {mag}s[{label}]")
    return lines


def _emit_expansion(x, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(expansion_to_json(x)))
    else:
        print("\n".join(term_lines(x)))


def _cmd_expand(args) -> int:
    shape = parse_shape(args.shape)
    result = skew_pieri(shape, args.n, dual=args.dual)
    _emit_expansion(result, args.format)
    return 0


def _cmd_product(args) -> int:
    a = parse_shape(args.a)
    b = parse_shape(args.b)
    if args.rule == "schur":
        result = schur_product(skew_to_schur(a), skew_to_schur(b))
    else:
        result = skew_lr_product(a, b)
    _emit_expansion(result, args.format)
    return 0


def _cmd_verify(args) -> int:
    if args.target == "skew-pieri":
        report = verify_skew_pieri(args.max_outer, args.max_n, max_entry=args.max_entry)
    elif args.target == "involution":
        report = verify_involution(args.max_outer, args.max_n, args.max_entry)
    elif args.target == "perp":
        report = verify_perp_range(args.max_deg, args.max_n)
    else:
        report = verify_skew_lr(args.max_outer, args.max_outer_b)
    failures = report["failures"]
    report["ok"] = not failures
    if args.format == "json":
        print(json.dumps(report))
    else:
        for key, value in report.items():
            if key != "failures":
                print(f"{key}: {value}")
        for line in failures:
            print(f"FAIL: {line}")
    return 1 if failures else 0


def _cmd_trace(args) -> int:
    base = parse_shape(args.base)
    tableau = parse_tableau(args.tableau)
    ctx = SlideContext(base, tableau)
    steps = []
    op = {"D": downward_slide, "U": upward_slide, "phi": phi}[args.op]
    result = op(ctx, steps)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "op": args.op,
                    "base": format_shape(base),
                    "input": format_tableau(tableau),
                    "steps": [
                        {
                            "kind": s.kind,
                            "entry": s.record.final_entry,
                            "path": [[c.row, c.col] for c in s.record.path],
                            "landing_row": s.record.landing_row,
                            "tableau": format_tableau(s.tableau),
                        }
                        for s in steps
                    ],
                    "result": format_tableau(result.tableau),
                }
            )
        )
    else:
        print(f"{args.op} over base {format_shape(base)}")
        print(f"start: {format_tableau(tableau)}")
        for s in steps:
            cells = s.record.path
            if s.record.direction == REVERSE:
                path = " -> ".join(f"({c.row},{c.col})" for c in reversed(cells))
                where = (
                    "exits at row 0"
                    if s.record.landing_row == 0
                    else f"lands at the left end of row {s.record.landing_row}"
                )
            else:
                path = " -> ".join(f"({c.row},{c.col})" for c in cells)
                where = f"settles at ({cells[-1].row},{cells[-1].col})"
            print(f"{s.kind}: entry {s.record.final_entry} along {path}, {where}")
            print(f"  state: {format_tableau(s.tableau)}")
        print(f"result: {format_tableau(result.tableau)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewtab",
        description="Expand, multiply, verify, and trace skew-shape Schur expansions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="multiply a skew shape by h_n (or e_n with --dual)")
    p.add_argument("shape", help="skew shape, e.g. 3,2,2/1,1 or 322/11")
    p.add_argument("--h", dest="n", type=int, required=True, metavar="N", help="strip size n")
    p.add_argument("--dual", action="store_true", help="multiply by e_n instead of h_n")
    p.add_argument("--rule", choices=["skew-pieri"], default="skew-pieri")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("product", help="multiply two skew shapes")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--rule", choices=["skew-lr", "schur"], default="skew-lr")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("verify", help="run an exhaustive verification sweep")
    p.add_argument("target", choices=["skew-pieri", "involution", "perp", "skew-lr"])
    p.add_argument("--max-outer", type=int, default=4)
    p.add_argument("--max-n", type=int, default=2)
    p.add_argument("--max-entry", type=int, default=3)
    p.add_argument("--max-deg", type=int, default=3, help="degree bound for the perp sweep")
    p.add_argument("--max-outer-b", type=int, default=2, help="second factor bound for skew-lr")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("trace", help="log a slide step by step")
    p.add_argument("mode", choices=["slide"])
    p.add_argument("base", help="base skew shape lam/mu")
    p.add_argument("tableau", help="tableau, e.g. '7,6,4,4,1/3,1: [1,2,2,5][1,2,2,3,6][2,2,3,4][3,5,7,7][9]'")
    p.add_argument("--op", choices=["D", "U", "phi"], default="phi")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_trace)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
