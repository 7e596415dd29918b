"""Command-line front end: analyze, hhh, verify and superpoly.

Exit codes: 0 success, 1 input error, 2 verification failure, 3 internal
consistency failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

from .braid import (
    BraidWord,
    closure_components,
    connect_sum_window,
    contains_subexpression,
    has_adjacent_squares,
    parse_braid,
    primeness_criterion,
    uses_all_generators,
    writhe,
)
from .complex import ComplexError
from .grading_ring import Field
from .invariant import superpolynomial, table_for
from .suites import SUITES, run_suite

FIELD_ENV = "EXTREMAL_HHH_FIELD"

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_INTERNAL = 0, 1, 2, 3


def _field(text: str | None) -> Field:
    return Field.parse(text if text is not None else os.environ.get(FIELD_ENV, "QQ"))


def analyze_report(b: BraidWord) -> dict:
    pairs = {}
    for i in range(1, b.n - 1):
        j = i + 1
        pairs[f"{i},{j}"] = contains_subexpression(b, (i, j, i, j)) or contains_subexpression(b, (j, i, j, i))
    report = {
        "braid": b.tokens(),
        "n": b.n,
        "length": len(b),
        "writhe": writhe(b),
        "components": closure_components(b),
        "positive": b.is_positive(),
        "negative": b.is_negative(),
        "all_generators": uses_all_generators(b),
        "stst_pairs": pairs,
        "connect_sum_window": connect_sum_window(b),
    }
    if b.is_positive():
        report["primeness_criterion"] = primeness_criterion(b)
    elif b.is_negative():
        report["primeness_criterion"] = has_adjacent_squares(b)
    else:
        report["primeness_criterion"] = None
        report["notice"] = "mixed signs: only structural data is reported"
    return report


def _print_report(report: dict) -> None:
    for k, v in report.items():
        if k == "stst_pairs":
            for pair, ok in v.items():
                print(f"stst subexpression ({pair}): {ok}")
        else:
            print(f"{k}: {v}")


def cmd_analyze(args) -> int:
    b = parse_braid(args.braid, args.n)
    report = analyze_report(b)
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        _print_report(report)
    return EXIT_OK


def _sign_homogeneous(b: BraidWord) -> None:
    if not len(b):
        raise ValueError("empty braid word")
    if not (b.is_positive() or b.is_negative()):
        raise ValueError("mixed-sign braid word; run `analyze` for its structural data")


def cmd_hhh(args) -> int:
    b = parse_braid(args.braid, args.n)
    _sign_homogeneous(b)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        table = table_for(b, args.qmax, _field(args.field))
    print(table.dumps() if args.json else table.format())
    return EXIT_OK


def cmd_superpoly(args) -> int:
    b = parse_braid(args.braid, args.n)
    _sign_homogeneous(b)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        table = table_for(b, args.qmax, _field(args.field))
    p = superpolynomial(b, table)
    if args.json:
        print(json.dumps(p.to_json(), indent=2, sort_keys=True))
    else:
        lo, hi = min(p.t_range), max(p.t_range)
        print(f"P = {p.format()}")
        print(f"(exact for T-exponents {lo}..{hi}; HOMFLY unit fixed by unknot = 1)")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = SUITES if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        res = run_suite(name, seed=args.seed, count=args.count)
        ok &= res.passed
        if args.json:
            print(json.dumps({"suite": name, "passed": res.passed, "checks": res.checks}, indent=2))
        else:
            print(res.summary())
            for label, good, detail in res.failures():
                print(f"  FAIL {label} {detail}")
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="extremal-hhh",
        description="Triply graded homology of braid closures in extreme T-degrees.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def braid_args(sp):
        sp.add_argument("braid", help='signed generator indices, e.g. "1 2 -1"')
        sp.add_argument("--n", type=int, required=True, help="number of strands")
        sp.add_argument("--json", action="store_true", help="emit JSON")

    def compute_args(sp):
        sp.add_argument("--qmax", type=int, default=None, help="largest Q listed (default 2|b|+10)")
        sp.add_argument(
            "--field", default=None,
            help=f"QQ or a prime p > 3 (default: ${FIELD_ENV} or QQ)",
        )

    sp = sub.add_parser("analyze", help="structural report for a braid word")
    braid_args(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("hhh", help="(A,T,Q) table in the extreme T-degrees (full at 2 strands)")
    braid_args(sp)
    compute_args(sp)
    sp.set_defaults(func=cmd_hhh)

    sp = sub.add_parser("superpoly", help="normalized superpolynomial terms")
    braid_args(sp)
    compute_args(sp)
    sp.set_defaults(func=cmd_superpoly)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", default="all", choices=list(SUITES) + ["all"])
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--count", type=int, default=None, help="suite size (suite-specific default)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    if getattr(args, "qmax", None) is not None and args.qmax < 0:
        print("error: --qmax must be nonnegative", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except ComplexError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
