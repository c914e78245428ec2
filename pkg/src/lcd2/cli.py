"""Command-line front end.

Commands: bound, check, construct, enumerate, classify, census, verify.
Every command accepts --format {text,json,csv}, --jobs N and --seed S.
Exit codes: 0 on success, 1 when verification finds a failing check,
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import classify as cls
from . import code as codeops
from . import family as fam
from .code import LinearCode
from .linalg import format_matrix, parse_matrix


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--jobs",
        type=int,
        default=None,
        metavar="N",
        help="worker processes for census/classify (default: LCD2_JOBS or CPU count)",
    )
    common.add_argument(
        "--seed",
        type=int,
        default=0,
        metavar="S",
        help="seed for randomized helpers; the shipped commands are deterministic",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="lcd2",
        description=(
            "Construct, test and exhaustively classify optimal quaternary "
            "Hermitian LCD codes of dimension 2."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", parents=[common], help="largest minimum weight at length n")
    p.add_argument("n", type=int)

    p = sub.add_parser("check", parents=[common], help="analyse a generator matrix")
    p.add_argument("matrix", help="rows separated by ';', entries by ',' (e.g. '1,0,1;0,1,w')")

    p = sub.add_parser("construct", parents=[common], help="build the parametric generator matrix")
    p.add_argument("atuple", help="'a1,a2,a3,a4,a5', optionally prefixed 'a0=K;'")

    p = sub.add_parser("enumerate", parents=[common], help="optimal parameter tuples at length n")
    p.add_argument("n", type=int)

    p = sub.add_parser("classify", parents=[common], help="optimal classes up to equivalence")
    p.add_argument("n", type=int)
    p.add_argument("--include-zero-columns", action="store_true")

    p = sub.add_parser("census", parents=[common], help="equivalence classes at length n")
    p.add_argument("n", type=int)
    p.add_argument("--filter", choices=cls.VALID_FILTERS, default="lcd")
    p.add_argument("--include-zero-columns", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="re-check the known classification")
    p.add_argument("--n-max", type=int, default=32)

    return parser


def _resolve_jobs(args: argparse.Namespace) -> int:
    if args.jobs is not None:
        return max(1, args.jobs)
    env = os.environ.get("LCD2_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"LCD2_JOBS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


def _print_csv(header: list[str], rows: list[list]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _we_jsonable(we: codeops.WeightEnumerator) -> dict[str, int]:
    return {str(w): c for w, c in we.counts}


def class_to_jsonable(c: cls.EquivClass) -> dict:
    rep = cls.representative_atuple(c.canon)
    return {
        "n": c.n,
        "d": c.d,
        "canonical": {"m0": c.canon.m0, "mp": list(c.canon.mp)},
        "representative_a": list(rep.entries),
        "a0": c.canon.m0,
        "label": c.label,
        "weight_enumerator": _we_jsonable(c.we),
        "dual_min_weight_one": c.zero_col,
    }


_CLASS_CSV_HEADER = [
    "n",
    "d",
    "m0",
    "mp",
    "representative_a",
    "a0",
    "label",
    "weight_enumerator",
    "dual_min_weight_one",
]


def _class_csv_row(c: cls.EquivClass) -> list:
    rep = cls.representative_atuple(c.canon)
    return [
        c.n,
        c.d,
        c.canon.m0,
        " ".join(str(x) for x in c.canon.mp),
        " ".join(str(x) for x in rep.entries),
        c.canon.m0,
        c.label or "",
        c.we.poly_string(),
        str(c.zero_col).lower(),
    ]


def _class_text_line(c: cls.EquivClass) -> str:
    rep = cls.representative_atuple(c.canon)
    label = c.label or "-"
    return (
        f"m0={c.canon.m0} mp={','.join(str(x) for x in c.canon.mp)} d={c.d} "
        f"a={','.join(str(x) for x in rep.entries)} label={label} "
        f"dual_min_weight_one={str(c.zero_col).lower()} we={c.we.poly_string()}"
    )


def _emit_classes(classes: list[cls.EquivClass], args: argparse.Namespace, header: str) -> None:
    if args.format == "json":
        _print_json([class_to_jsonable(c) for c in classes])
    elif args.format == "csv":
        _print_csv(_CLASS_CSV_HEADER, [_class_csv_row(c) for c in classes])
    else:
        print(header)
        for c in classes:
            print(_class_text_line(c))


def cmd_bound(args: argparse.Namespace) -> int:
    try:
        d = fam.dmax(args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    delta = fam.delta(args.n, d)
    if args.format == "json":
        _print_json({"n": args.n, "d": d, "delta": delta})
    elif args.format == "csv":
        _print_csv(["n", "d", "delta"], [[args.n, d, delta]])
    else:
        print(f"n = {args.n}")
        print(f"d_max = {d}")
        print(f"delta = {delta}")
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    try:
        gen = parse_matrix(args.matrix)
        code = LinearCode(gen)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    d = codeops.min_weight(code) if code.k >= 1 else 0
    we = codeops.weight_enumerator(code)
    hull = codeops.hull_dimension(code)
    lcd = codeops.is_hermitian_lcd(code)
    if args.format == "json":
        _print_json(
            {
                "n": code.n,
                "k": code.k,
                "d": d,
                "hull_dimension": hull,
                "hermitian_lcd": lcd,
                "weight_enumerator": _we_jsonable(we),
                "weight_enumerator_poly": we.poly_string(),
            }
        )
    elif args.format == "csv":
        _print_csv(
            ["n", "k", "d", "hull_dimension", "hermitian_lcd", "weight_enumerator"],
            [[code.n, code.k, d, hull, str(lcd).lower(), we.poly_string()]],
        )
    else:
        print(f"n = {code.n}")
        print(f"k = {code.k}")
        print(f"d = {d}")
        print(f"hull_dimension = {hull}")
        print(f"hermitian_lcd = {str(lcd).lower()}")
        print(f"weight_enumerator = {we.poly_string()}")
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        a = fam.parse_atuple(args.atuple)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    gen = fam.build_generator(a)
    text = format_matrix(gen)
    if args.format == "json":
        _print_json({"a0": a.a0, "a": list(a.entries), "n": a.n, "matrix": text})
    elif args.format == "csv":
        _print_csv(
            ["a0", "a", "n", "matrix"],
            [[a.a0, " ".join(str(x) for x in a.entries), a.n, text]],
        )
    else:
        print(text)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    try:
        tuples = fam.enumerate_optimal(args.n)
        d = fam.dmax(args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    labels = {a.entries: f.label for f, a in fam.family_tuples(args.n)}
    if args.format == "json":
        _print_json(
            {
                "n": args.n,
                "d": d,
                "count": len(tuples),
                "tuples": [
                    {"a": list(a.entries), "label": labels.get(a.entries)} for a in tuples
                ],
            }
        )
    elif args.format == "csv":
        _print_csv(
            ["a1", "a2", "a3", "a4", "a5", "label"],
            [list(a.entries) + [labels.get(a.entries, "")] for a in tuples],
        )
    else:
        print(f"n = {args.n}, d = {d}, count = {len(tuples)}")
        for a in tuples:
            label = labels.get(a.entries, "-")
            print(f"{','.join(str(x) for x in a.entries)}  {label}")
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    try:
        jobs = _resolve_jobs(args)
        classes = cls.classify_optimal(args.n, args.include_zero_columns, jobs=jobs)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    header = (
        f"n={args.n} optimal classes={len(classes)} "
        f"include_zero_columns={str(args.include_zero_columns).lower()}"
    )
    _emit_classes(classes, args, header)
    return 0


def cmd_census(args: argparse.Namespace) -> int:
    try:
        jobs = _resolve_jobs(args)
        classes = cls.census(
            args.n, args.filter, args.include_zero_columns, jobs=jobs
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    header = (
        f"n={args.n} filter={args.filter} classes={len(classes)} "
        f"include_zero_columns={str(args.include_zero_columns).lower()}"
    )
    _emit_classes(classes, args, header)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        jobs = _resolve_jobs(args)
        report = cls.verify_classification(args.n_max, jobs=jobs)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        _print_json(report.to_jsonable())
    elif args.format == "csv":
        _print_csv(
            ["id", "n", "pass", "detail"],
            [[c.id, c.n, str(c.passed).lower(), c.detail] for c in report.checks],
        )
    else:
        for c in report.checks:
            status = "PASS" if c.passed else "FAIL"
            print(f"{c.id} n={c.n} {status} {c.detail}")
        failures = report.failures()
        if failures:
            print(f"RESULT: FAIL ({len(failures)} of {len(report.checks)} checks failed)")
        else:
            print(f"RESULT: PASS ({len(report.checks)} checks)")
    return 0 if report.passed else 1


_COMMANDS = {
    "bound": cmd_bound,
    "check": cmd_check,
    "construct": cmd_construct,
    "enumerate": cmd_enumerate,
    "classify": cmd_classify,
    "census": cmd_census,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
