"""Command line front end.

Subcommands:
    invariants   report for one class given by exponents, semigroup, or pair
    sweep        evaluate every class in a box and check the identities
    check        run the named identity suite over a box

Exit codes: 0 success, 1 a check or identity failed, 2 invalid input,
3 internal invariant violation (a bug, not bad input).

Formats: table (human), json (stable keys, exact integers, quotient as
num/den plus fixed 6-place decimal string), csv (fixed column order,
lists joined by ';', no quoting needed).  All output is UTF-8 and ends
with a newline.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .combinatorics import (
    CharacteristicExponents,
    SemigroupGenerators,
    char_exponents_from_semigroup,
    semigroup_from_char_exponents,
)
from .enumeration import (
    EnumerationBounds,
    SweepRecord,
    evaluate_class,
    sweep,
)
from .errors import InternalInvariantViolation, OverflowLimitError, ValidationError
from .invariants import InvariantReport, decimal_ratio, full_report
from .resolution import MultiplicitySequence, multiplicity_sequence
from .selfcheck import run_identity_suite

CSV_COLUMNS = [
    "n",
    "char_exponents",
    "semigroup",
    "mu",
    "tau_minus",
    "q_min",
    "tau_min",
    "quotient",
    "lower_bound",
    "delta_gen_gaps",
    "checks_passed",
]

CHECK_DEFAULT_MULT = 10
CHECK_DEFAULT_BETA = 60


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ValidationError(f"{what} must be comma-separated integers, got {text!r}")


def _class_from_args(args) -> CharacteristicExponents:
    if args.char_exponents is not None:
        head, sep, tail = args.char_exponents.partition(":")
        if not sep:
            raise ValidationError(
                f"expected n:b1,b2,... for --char-exponents, got {args.char_exponents!r}"
            )
        try:
            n = int(head)
        except ValueError:
            raise ValidationError(f"multiplicity {head!r} is not an integer")
        return CharacteristicExponents(n, tuple(_parse_int_list(tail, "exponents")))
    if args.semigroup is not None:
        gens = _parse_int_list(args.semigroup, "generators")
        return char_exponents_from_semigroup(SemigroupGenerators(tuple(gens)))
    pair = _parse_int_list(args.pair, "pair")
    if len(pair) != 2:
        raise ValidationError(f"--pair needs exactly two integers, got {args.pair!r}")
    return CharacteristicExponents(pair[0], (pair[1],))


def _report_dict(r: InvariantReport) -> dict:
    return {
        "n": r.n,
        "mu": r.mu,
        "tau_minus": r.tau_minus,
        "q_min": r.q_min,
        "tau_min": r.tau_min,
        "quotient": {
            "num": r.quotient_num,
            "den": r.quotient_den,
            "decimal": r.quotient_decimal(),
        },
        "tau_lower_bound": r.tau_lower_bound,
        "delta_gen_gaps": r.delta_gen_gaps,
    }


def _class_dict(c: CharacteristicExponents) -> dict:
    return {"n": c.n, "beta": list(c.beta)}


def _sequence_dicts(m: MultiplicitySequence) -> list[dict]:
    return [
        {"multiplicity": p.multiplicity, "kind": p.kind.value, "stage": p.stage}
        for p in m.points
    ]


def _sequence_compact(m: MultiplicitySequence) -> str:
    return ";".join(f"{p.multiplicity}{p.kind.value[0]}" for p in m.points)


def _record_row(rec: SweepRecord) -> dict[str, str]:
    c = rec.char_exponents
    row = {
        "n": str(c.n),
        "char_exponents": ";".join(str(v) for v in (c.n, *c.beta)),
        "semigroup": ";".join(str(v) for v in rec.semigroup.gens)
        if rec.semigroup
        else "",
        "checks_passed": "1" if rec.passed else "0",
    }
    r = rec.report
    if r is None:
        row.update(
            {k: "" for k in ("mu", "tau_minus", "q_min", "tau_min", "quotient",
                             "lower_bound", "delta_gen_gaps")}
        )
    else:
        row.update(
            {
                "mu": str(r.mu),
                "tau_minus": str(r.tau_minus),
                "q_min": str(r.q_min),
                "tau_min": str(r.tau_min),
                "quotient": f"{r.quotient_num}/{r.quotient_den}",
                "lower_bound": str(r.tau_lower_bound),
                "delta_gen_gaps": str(r.delta_gen_gaps),
            }
        )
    return row


def _csv_text(rows: list[dict[str, str]], columns: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _invariants_table(
    c: CharacteristicExponents,
    s: SemigroupGenerators,
    m: MultiplicitySequence,
    r: InvariantReport,
) -> str:
    lines = [
        f"class            {c}",
        f"semigroup        {s}",
        "multiplicity sequence:",
    ]
    for p in m.points:
        lines.append(f"  stage {p.stage}  {p.multiplicity:>3}  {p.kind.value}")
    lines += [
        f"mu               {r.mu}",
        f"tau_minus        {r.tau_minus}",
        f"q_min            {r.q_min}",
        f"tau_min          {r.tau_min}",
        f"mu/tau_min       {r.quotient_num}/{r.quotient_den} = {r.quotient_decimal()}",
        f"tau lower bound  {r.tau_lower_bound}",
        f"delta_gen gaps   {r.delta_gen_gaps}",
    ]
    return "\n".join(lines) + "\n"


def cmd_invariants(args) -> int:
    c = _class_from_args(args)
    s = semigroup_from_char_exponents(c)
    m = multiplicity_sequence(c)
    r = full_report(c)
    rec = evaluate_class(c)  # carries the per-class checks for the csv row
    if args.format == "json":
        doc = {
            "char_exponents": _class_dict(c),
            "semigroup": list(s.gens),
            "multiplicity_sequence": _sequence_dicts(m),
            "report": _report_dict(r),
        }
        sys.stdout.write(_json_text(doc))
    elif args.format == "csv":
        row = _record_row(rec)
        row["multiplicity_sequence"] = _sequence_compact(m)
        sys.stdout.write(_csv_text([row], CSV_COLUMNS + ["multiplicity_sequence"]))
    else:
        sys.stdout.write(_invariants_table(c, s, m, r))
    return 0


def _sweep_table(records: list[SweepRecord]) -> str:
    header = (
        f"{'class':<18} {'semigroup':<18} {'mu':>5} {'tau-':>5} {'q':>4} "
        f"{'tau_min':>7} {'quotient':>10} {'gaps':>5} ok"
    )
    lines = [header]
    for rec in records:
        r = rec.report
        if r is None:
            lines.append(f"{str(rec.char_exponents):<18} {rec.error or 'failed'}")
            continue
        quotient = f"{r.quotient_num}/{r.quotient_den}"
        lines.append(
            f"{str(rec.char_exponents):<18} {str(rec.semigroup):<18} {r.mu:>5} "
            f"{r.tau_minus:>5} {r.q_min:>4} {r.tau_min:>7} {quotient:>10} "
            f"{r.delta_gen_gaps:>5} {'1' if rec.passed else '0'}"
        )
    return "\n".join(lines) + "\n"


def cmd_sweep(args) -> int:
    bounds = EnumerationBounds(args.max_mult, args.max_beta, args.max_pairs)
    records, summary = sweep(bounds)
    if args.format == "json":
        doc = {
            "bounds": {
                "max_multiplicity": bounds.max_multiplicity,
                "max_beta": bounds.max_beta,
                "max_pairs": bounds.max_pairs,
            },
            "records": [
                {
                    "char_exponents": _class_dict(rec.char_exponents),
                    "semigroup": list(rec.semigroup.gens) if rec.semigroup else None,
                    "report": _report_dict(rec.report) if rec.report else None,
                    "checks": rec.checks,
                    "error": rec.error,
                }
                for rec in records
            ],
            "summary": {
                "classes": summary.classes,
                "max_quotient": {
                    "num": summary.max_quotient.numerator,
                    "den": summary.max_quotient.denominator,
                    "decimal": decimal_ratio(
                        summary.max_quotient.numerator,
                        summary.max_quotient.denominator,
                    ),
                },
                "failed_checks": summary.failed,
            },
        }
        text = _json_text(doc)
    elif args.format == "csv":
        text = _csv_text([_record_row(rec) for rec in records], CSV_COLUMNS)
    else:
        text = _sweep_table(records)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(
        f"classes: {summary.classes}  "
        f"max mu/tau_min: {summary.max_quotient.numerator}/"
        f"{summary.max_quotient.denominator}  "
        f"failed checks: {summary.failed}",
        file=sys.stderr,
    )
    return 1 if summary.failed else 0


def cmd_check(args) -> int:
    bounds = EnumerationBounds(args.max_mult, args.max_beta)
    results = run_identity_suite(bounds)
    first_failure = None
    for res in results:
        if res.passed:
            print(f"ok   {res.name}")
        else:
            print(f"FAIL {res.name}: {res.detail}")
            if first_failure is None:
                first_failure = res.name
    if first_failure is not None:
        print(f"first failing identity: {first_failure}")
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="branch-invariants",
        description="Topological invariants of irreducible plane curve singularities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="report for a single class")
    which = p_inv.add_mutually_exclusive_group(required=True)
    which.add_argument(
        "--char-exponents",
        metavar="N:B1,B2,...",
        help="characteristic exponents, multiplicity before the colon",
    )
    which.add_argument(
        "--semigroup", metavar="V0,V1,...", help="semigroup generators"
    )
    which.add_argument(
        "--pair", metavar="N,M", help="one characteristic pair (n; m)"
    )
    p_inv.add_argument(
        "--format", choices=("table", "json", "csv"), default="table"
    )
    p_inv.set_defaults(func=cmd_invariants)

    p_sweep = sub.add_parser("sweep", help="evaluate every class in a box")
    p_sweep.add_argument("--max-mult", type=int, required=True, metavar="N")
    p_sweep.add_argument("--max-beta", type=int, required=True, metavar="B")
    p_sweep.add_argument("--max-pairs", type=int, default=None, metavar="G")
    p_sweep.add_argument(
        "--format", choices=("table", "json", "csv"), default="table"
    )
    p_sweep.add_argument("--out", metavar="FILE", help="write records here")
    p_sweep.set_defaults(func=cmd_sweep)

    p_check = sub.add_parser("check", help="run the named identity suite")
    p_check.add_argument("--max-mult", type=int, default=CHECK_DEFAULT_MULT)
    p_check.add_argument("--max-beta", type=int, default=CHECK_DEFAULT_BETA)
    p_check.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, OverflowLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
