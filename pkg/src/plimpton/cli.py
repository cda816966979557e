"""Command-line surface.

Subcommands: recip, pairs, rows, tablet (verify|diff|errors), extend, link.
Output formats: text (default), json, csv.  Whenever computed values differ
from the printed source tables, a correction log is emitted (stderr for
text/csv, embedded for json) — printed values are never silently fixed.

Exit codes: 0 success or expected findings, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import hypotheses, pairs, tablet
from .pairs import Correction, PairCriterion, ReciprocalPair, enumerate_pairs
from .rows import RowCandidate
from .sexagesimal import (
    ONE,
    SexValue,
    SexagesimalError,
    is_regular,
    parse_sex,
    reciprocal,
    render_sex,
    sub,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


class DataError(Exception):
    """Bad input values (as opposed to bad flags)."""


def _encode_value(v: SexValue) -> dict:
    f = v.fraction
    return {"digits": render_sex(v), "numerator": str(f.numerator),
            "denominator": str(f.denominator)}


def _encode_fraction(f: Fraction) -> dict:
    return {"numerator": str(f.numerator), "denominator": str(f.denominator)}


def _correction_dict(c: Correction) -> dict:
    return {"table": c.table, "label": c.label, "column": c.column,
            "printed": c.printed, "computed": c.computed}


def _emit(fmt: str, command: str, rows: list[dict], columns: list[str],
          corrections: list[Correction], extra: dict | None = None) -> None:
    """Uniform emission: same values in every format."""
    if fmt == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": command,
               "rows": rows,
               "corrections": [_correction_dict(c) for c in corrections]}
        if extra:
            doc.update(extra)
        print(json.dumps(doc, indent=2))
        return
    if fmt == "csv":
        writer = csv.writer(sys.stdout, quoting=csv.QUOTE_ALL)
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell_text(row.get(col)) for col in columns])
    else:
        for row in rows:
            print("  ".join(_cell_text(row.get(col)) for col in columns))
        if extra:
            for key, value in extra.items():
                print(f"{key}: {value}")
    for c in corrections:
        print(f"correction: {c}", file=sys.stderr)


def _cell_text(cell) -> str:
    if cell is None:
        return ""
    if isinstance(cell, dict) and "digits" in cell:
        return cell["digits"]
    return str(cell)


def _parse_regular_arg(text: str):
    v = parse_sex(text)
    r = is_regular(v)
    if r is None:
        n = v.mantissa
        for p in (2, 3, 5):
            while n % p == 0:
                n //= p
        factor = next(f for f in range(2, n + 1) if n % f == 0)
        raise DataError(f"not regular: factor {factor}")
    return r


# ---------------------------------------------------------------------------
# Subcommands

def cmd_recip(args) -> int:
    r = _parse_regular_arg(args.value)
    result = reciprocal(r).value
    if args.format == "json":
        print(json.dumps({"schema_version": SCHEMA_VERSION, "command": "recip",
                          "input": _encode_value(r.value),
                          "reciprocal": _encode_value(result)}, indent=2))
    else:
        print(render_sex(result))
    return EXIT_OK


_CRITERION_KINDS = {"mult10": "mult10", "places4": "places_only",
                    "bruins": "bruins"}


def _pair_row(label, pair: ReciprocalPair) -> dict:
    return {"label": str(label),
            "T": _encode_value(pair.T.value),
            "Tbar": _encode_value(pair.Tbar.value)}


def cmd_pairs(args) -> int:
    try:
        lo = parse_sex(args.range_from, "fixed")
        hi = parse_sex(args.range_to, "fixed")
    except SexagesimalError as e:
        raise DataError(f"malformed range: {e}")
    if lo.fraction > hi.fraction:
        lo, hi = hi, lo
    criterion = PairCriterion(_CRITERION_KINDS[args.criterion], lo, hi)
    found = enumerate_pairs(criterion)
    rows = [_pair_row(i, p) for i, p in enumerate(found, 1)]
    corrections = (hypotheses.plimpton_pair_corrections()
                   if args.criterion == "mult10"
                   else pairs.excluded_pair_corrections())
    _emit(args.format, "pairs", rows, ["T", "Tbar"], corrections)
    return EXIT_OK


def _row_record(c: RowCandidate, leading_one: bool) -> dict:
    a = c.a if leading_one else sub(c.a, ONE)
    flags = []
    if not c.reduced:
        flags.append("unreduced_scribal_form")
    if c.reduction_factor != 1:
        flags.append(f"reduced_by_{c.reduction_factor}")
    if not leading_one:
        flags.append("leading_one_dropped")
    return {
        "label": str(c.n),
        "T": _encode_value(c.pair.T.value),
        "Tbar": _encode_value(c.pair.Tbar.value),
        "X": _encode_value(c.xy.x),
        "Y": _encode_value(c.xy.y),
        "S": _encode_value(SexValue(c.s)),
        "D": _encode_value(SexValue(c.d)),
        "A": _encode_value(a),
        "flags": ";".join(flags),
    }


def cmd_rows(args) -> int:
    reduction = args.reduction.replace("-", "_")
    candidates = hypotheses.generate(args.hypothesis, reduction)
    leading_one = args.leading_one == "on"
    rows = [_row_record(c, leading_one) for c in candidates]
    corrections = (hypotheses.plimpton_pair_corrections()
                   if args.hypothesis == "phillips" else [])
    _emit(args.format, "rows", rows, ["A", "S", "D", "label"], corrections)
    return EXIT_OK


def cmd_tablet(args) -> int:
    if args.subcommand == "verify":
        results = tablet.verify_properties(tablet.tablet_data(args.edition),
                                           use=args.use)
        rows = [{"label": str(r.number), "property": r.description,
                 "status": "pass" if r.holds else "fail",
                 "failing_rows": " ".join(str(n) for n in r.failures)}
                for r in results]
        _emit(args.format, "tablet-verify", rows,
              ["label", "property", "status", "failing_rows"], [])
        expected = all(
            (r.holds if r.number != 3 else set(r.failures) == {11})
            for r in results) if args.use == "corrected" else True
        return EXIT_OK if expected else EXIT_DATA
    if args.subcommand == "diff":
        reduction = args.reduction.replace("-", "_")
        candidates = hypotheses.generate(args.hypothesis, reduction)
        report = tablet.diff_against(candidates, args.edition, args.matching)
        rows = []
        for d in report.rows:
            rows.append({"label": str(d.n), "status": d.status,
                         "ratio": str(d.ratio.value.fraction) if d.ratio else "",
                         "cells": " ".join(d.cells)})
        _emit(args.format, "tablet-diff", rows,
              ["label", "status", "ratio", "cells"], [],
              extra={"summary": report.summary()})
        return EXIT_OK
    annotations = tablet.error_annotations(args.edition)
    rows = [{"label": str(a.n), "column": a.column, "as_written": a.as_written,
             "corrected": a.corrected, "kind": a.kind} for a in annotations]
    _emit(args.format, "tablet-errors", rows,
          ["label", "column", "as_written", "corrected", "kind"], [])
    return EXIT_OK


def cmd_extend(args) -> int:
    extension = hypotheses.extend_phillips(args.side)
    rows = [_pair_row(row.label, row.pair) for row in extension]
    corrections = hypotheses.extension_corrections(args.side)
    _emit(args.format, "extend", rows, ["label", "T", "Tbar"], corrections)
    return EXIT_OK


def cmd_link(args) -> int:
    r = _parse_regular_arg(args.value)
    chain = hypotheses.link_to_standard(
        ReciprocalPair.from_T_mantissa(r.mantissa))
    if args.format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": "link",
               "pair": _pair_row("", ReciprocalPair.from_T_mantissa(r.mantissa)),
               "in_table": chain.in_table,
               "start": _pair_row("", chain.start),
               "factor": list(chain.factor),
               "factor_value": _encode_fraction(chain.factor_fraction),
               "steps": chain.steps}
        print(json.dumps(doc, indent=2))
    else:
        print(str(chain))
    return EXIT_OK


# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    parser = _Parser(prog="plimpton",
                     description="Exact sexagesimal reconstruction of Plimpton 322")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json", "csv"),
                       default="text")

    p = sub.add_parser("recip", help="reciprocal of a regular number")
    p.add_argument("value")
    add_format(p)
    p.set_defaults(func=cmd_recip)

    p = sub.add_parser("pairs", help="enumerate reciprocal pairs in a range")
    p.add_argument("--criterion", choices=tuple(_CRITERION_KINDS), default="mult10")
    p.add_argument("--from", dest="range_from", required=True)
    p.add_argument("--to", dest="range_to", required=True)
    add_format(p)
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("rows", help="generate rows under a hypothesis")
    p.add_argument("--hypothesis", choices=hypotheses.HYPOTHESIS_TAGS,
                   required=True)
    p.add_argument("--reduction", choices=("full", "tablet-faithful"),
                   default="full")
    p.add_argument("--leading-one", choices=("on", "off"), default="on")
    add_format(p)
    p.set_defaults(func=cmd_rows)

    p = sub.add_parser("tablet", help="verify, diff or list scribal errors")
    tsub = p.add_subparsers(dest="subcommand", required=True)
    for name in ("verify", "diff", "errors"):
        tp = tsub.add_parser(name)
        tp.add_argument("--edition", choices=tablet.EDITIONS, default="robson")
        add_format(tp)
        if name == "verify":
            tp.add_argument("--use", choices=("corrected", "as_written"),
                            default="corrected")
        if name == "diff":
            tp.add_argument("--hypothesis", choices=hypotheses.HYPOTHESIS_TAGS,
                            default="phillips")
            tp.add_argument("--matching", choices=("exact", "similarity"),
                            default="exact")
            tp.add_argument("--reduction", choices=("full", "tablet-faithful"),
                            default="tablet-faithful")
        tp.set_defaults(func=cmd_tablet)

    p = sub.add_parser("extend", help="extension tables beyond the 15 rows")
    p.add_argument("--side", choices=("lower", "upper"), required=True)
    add_format(p)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("link", help="minimal chain to the standard table")
    p.add_argument("value")
    add_format(p)
    p.set_defaults(func=cmd_link)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (DataError, SexagesimalError, ValueError) as e:
        print(f"plimpton: error: {e}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
