"""Command-line surface.

Subcommands map one-to-one onto library operations; every output is
machine-readable (json by default, csv and table variants where they
make sense).  Exit codes are part of the contract so CI can gate on
them:

    0   success (for verify: zero mismatches)
    2   bad input (including non-squarefree d and window/cap violations)
    3   squarefree d outside the supported class-number-1/2/3 lists
    4   verify found at least one mismatch
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .classdata import (
    class_reps,
    condition_display,
    congruence_for,
    reps_as_rows,
)
from .quadfield import NotSquarefree, Overflow, UnsupportedField, make_field
from .repsearch import (
    DEFAULT_DP_CAP,
    LatticeQuery,
    find_certificate,
    exceptional_set,
    g_invariant,
    min_terms,
)
from .universality import m_d
from .verify import report_table, report_to_json, verify_all


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc, separators=(",", ":")))


def _emit_csv(rows: list[dict], columns: list[str]) -> None:
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    sys.stdout.write(out.getvalue())


def _emit_kv_table(pairs: list[tuple[str, object]]) -> None:
    width = max(len(key) for key, _ in pairs)
    for key, value in pairs:
        print(f"{key:<{width}}  {value}")


def _norm_form_text(f) -> str:
    p, q, c = f.form_coefficients()
    if q:
        return f"a^2+ab+{c}b^2"
    return f"a^2+{c}b^2"


def _omega_text(f) -> str:
    if f.is_half_branch:
        return f"(1+sqrt(-{f.d}))/2"
    return f"sqrt(-{f.d})"


def cmd_field_info(args) -> int:
    f = make_field(args.d)
    classes = []
    for rep in class_reps(f):
        cond = congruence_for(f, rep)
        classes.append(
            {
                "class_index": rep.class_index,
                "k": rep.k,
                "s": rep.s,
                "t": rep.t,
                "h_scale": str(rep.h_scale),
                "condition": condition_display(cond),
            }
        )
    if args.format == "csv":
        rows = [{"d": f.d, "class_index": c["class_index"], "k": c["k"], "s": c["s"], "t": c["t"]} for c in classes]
        _emit_csv(rows, ["d", "class_index", "k", "s", "t"])
    elif args.format == "table":
        pairs = [
            ("d", f.d),
            ("omega", _omega_text(f)),
            ("class_number", f.class_number),
            ("norm_form", _norm_form_text(f)),
        ]
        for c in classes:
            pairs.append(
                (f"class {c['class_index']}", f"k={c['k']} s={c['s']} t={c['t']} h={c['h_scale']} condition: {c['condition']}")
            )
        _emit_kv_table(pairs)
    else:
        _emit_json(
            {
                "d": f.d,
                "omega_branch": f.omega_branch.value,
                "class_number": f.class_number,
                "norm_form": _norm_form_text(f),
                "classes": classes,
            }
        )
    return 0


def cmd_min_terms(args) -> int:
    f = make_field(args.d)
    q = LatticeQuery(field=f, class_index=args.class_index, r=args.r)
    result = min_terms(q, dp_cap=args.dp_cap)
    doc: dict = {"outcome": result.outcome}
    if result.m is not None:
        doc["m"] = result.m
    if args.format == "table":
        _emit_kv_table(list(doc.items()))
    else:
        _emit_json(doc)
    return 0


def cmd_certificate(args) -> int:
    f = make_field(args.d)
    q = LatticeQuery(field=f, class_index=args.class_index, r=args.r)
    cert = find_certificate(q, args.m, dp_cap=args.dp_cap)
    if cert is None:
        result = min_terms(q, dp_cap=args.dp_cap)
        if result.is_representable:
            doc = {"outcome": "not_found", "min_m": result.m}
        else:
            doc = {"outcome": "unrepresentable"}
        _emit_json(doc)
        return 0
    doc = cert.to_json_dict()
    if args.format == "table":
        pairs = [(key, doc[key]) for key in ("d", "class_index", "k", "r", "m", "check")]
        pairs.append(("gammas", " ".join(f"({a},{b})" for a, b in doc["gammas"])))
        _emit_kv_table(pairs)
    elif args.format == "csv":
        rows = [{"a": a, "b": b} for a, b in doc["gammas"]]
        _emit_csv(rows, ["a", "b"])
    else:
        _emit_json(doc)
    return 0


def cmd_exceptional(args) -> int:
    f = make_field(args.d)
    exceptional = exceptional_set(f, args.class_index, args.r_max, dp_cap=args.dp_cap)
    if args.format == "csv":
        _emit_csv([{"r": r} for r in exceptional], ["r"])
    elif args.format == "table":
        _emit_kv_table(
            [
                ("d", args.d),
                ("class_index", args.class_index),
                ("r_max", args.r_max),
                ("exceptional", " ".join(map(str, exceptional)) or "(none)"),
            ]
        )
    else:
        _emit_json(
            {"d": args.d, "class_index": args.class_index, "r_max": args.r_max, "exceptional": exceptional}
        )
    return 0


def cmd_g(args) -> int:
    f = make_field(args.d)
    result = g_invariant(f, args.r_max, dp_cap=args.dp_cap)
    doc = {
        "d": args.d,
        "r_max": args.r_max,
        "g": result.g,
        "witness": {"class_index": result.witness.class_index, "r": result.witness.r},
        "stable": result.stable,
    }
    if args.format == "table":
        flat = dict(doc)
        flat["witness"] = f"class {result.witness.class_index}, r={result.witness.r}"
        _emit_kv_table(list(flat.items()))
    else:
        _emit_json(doc)
    return 0


def cmd_m_d(args) -> int:
    f = make_field(args.d)
    doc = {"d": args.d, "m_d": m_d(f)}
    if args.format == "table":
        _emit_kv_table(list(doc.items()))
    else:
        _emit_json(doc)
    return 0


def cmd_verify(args) -> int:
    report = verify_all(args.class_number, r_max=args.r_max, jobs=args.jobs)
    if args.format == "table":
        print(report_table(report))
    elif args.format == "csv":
        rows = [
            {
                "d": fr.d,
                "class": fr.class_number,
                "g_expected": fr.g_expected,
                "g_computed": fr.g_computed,
                "exceptions_match": fr.exceptions_match,
                "stable": fr.stable,
            }
            for fr in report.fields
        ]
        _emit_csv(rows, ["d", "class", "g_expected", "g_computed", "exceptions_match", "stable"])
    else:
        _emit_json(report_to_json(report))
    return 0 if report.all_match else 4


def cmd_class_table(args) -> int:
    rows = reps_as_rows()
    if args.format == "csv":
        _emit_csv(rows, ["d", "class_index", "k", "s", "t"])
    elif args.format == "table":
        print(f"{'d':>5} {'class_index':>11} {'k':>3} {'s':>4} {'t':>2}")
        for row in rows:
            print(f"{row['d']:>5} {row['class_index']:>11} {row['k']:>3} {row['s']:>4} {row['t']:>2}")
    else:
        _emit_json({"rows": rows})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="normsums",
        description="Sums of norms in imaginary quadratic fields: minimum counts, exceptional sets, uniform bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **help_kw):
        p = sub.add_parser(name, **help_kw)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=["json", "csv", "table"], default="json")
        return p

    p = add("field-info", cmd_field_info, help="field parameters, class representatives, congruence conditions")
    p.add_argument("-d", type=int, required=True)

    p = add("min-terms", cmd_min_terms, help="minimum number of norms for one lattice")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--class", dest="class_index", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--dp-cap", type=int, default=DEFAULT_DP_CAP)

    p = add("certificate", cmd_certificate, help="explicit summand list with exactly m summands")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--class", dest="class_index", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--dp-cap", type=int, default=DEFAULT_DP_CAP)

    p = add("exceptional", cmd_exceptional, help="all unrepresentable r up to a bound")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--class", dest="class_index", type=int, required=True)
    p.add_argument("--r-max", dest="r_max", type=int, default=300)
    p.add_argument("--dp-cap", type=int, default=DEFAULT_DP_CAP)

    p = add("g", cmd_g, help="uniform bound g over all classes up to r-max")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--r-max", dest="r_max", type=int, default=300)
    p.add_argument("--dp-cap", type=int, default=DEFAULT_DP_CAP)

    p = add("m-d", cmd_m_d, help="minimum unconstrained-norm count m_d")
    p.add_argument("-d", type=int, required=True)

    p = add("verify", cmd_verify, help="recompute and diff the expected tables")
    p.add_argument("--class-number", dest="class_number", type=int, choices=[2, 3], required=True)
    p.add_argument("--r-max", dest="r_max", type=int, default=300)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)

    add("class-table", cmd_class_table, help="export every ideal class representative row")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotSquarefree as exc:
        print(f"NotSquarefree: {exc}", file=sys.stderr)
        return 2
    except UnsupportedField as exc:
        print(f"UnsupportedField: {exc}", file=sys.stderr)
        return 3
    except Overflow as exc:
        print(f"Overflow: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
