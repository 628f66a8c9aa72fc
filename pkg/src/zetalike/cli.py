"""Command-line front end.

Subcommands: ``rho`` and ``eta`` print single values, ``table`` emits every
admissible index of one weight, ``verify`` runs the identity suites.  Output
is deterministic: identical argv yields byte-identical stdout (compositions
enumerate in lexicographic order, JSON keys are sorted).

Exit codes: 0 all requested checks pass, 1 a verified identity failed,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import mpmath

from .compositions import compositions
from .errors import ZetalikeError
from .eta import eta_numeric, eta_symbolic
from .rho import rho_exact
from .verify import SUITES, VerificationReport, run_suite, value_to_json

MAX_TABLE_WEIGHT = 12


def _parse_index(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"index must be comma-separated integers, got {text!r}"
        ) from None
    return parts


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _csv_dumps(rows: list[dict], fieldnames: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _markdown_table(rows: list[dict], fieldnames: list[str]) -> str:
    head = "| " + " | ".join(fieldnames) + " |"
    sep = "| " + " | ".join("---" for _ in fieldnames) + " |"
    body = ["| " + " | ".join(str(r[f]) for f in fieldnames) + " |" for r in rows]
    return "\n".join([head, sep, *body]) + "\n"


# --------------------------------------------------------------------------
# Subcommand implementations
# --------------------------------------------------------------------------

def _cmd_rho(args) -> int:
    value = rho_exact(args.index)
    if args.format == "json":
        print(_json_dumps({
            "index": list(args.index),
            "weight": sum(args.index),
            "depth": len(args.index),
            "value": value_to_json(value),
        }))
    else:
        print(value)
    return 0


def _cmd_eta(args) -> int:
    if args.mode == "symbolic":
        expr = eta_symbolic(args.index)
        if args.format == "json":
            print(_json_dumps({
                "index": list(args.index),
                "weight": sum(args.index),
                "depth": len(args.index),
                "value": value_to_json(expr),
            }))
        else:
            print(expr.render(args.render))
    else:
        approx = eta_numeric(args.index, mode="fast", tolerance=10.0 ** (-args.digits))
        if args.format == "json":
            print(_json_dumps({
                "index": list(args.index),
                "weight": sum(args.index),
                "depth": len(args.index),
                "value": value_to_json(approx),
            }))
        else:
            print(
                f"{mpmath.nstr(approx.value, args.digits)} "
                f"(error <= {mpmath.nstr(approx.error_bound, 3)})"
            )
    return 0


def _table_rows(family: str, weight: int, render: str) -> list[dict]:
    rows = []
    for idx in compositions(weight):
        if family == "rho" and idx[-1] < 2:
            continue
        if family == "rho":
            value_str = str(rho_exact(idx))
            value_json = value_to_json(rho_exact(idx))
        else:
            expr = eta_symbolic(idx)
            value_str = expr.render(render)
            value_json = value_to_json(expr)
        rows.append({
            "weight": weight,
            "depth": len(idx),
            "index": ",".join(map(str, idx)),
            "value": value_str,
            "_json_value": value_json,
            "_index": idx,
        })
    return rows


def _cmd_table(args) -> int:
    if not (2 <= args.weight <= MAX_TABLE_WEIGHT):
        print(
            f"error: table weight must be in 2..{MAX_TABLE_WEIGHT}, got {args.weight}",
            file=sys.stderr,
        )
        return 2
    rows = _table_rows(args.family, args.weight, args.render)
    fields = ["weight", "depth", "index", "value"]
    if args.format == "json":
        print(_json_dumps([
            {
                "index": list(r["_index"]),
                "weight": r["weight"],
                "depth": r["depth"],
                "value": r["_json_value"],
            }
            for r in rows
        ]))
    elif args.format == "csv":
        print(_csv_dumps([{f: r[f] for f in fields} for r in rows], fields), end="")
    else:
        print(_markdown_table([{f: r[f] for f in fields} for r in rows], fields), end="")
    return 0


def _report_row(rep: VerificationReport) -> dict:
    params = ";".join(f"{k}={v}" for k, v in rep.parameters.items())
    d = rep.to_json_dict()
    return {
        "identity": rep.identity_id,
        "parameters": params,
        "passed": "pass" if rep.passed else "FAIL",
        "lhs": _value_brief(d["lhs"]),
        "rhs": _value_brief(d["rhs"]),
        "discrepancy": _value_brief(d["discrepancy"]),
    }


def _value_brief(vjson: dict) -> str:
    if "error_bound" in vjson:
        return f"{vjson['value']}±{vjson['error_bound']}"
    zeta = vjson.get("zeta") or {}
    if not zeta:
        return vjson["constant"]
    terms = [vjson["constant"]] + [f"{c}*zeta({k})" for k, c in sorted(zeta.items(), key=lambda kv: int(kv[0]))]
    return " + ".join(terms)


def _cmd_verify(args) -> int:
    reports = run_suite(args.suite, args.max_weight)
    fields = ["identity", "parameters", "passed", "lhs", "rhs", "discrepancy"]
    rows = [_report_row(r) for r in reports]
    if args.format == "json":
        print(_json_dumps([r.to_json_dict() for r in reports]))
    elif args.format == "csv":
        print(_csv_dumps(rows, fields), end="")
    else:
        print(_markdown_table(rows, fields), end="")
        n_fail = sum(1 for r in reports if not r.passed)
        if n_fail:
            print(f"\n{n_fail} of {len(reports)} checks FAILED")
        else:
            print(f"\nall {len(reports)} checks passed")
    return 0 if all(r.passed for r in reports) else 1


# --------------------------------------------------------------------------
# Parser
# --------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetalike",
        description="Exact rho/eta multiple-value computation and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rho = sub.add_parser("rho", help="exact rho-value of an index")
    p_rho.add_argument("index", type=_parse_index, help="comma-separated entries, e.g. 2,1,3")
    p_rho.add_argument("--format", choices=["text", "json"], default="text")
    p_rho.set_defaults(func=_cmd_rho)

    p_eta = sub.add_parser("eta", help="eta-value of an index")
    p_eta.add_argument("index", type=_parse_index)
    p_eta.add_argument("--mode", choices=["symbolic", "numeric"], default="symbolic")
    p_eta.add_argument("--digits", type=int, default=12)
    p_eta.add_argument("--render", choices=["pi", "zeta"], default="zeta")
    p_eta.add_argument("--format", choices=["text", "json"], default="text")
    p_eta.set_defaults(func=_cmd_eta)

    p_table = sub.add_parser("table", help="all admissible indices of one weight")
    p_table.add_argument("family", choices=["rho", "eta"])
    p_table.add_argument("--weight", type=int, required=True)
    p_table.add_argument("--format", choices=["markdown", "csv", "json"], default="markdown")
    p_table.add_argument("--render", choices=["pi", "zeta"], default="zeta")
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", help="run identity suites")
    p_verify.add_argument(
        "--suite", choices=["all", *SUITES], default="all"
    )
    p_verify.add_argument("--max-weight", type=int, default=None)
    p_verify.add_argument("--format", choices=["markdown", "csv", "json"], default="markdown")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def run(argv: list[str]) -> int:
    """Parse argv and execute; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    if getattr(args, "digits", 1) < 1:
        print("error: --digits must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except ZetalikeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
