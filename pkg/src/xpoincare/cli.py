"""Command-line front end.

Commands: compose, invert, oplus, theta, decompose, check, dump-algebra.
Group elements travel as JSON documents

    {"alpha": 0.0, "a": [0,0,0,0], "omega": [0,0,0,0], "u": [0,0,0],
     "theta": [0,0,0]}

with missing fields defaulting to zero; NaN and infinities are rejected.
Exit codes: 0 success, 2 parse error, 3 decomposition outside the reachable
set, 4 property failure in `check`.

All numeric output is printed with 17 significant digits and a fixed key
order, so identical inputs (and seeds) produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .algebra import (GENERATOR_NAMES, table_from_json_obj, table_to_csv,
                      table_to_json_obj)
from .checks import SUITE_NAMES, element_doc, run_suite
from .lorentz import DecompositionError
from .poincare import GroupParams, compose, inverse, oplus, theta_closed, theta_numeric
from .xlorentz import XLParams, xl_decompose

PARSE_ERROR, UNREACHABLE, PROPERTY_FAILURE = 2, 3, 4

_FIELDS = {"alpha": None, "a": 4, "omega": 4, "u": 3, "theta": 3}


class ParseError(ValueError):
    pass


# --- canonical JSON ----------------------------------------------------------

def _fmt_float(x: float) -> str:
    if not np.isfinite(x):
        raise ValueError("non-finite number in output")
    if x == 0.0:
        x = 0.0  # normalize -0.0
    return format(float(x), ".17g")


def canonical_json(obj, indent: int = 0) -> str:
    """Deterministic JSON text: insertion-ordered keys, 17-digit floats."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{inner}"{k}": {canonical_json(v, indent + 1)}'
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        flat = all(isinstance(v, (int, float, bool)) or v is None for v in obj)
        if flat:
            return "[" + ", ".join(canonical_json(v) for v in obj) + "]"
        items = [inner + canonical_json(v, indent + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    raise TypeError(f"cannot serialize {type(obj)}")


def _print(obj):
    sys.stdout.write(canonical_json(obj) + "\n")


# --- element documents --------------------------------------------------------

def parse_element_obj(obj) -> GroupParams:
    if not isinstance(obj, dict):
        raise ParseError("element document must be a JSON object")
    unknown = set(obj) - set(_FIELDS)
    if unknown:
        raise ParseError(f"unknown element fields: {sorted(unknown)}")
    vals = {}
    for name, length in _FIELDS.items():
        if name not in obj:
            vals[name] = 0.0 if length is None else [0.0] * length
            continue
        v = obj[name]
        if length is None:
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise ParseError(f"field '{name}' must be a number")
            if not np.isfinite(v):
                raise ParseError(f"field '{name}' must be finite")
            vals[name] = float(v)
        else:
            if (not isinstance(v, list) or len(v) != length
                    or any(isinstance(x, bool) or not isinstance(x, (int, float))
                           for x in v)):
                raise ParseError(f"field '{name}' must be a list of {length} numbers")
            if not all(np.isfinite(x) for x in v):
                raise ParseError(f"field '{name}' must be finite")
            vals[name] = [float(x) for x in v]
    return GroupParams(alpha=vals["alpha"], a=np.array(vals["a"]),
                       xl=XLParams(omega=np.array(vals["omega"]),
                                   u=np.array(vals["u"]),
                                   theta=np.array(vals["theta"])))


def load_element(path: str) -> GroupParams:
    return parse_element_obj(_load_json(path))


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}, "
                         f"column {exc.colno}: {exc.msg}") from exc


def _matrix_out(m: np.ndarray, labels: bool, as_csv: bool) -> None:
    if as_csv:
        lines = []
        if labels:
            lines.append("," + ",".join(GENERATOR_NAMES))
        for i, row in enumerate(m):
            cells = ["" if np.isnan(x) else _fmt_float(float(x)) for x in row]
            prefix = GENERATOR_NAMES[i] + "," if labels else ""
            lines.append(prefix + ",".join(cells))
        sys.stdout.write("\n".join(lines) + "\n")
        return
    rows = [[None if np.isnan(x) else float(x) for x in row] for row in m]
    doc = {"labels": list(GENERATOR_NAMES), "matrix": rows} if labels \
        else {"matrix": rows}
    _print(doc)


# --- commands -------------------------------------------------------------------

def cmd_compose(args) -> int:
    g2, g1 = load_element(args.left), load_element(args.right)
    _print(element_doc(compose(g2, g1)))
    return 0


def cmd_invert(args) -> int:
    _print(element_doc(inverse(load_element(args.element))))
    return 0


def cmd_oplus(args) -> int:
    _matrix_out(oplus(load_element(args.element)), args.labels, args.csv)
    return 0


def cmd_theta(args) -> int:
    g = load_element(args.element)
    m = theta_closed(g) if args.closed else theta_numeric(g)
    _matrix_out(m, args.labels, args.csv)
    return 0


def cmd_decompose(args) -> int:
    obj = _load_json(args.matrix)
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise ParseError("matrix document must be an object with a 'matrix' field")
    m = obj["matrix"]
    if (not isinstance(m, list) or len(m) != 5
            or any(not isinstance(r, list) or len(r) != 5 for r in m)):
        raise ParseError("'matrix' must be a 5x5 array of numbers")
    arr = np.array(m, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ParseError("'matrix' must be finite")
    p = xl_decompose(arr)
    _print(element_doc(GroupParams(xl=p)))
    return 0


def cmd_check(args) -> int:
    table = None
    if args.constants:
        table = table_from_json_obj(_load_json(args.constants))
    report = run_suite(args.suite, args.trials, args.seed, table)
    _print(report)
    return 0 if report["pass"] else PROPERTY_FAILURE


def cmd_dump_algebra(args) -> int:
    if args.format == "csv":
        sys.stdout.write(table_to_csv(both_orders=args.full))
    else:
        _print(table_to_json_obj(both_orders=args.full))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="xpoincare",
        description="Extended Poincare group toolkit: compose and invert group "
                    "elements, emit representation matrices, run verification "
                    "suites.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compose", help="compose two elements, left times right")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(fn=cmd_compose)

    p = sub.add_parser("invert", help="invert an element")
    p.add_argument("element")
    p.set_defaults(fn=cmd_invert)

    for name, fn, extra in (("oplus", cmd_oplus, ()),
                            ("theta", cmd_theta, ("--numeric", "--closed"))):
        p = sub.add_parser(name, help=f"emit the 15x15 {name} matrix")
        p.add_argument("element")
        p.add_argument("--csv", action="store_true", help="CSV instead of JSON")
        p.add_argument("--labels", action="store_true",
                       help="prepend generator names")
        if extra:
            mode = p.add_mutually_exclusive_group()
            mode.add_argument("--numeric", action="store_true", default=True)
            mode.add_argument("--closed", action="store_true",
                              help="closed-form entries; unclaimed block is null")
        p.set_defaults(fn=fn)

    p = sub.add_parser("decompose",
                       help="factor a 5x5 extended-Lorentz matrix into parameters")
    p.add_argument("--matrix", required=True, help="JSON file with a 5x5 'matrix'")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("check", help="run verification suites")
    p.add_argument("--suite", default="all", choices=list(SUITE_NAMES) + ["all"])
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--constants",
                   help="JSON structure-constant table replacing the builtin "
                        "(jacobi/casimir suites)")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("dump-algebra", help="emit the structure-constant table")
    p.add_argument("--format", default="json", choices=["json", "csv"])
    p.add_argument("--full", action="store_true",
                   help="list both orders of each antisymmetric pair")
    p.set_defaults(fn=cmd_dump_algebra)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    except DecompositionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return UNREACHABLE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_ERROR


if __name__ == "__main__":
    sys.exit(main())
