"""Command-line interface: ``galois-inertia <command> ...``.

Data goes to standard output (or ``-o FILE``); errors go to standard error
as one line ``error CODE: message``. Exit status is 0 on success, 1 on usage
or validation errors and 2 when a verification property fails.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

import numpy as np

from .complex_maps import jbar_map
from .core import InertiaError, validate_triple
from .extension import ExtendedElement, ext_apply, ext_inverse, ext_mul
from .geometry import (
    circular_section_residual,
    falsify_search,
    galois_axes,
    maccullagh_residual,
    parse_rule,
)
from .real_maps import j_map
from .verification import report_dict, run_verification


class UsageError(Exception):
    code = "USAGE"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def fmt(v) -> str:
    """Shortest round-trip decimal; integral values without a trailing ``.0``."""
    if isinstance(v, complex):
        if v.imag != 0.0:
            sign = "-" if math.copysign(1.0, v.imag) < 0 else "+"
            return f"{fmt(v.real)}{sign}{fmt(abs(v.imag))}j"
        v = v.real
    v = float(v)
    if v.is_integer() and abs(v) < 2.0**53:
        return str(int(v))
    return repr(v)


def _jsonable(v):
    if isinstance(v, complex):
        return v.real if v.imag == 0.0 else {"re": v.real, "im": v.imag}
    if isinstance(v, (np.floating, np.integer)):
        return v.item()
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def _dump_json(obj) -> str:
    def walk(o):
        if isinstance(o, dict):
            return {k: walk(v) for k, v in o.items()}
        if isinstance(o, (list, tuple)):
            return [walk(v) for v in o]
        return _jsonable(o)

    return json.dumps(walk(obj), indent=2, sort_keys=True) + "\n"


def _number(text: str, allow_complex: bool):
    text = text.strip()
    try:
        return float(text)
    except ValueError:
        if not allow_complex:
            raise UsageError(f"not a real number: {text!r}") from None
    try:
        return complex(text.replace("i", "j"))
    except ValueError:
        raise UsageError(f"not a number: {text!r}") from None


def _numbers(text: str, count: int, allow_complex: bool = False) -> list:
    parts = text.split(",")
    if len(parts) != count:
        raise UsageError(f"expected {count} comma-separated values, got {text!r}")
    return [_number(p, allow_complex) for p in parts]


def _shift(args, allow_complex: bool):
    if args.x is not None and args.distance is not None:
        raise UsageError("give either -x or --distance, not both")
    if args.distance is not None:
        if not args.mass > 0:
            raise UsageError("--mass must be positive")
        return args.mass * args.distance**2
    if args.mass != 1.0:
        raise UsageError("--mass only applies together with --distance")
    if args.x is None:
        raise UsageError("one of -x or --distance is required")
    return _number(args.x, allow_complex)


def _csv(rows: Sequence[Sequence]) -> str:
    return "".join(",".join(fmt(v) if not isinstance(v, str) else v for v in row) + "\n" for row in rows)


# -- commands --------------------------------------------------------------


def cmd_map(args) -> tuple[str, int]:
    if args.complex:
        t = _numbers(args.triple, 3, allow_complex=True)
        x = _shift(args, allow_complex=True)
        lam = tuple(jbar_map(t, x))
    else:
        t = validate_triple(*_numbers(args.triple, 3))
        x = _shift(args, allow_complex=False)
        lam = tuple(j_map(t, x, correctly_rounded=True))
    if args.format == "json":
        return _dump_json({"triple": list(t), "x": x, "lambda1": lam[0], "lambda2": lam[1], "lambda3": lam[2]}), 0
    return _csv([lam]), 0


def cmd_orbit(args) -> tuple[str, int]:
    t = validate_triple(*_numbers(args.triple, 3))
    if args.steps < 2:
        raise UsageError("--steps must be at least 2")
    if not (math.isfinite(args.x0) and math.isfinite(args.x1)) or args.x0 < 0 or args.x1 < args.x0:
        raise UsageError("need 0 <= x0 <= x1")
    xs = np.linspace(args.x0, args.x1, args.steps + 1)
    rows = [(float(x), *j_map(t, float(x), correctly_rounded=True)) for x in xs]
    if args.format == "json":
        keys = ("x", "lambda1", "lambda2", "lambda3")
        return _dump_json({"triple": list(t), "rows": [dict(zip(keys, r)) for r in rows]}), 0
    return "x,lambda1,lambda2,lambda3\n" + _csv(rows), 0


def cmd_axes(args) -> tuple[str, int]:
    t = validate_triple(*_numbers(args.triple, 3))
    entries = []
    for sheet, n in zip("+-", galois_axes(t)):
        entries.append({
            "sheet": sheet,
            "n": [float(c) for c in n],
            "maccullagh_residual": maccullagh_residual(t, n),
            "circular_section_residual": circular_section_residual(t, n),
        })
    if args.format == "csv":
        rows = [(e["sheet"], *e["n"], e["maccullagh_residual"]) for e in entries]
        return "sheet,n1,n2,n3,maccullagh_residual\n" + _csv(rows), 0
    return _dump_json({"triple": list(t), "axes": entries}), 0


def cmd_verify(args) -> tuple[str, int]:
    triple = validate_triple(*_numbers(args.triple, 3)) if args.triple else None
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    results = run_verification(triple, args.samples, args.seed)
    report = report_dict(results, seed=args.seed, samples=args.samples,
                         triple=list(triple) if triple else None)
    return _dump_json(report), 0 if report["all_pass"] else 2


def _element(text: str, context: str) -> ExtendedElement:
    a, b = _numbers(text, 2, allow_complex=context == "complex")
    return ExtendedElement(a, b, context)


def cmd_extended(args) -> tuple[str, int]:
    context = "real" if args.real else "complex"
    if args.mul:
        e = ext_mul(_element(args.mul[0], context), _element(args.mul[1], context))
        return _csv([(e.a, e.b)]), 0
    if args.inverse:
        e = ext_inverse(_element(args.inverse, context))
        return _csv([(e.a, e.b)]), 0
    if not args.triple:
        raise UsageError("--apply needs -t")
    e = _element(args.apply, context)
    t = _numbers(args.triple, 3, allow_complex=context == "complex")
    if context == "real":
        t = validate_triple(*t)
    return _csv([tuple(ext_apply(e, t))]), 0


def cmd_falsify(args) -> tuple[str, int]:
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    try:
        rules = [parse_rule(r) for r in args.rules.split(",")]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = falsify_search(rules, args.samples, args.seed, workers=args.workers)
    return _dump_json(report.to_dict()), 0


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="galois-inertia", description="Inertia maps along the Galois axis of a rigid body.")
    parser.add_argument("-o", "--output", help="write data to this file instead of standard output")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def triple_opt(p, required=True):
        p.add_argument("-t", "--triple", required=required, help="principal moments A,B,C")

    p = sub.add_parser("map", help="apply j(x) (or jbar(x) with --complex) to a triple")
    triple_opt(p)
    p.add_argument("-x", help="Steiner parameter x = m d^2")
    p.add_argument("--distance", type=float, help="distance d from the centre of mass")
    p.add_argument("--mass", type=float, default=1.0, help="mass m used with --distance (default 1)")
    p.add_argument("--complex", action="store_true", help="use the complex two-valued map")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("orbit", help="CSV curve of lambda_i(x) over an x range")
    triple_opt(p)
    p.add_argument("--x0", type=float, default=0.0)
    p.add_argument("--x1", type=float, required=True)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("axes", help="Galois axes and their circular-section residuals")
    triple_opt(p)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.set_defaults(func=cmd_axes)

    p = sub.add_parser("verify", help="run the sampled property suites, JSON report")
    triple_opt(p, required=False)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=7)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extended", help="multiply, invert or apply (scale, shift) elements")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--mul", nargs=2, metavar="A,B", help="product of two elements (right acts first)")
    group.add_argument("--inverse", metavar="A,B")
    group.add_argument("--apply", metavar="A,B", help="act on the triple given with -t")
    triple_opt(p, required=False)
    p.add_argument("--real", action="store_true", help="semigroup context: a > 0, b >= 0")
    p.set_defaults(func=cmd_extended)

    p = sub.add_parser("falsify", help="additivity search over axis rules, JSON report")
    p.add_argument("--rules", default="galois,principal:1,fixed:1:1:1",
                   help="comma-separated rules: galois, galois:-, principal:K, fixed:X:Y:Z")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_falsify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        text, status = args.func(args)
    except (UsageError, InertiaError) as exc:
        print(f"error {exc.code}: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
