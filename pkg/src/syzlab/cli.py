"""Command-line front end: ``syzlab analyze|generate|recognize|eigen|polar|verify``.

JSON goes to stdout, logs to stderr.  Exit status 0 on success, 1 when a
``verify`` suite finds a violation, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

import numpy as np

from .algebra import HPoly
from .arrangements import (
    CurveInput,
    FamilyTag,
    InvalidArrangement,
    generate_family,
    random_coordinate_change,
    random_params,
    recognize,
    validate,
    change_coordinates,
)
from .eigenscheme import NotEigenscheme, NotZeroDimensional, blowup_class, eigenscheme_degree, jacobian_to_tensor
from .graded import NoPlateau
from .jacobian import analyze
from .parsing import ParseError, format_poly, parse_components
from .polar import polar_report
from .verify import SUITES, run_suite

__all__ = ["main", "build_parser", "to_json"]

log = logging.getLogger("syzlab")


class InputError(Exception):
    pass


def to_json(obj):
    """Exact values made JSON-safe: rationals become ``"p/q"`` strings."""
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, HPoly):
        return format_poly(obj)
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json(v) for v in obj]
    return obj


def _read_curve(arg: str) -> CurveInput:
    """A polynomial, a file of components (one per line), or components separated by ``;``."""
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return CurveInput(parse_components(fh.read()))
    return CurveInput(parse_components(arg.replace(";", "\n")))


def _cmd_analyze(args):
    c = _read_curve(args.curve)
    f = c.product
    rep = analyze(f)
    return {"poly": format_poly(f)}, rep.to_dict(), []


def _cmd_generate(args):
    tag = FamilyTag.parse(args.tag)
    rng = np.random.default_rng(np.random.SeedSequence([args.seed]))
    params = random_params(tag, args.m, rng)
    c = generate_family(tag, params)
    M = None
    if args.random_coords:
        M = random_coordinate_change(rng)
        c = change_coordinates(c, M)
    result = {
        "tag": str(tag),
        "params": [list(p) if isinstance(p, tuple) else p for p in params],
        "degree": c.degree,
        "components": [format_poly(g) for g in c.components],
        "product": format_poly(c.product),
        "coordinate_change": M,
    }
    return {"tag": str(tag), "m": args.m, "seed": args.seed, "random_coords": args.random_coords}, result, []


def _cmd_recognize(args):
    c = _read_curve(args.curve)
    diags = validate(c)
    if diags:
        raise InvalidArrangement(diags)
    tag = recognize(c)
    return {"components": [format_poly(g) for g in c.components]}, {"family": str(tag)}, []


def _cmd_eigen(args):
    f = _read_curve(args.curve).product
    result = {"d": f.degree}
    try:
        T = jacobian_to_tensor(f)
    except NotEigenscheme as exc:
        result.update(eigenscheme=False, reason=exc.reason, detail=str(exc))
    else:
        result.update(eigenscheme=True, tensor=[format_poly(g) for g in T.components])
        try:
            result["eigenscheme_degree"] = eigenscheme_degree(T)
        except NotZeroDimensional as exc:
            result["eigenscheme_degree"] = None
            result["detail"] = str(exc)
        if f.degree >= 3:
            result["blowup_class"] = list(blowup_class(f.degree))
    return {"poly": format_poly(f)}, result, []


def _cmd_polar(args):
    c = _read_curve(args.curve)
    diags = validate(c, recognition=False)
    if diags:
        raise InvalidArrangement(diags)
    return {"components": [format_poly(g) for g in c.components]}, polar_report(c).to_dict(), []


def _cmd_verify(args):
    report = run_suite(args.suite, args.trials, args.seed, threads=args.threads)
    diags = [
        {"kind": "violation", "trial": r["trial"], "failed": [k for k, v in r["checks"].items() if not v]}
        for r in report["records"]
        if not r["ok"]
    ]
    return {"suite": args.suite, "trials": args.trials, "seed": args.seed}, report, diags


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="syzlab", description="Exact Jacobian syzygies of plane curves.")
    p.add_argument("--output", choices=("json", "text"), default="json")
    p.add_argument("-v", "--verbose", action="count", default=0)
    # the same options after the subcommand; SUPPRESS keeps the top-level value otherwise
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "text"), default=argparse.SUPPRESS)
    common.add_argument("-v", "--verbose", action="count", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="mdr, Tjurina number, freeness and Hilbert table", parents=[common])
    a.add_argument("curve", help="polynomial, component file, or components separated by ';'")
    a.set_defaults(func=_cmd_analyze)

    g = sub.add_parser("generate", help="random member of a family", parents=[common])
    g.add_argument("tag", help="L, C1, C2, CL1 ... CL6")
    g.add_argument("--m", type=int, default=2, help="number of conics (lines through the point for L)")
    g.add_argument("--random-coords", action="store_true")
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=_cmd_generate)

    r = sub.add_parser("recognize", help="family of a factored curve", parents=[common])
    r.add_argument("curve")
    r.set_defaults(func=_cmd_recognize)

    e = sub.add_parser("eigen", help="is the Jacobian scheme an eigenscheme", parents=[common])
    e.add_argument("curve")
    e.set_defaults(func=_cmd_eigen)

    o = sub.add_parser("polar", help="contracted lines, polar degree and Hessian divisibility", parents=[common])
    o.add_argument("curve")
    o.set_defaults(func=_cmd_polar)

    v = sub.add_parser("verify", help="seeded invariant suite", parents=[common])
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--trials", type=int, default=10)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--threads", type=int, default=None, help="defaults to $SYZLAB_THREADS or 1")
    v.set_defaults(func=_cmd_verify)
    return p


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if (isinstance(v, dict) and v) or (isinstance(v, list) and any(isinstance(i, (dict, list)) for i in v)):
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(obj, list):
        for item in obj:
            sub = _text(item, indent + 1)
            lines.append(f"{pad}-" + (sub[0][len(pad) + 1 :] if sub else ""))
            lines.extend(sub[1:])
    else:
        lines.append(f"{pad}{obj}")
    return lines


def _emit(args, payload: dict) -> None:
    if args.output == "json":
        print(json.dumps(to_json(payload), indent=2, sort_keys=True))
    else:
        print("\n".join(_text(to_json(payload))))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        inp, result, diags = args.func(args)
    except (ParseError, InvalidArrangement, InputError, ValueError, NoPlateau) as exc:
        diag = {"kind": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, ParseError):
            diag.update(parse_kind=exc.kind, position=exc.position, degrees=exc.degrees)
        if isinstance(exc, InvalidArrangement):
            diag["details"] = [d.to_dict() for d in exc.diagnostics]
        log.error("%s", exc)
        _emit(args, {"schema_version": 1, "input": {"command": args.command}, "result": None, "diagnostics": [diag]})
        return 2
    _emit(args, {"schema_version": 1, "input": {"command": args.command, **inp}, "result": result, "diagnostics": diags})
    if args.command == "verify" and not result["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
