"""Command line: ``charhopf coproduct|shuffle|omega|verify``.

Exit codes: 0 on success (or every identity passing), 1 when a verification
fails, 2 on usage, parse or evaluation errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import InhomogeneousBracket, ModeError, SpecializationError, \
    UndefinedScaledElement, ZeroDivisorError
from .freealg import SkewElement
from .hopf import coproduct
from .parser import Engine, EngineConfig, ExpressionError
from .render import render, to_json_obj
from .verify import IDENTITIES, VerifyOptions, run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_ENGINE_ERRORS = (ExpressionError, ModeError, UndefinedScaledElement, InhomogeneousBracket,
                  ZeroDivisorError, SpecializationError)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("free", "g2"), default="free",
                        help="free parameters p_ij, or the G2 specialization")
    common.add_argument("--n", type=int, default=2, help="number of variables (default 2)")
    common.add_argument("--format", choices=("text", "latex", "json"),
                        default=os.environ.get("CHARHOPF_FORMAT", "text"))

    ap = argparse.ArgumentParser(prog="charhopf", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coproduct", parents=[common], help="coproduct of an element of G<X>")
    p.add_argument("--element", required=True)

    p = sub.add_parser("shuffle", parents=[common], help="shuffle product of two comonomial sums")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = sub.add_parser("omega", parents=[common], help="image of an element of k<X> in Sh(W)")
    p.add_argument("--element", required=True)

    p = sub.add_parser("verify", parents=[common], help="run identity checks")
    p.add_argument("--identity", default="all",
                   help=f"one of {', '.join(IDENTITIES)}, or all (default)")
    p.add_argument("--max-n", type=int, default=None, help="override each family's range")
    p.add_argument("--seed", type=int, default=VerifyOptions.seed)
    p.add_argument("--cases", type=int, default=VerifyOptions.cases)
    p.add_argument("--printed", action="store_true",
                   help="use the G2 constants exactly as printed (expected to fail)")
    return ap


def _engine(args) -> Engine:
    return Engine(EngineConfig(n=args.n, mode=args.mode, format=args.format))


def _element(engine: Engine, text: str) -> SkewElement:
    v = engine.parse(text)
    return v if isinstance(v, SkewElement) else engine.algebra.scalar(v)


def _as_shuffle(engine: Engine, a: SkewElement):
    if not a.is_free():
        raise ExpressionError("shuffle operands must have trivial group parts")
    return engine.shuffle.element({w: c for (_, w), c in a.terms.items()})


def _cmd_coproduct(args, out) -> int:
    eng = _engine(args)
    print(render(coproduct(_element(eng, args.element)), args.format), file=out)
    return EXIT_OK


def _cmd_shuffle(args, out) -> int:
    eng = _engine(args)
    a = _as_shuffle(eng, _element(eng, args.left))
    b = _as_shuffle(eng, _element(eng, args.right))
    print(render(a * b, args.format), file=out)
    return EXIT_OK


def _cmd_omega(args, out) -> int:
    eng = _engine(args)
    a = _element(eng, args.element)
    if not a.is_free():
        raise ExpressionError("Omega is defined on k<X>; the element has group parts")
    print(render(eng.shuffle.omega(a), args.format), file=out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    if args.identity != "all" and args.identity not in IDENTITIES:
        raise ExpressionError(f"unknown identity {args.identity!r}; "
                              f"choose from {', '.join(IDENTITIES)} or all")
    names = None if args.identity == "all" else [args.identity]
    opts = VerifyOptions(max_n=args.max_n, seed=args.seed, cases=args.cases,
                         printed=args.printed)
    reports = run_all(opts, names)
    passed = all(r.passed for r in reports)
    if args.format == "json":
        doc = {"passed": passed, "identities": [to_json_obj(r) for r in reports]}
        print(json.dumps(doc, indent=2), file=out)
    else:
        for r in reports:
            print(render(r, args.format), file=out)
        print(f"{sum(r.passed for r in reports)}/{len(reports)} passed", file=out)
    return EXIT_OK if passed else EXIT_FAIL


_COMMANDS = {"coproduct": _cmd_coproduct, "shuffle": _cmd_shuffle,
             "omega": _cmd_omega, "verify": _cmd_verify}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        EngineConfig(n=args.n, mode=args.mode, format=args.format)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, out)
    except _ENGINE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
