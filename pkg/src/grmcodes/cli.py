"""Command-line front end.

Exit codes: 0 success, 1 internal error or failed reproduction, 2 invalid
parameters, 3 a requested exact quantity could not be certified within budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import codes as cc
from .analysis.bounds import HTSearchCaps
from .analysis.enumeration import DEFAULT_MAX_ENUM, BudgetExceeded
from .analysis.report import analyze, dumps, verify_paper_tables, GROUPS
from .cyclotomic import all_cosets
from .field import DEFAULT_MAX_ORDER, prime_power
from .polynomial import factor_xn_minus_1

EXIT_OK, EXIT_INTERNAL, EXIT_PARAMS, EXIT_BUDGET = 0, 1, 2, 3


class ParameterError(ValueError):
    pass


def _positive(s: str) -> int:
    v = int(s)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--output", "-o", help="write to this file instead of standard output")


def _add_code_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=("grm", "pgrm", "bch", "reversible"), required=True)
    p.add_argument("--q", type=int, required=True, help="field size (prime power)")
    p.add_argument("--m", type=int, help="extension degree; n = q^m - 1")
    p.add_argument("--h", type=int, help="weight threshold for grm / reversible")
    p.add_argument("--l", type=int, dest="ell", help="order for pgrm")
    p.add_argument("--n", type=int, help="length for bch (default q^m - 1)")
    p.add_argument("--delta", type=int, help="designed distance for bch")
    p.add_argument("--b", type=int, default=1, help="first designed zero for bch")
    v = p.add_mutually_exclusive_group()
    v.add_argument("--dual", action="store_true", help="take the dual code")
    v.add_argument("--complement", action="store_true", help="take the code generated by the check polynomial")
    p.add_argument("--extend", action="store_true", help="append the overall parity coordinate")
    p.add_argument("--field-cap", type=_positive, default=DEFAULT_MAX_ORDER,
                   help="largest field order for which tables are built")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grmcodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code and print its descriptor")
    _add_code_args(p)
    _add_output(p)

    p = sub.add_parser("analyze", help="dimension, distance, bounds, weights, designs")
    _add_code_args(p)
    _add_output(p)
    p.add_argument("--weights", action="store_true")
    p.add_argument("--designs", action="store_true")
    p.add_argument("--max-enum", type=_positive, default=DEFAULT_MAX_ENUM,
                   help="codeword enumeration budget")
    p.add_argument("--ht-max-runs", type=_positive, default=HTSearchCaps.max_runs,
                   help="Hartmann-Tzeng search: number of consecutive runs tried")
    p.add_argument("--threads", type=_positive, default=1)

    p = sub.add_parser("verify-paper", help="recompute the worked examples")
    p.add_argument("--only", choices=GROUPS)
    p.add_argument("--max-enum", type=_positive, default=DEFAULT_MAX_ENUM)
    p.add_argument("--threads", type=_positive, default=1)
    _add_output(p)

    for name, helptext in (("factor", "irreducible factors of x^n - 1"), ("cosets", "q-cyclotomic cosets mod n")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--n", type=_positive, required=True)
        p.add_argument("--q", type=int, required=True)
        _add_output(p)
    return parser


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise ParameterError(f"--family {args.family} needs " + ", ".join("--" + n.replace("ell", "l") for n in missing))


def make_code(args):
    """Validate parameters, then build the requested code."""
    try:
        prime_power(args.q)
    except ValueError as exc:
        raise ParameterError(str(exc)) from exc
    cap = args.field_cap
    if args.family in ("grm", "reversible"):
        _require(args, "m", "h")
    elif args.family == "pgrm":
        _require(args, "m", "ell")
    else:
        _require(args, "delta")
        if args.n is None:
            _require(args, "m")
    try:
        if args.family == "grm":
            code = cc.grm(args.q, args.m, args.h, max_order=cap)
        elif args.family == "pgrm":
            code = cc.pgrm(args.q, args.m, args.ell, max_order=cap)
        elif args.family == "reversible":
            code = cc.reversible_grm(args.q, args.m, args.h, max_order=cap)
        else:
            n = args.n if args.n is not None else args.q**args.m - 1
            code = cc.bch(args.q, n, args.delta, args.b, max_order=cap)
        if args.dual:
            code = cc.dual(code)
        elif args.complement:
            code = cc.complement(code)
        if args.extend:
            code = cc.extend(code)
    except ValueError as exc:
        raise ParameterError(str(exc)) from exc
    return code


def _emit(text: str, args) -> None:
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _label(code) -> str:
    d = code.descriptor()
    return f"{d['family']} {json.dumps(d['params'], sort_keys=True)}"


def cmd_construct(args) -> int:
    code = make_code(args)
    d = code.descriptor()
    if args.format == "json":
        _emit(dumps(d), args)
    else:
        lines = [
            f"code       {_label(code)}",
            f"[n, k]     [{code.length}, {code.k}] over GF({code.q})",
            f"field      GF({d['field']['p']}^{d['field']['k']}) modulus {d['field']['modulus']}",
            f"generator  {d['generator']}",
            f"T          {d['defining_set']}",
        ]
        if getattr(code, "trivial", False):
            lines.append("note       trivial code")
        _emit("\n".join(lines), args)
    return EXIT_OK


def cmd_analyze(args) -> int:
    code = make_code(args)
    try:
        report = analyze(
            code, weights=args.weights, designs=args.designs, budget=args.max_enum,
            ht_caps=HTSearchCaps(max_runs=args.ht_max_runs), threads=args.threads,
        )
    except BudgetExceeded as exc:
        sys.stderr.write(f"budget exhausted: {exc}\n")
        return EXIT_BUDGET
    if args.format == "json":
        _emit(dumps(report), args)
    else:
        d = report["d"]
        dv = "-" if d is None else (str(d["value"]) if d["status"] == "exact" else f">={d['value']}")
        b = report["bounds"]
        lines = [
            f"code       {_label(code)}",
            f"[n, k, d]  [{code.length}, {code.k}, {dv}]",
        ]
        if d is not None:
            lines.append(f"distance   {d['status']} via {d['method']} ({d['enumeration_count']} codewords)")
        lines.append(
            f"bounds     BCH {b['bch']}  HT {b['hartmann_tzeng']}  "
            f"known lower {b['paper_lower']}  known upper {b['paper_upper']}"
        )
        if "closed_form_k" in report:
            lines.append(f"closed k   {report['closed_form_k']}")
        if "affine_invariant" in report:
            lines.append(f"affine     {'invariant' if report['affine_invariant'] else 'not invariant'}")
        if "weights" in report:
            lines.append("weights    " + " + ".join(
                f"{a}" if i == "0" else f"{a}z^{i}" for i, a in sorted(report["weights"].items(), key=lambda t: int(t[0]))))
        for c in report.get("designs", []):
            tag = f"2-({c['v']},{c['k']},{c['lambda']})" if c["uniform"] else f"not uniform ({c['v']},{c['k']})"
            lines.append(f"design     {tag}  b={c['b']}")
        _emit("\n".join(lines), args)
    d = report["d"]
    return EXIT_BUDGET if d is not None and d["status"] != "exact" else EXIT_OK


def cmd_verify_paper(args) -> int:
    items = verify_paper_tables(args.only, args.max_enum, args.threads)
    failures = sum(not it.passed for it in items)
    if args.format == "json":
        _emit(dumps({"items": [it.as_dict() for it in items], "failures": failures}), args)
    else:
        lines = [
            f"{'PASS' if it.passed else 'FAIL'}  {it.group:<11} {it.name:<40} {json.dumps(it.observed)}"
            for it in items
        ]
        lines.append(f"{len(items) - failures}/{len(items)} passed")
        _emit("\n".join(lines), args)
    return EXIT_OK if failures == 0 else EXIT_INTERNAL


def cmd_factor(args) -> int:
    try:
        factors = factor_xn_minus_1(args.n, args.q)
    except ValueError as exc:
        raise ParameterError(str(exc)) from exc
    if args.format == "json":
        _emit(dumps({"n": args.n, "q": args.q, "factors": {str(s): f.to_list() for s, f in factors.items()}}), args)
    else:
        _emit("\n".join(f"m_{s:<6} deg {f.degree:<4} {f.to_list()}" for s, f in factors.items()), args)
    return EXIT_OK


def cmd_cosets(args) -> int:
    try:
        prime_power(args.q)
        cs = all_cosets(args.n, args.q)
    except ValueError as exc:
        raise ParameterError(str(exc)) from exc
    if args.format == "json":
        _emit(dumps({"n": args.n, "q": args.q, "cosets": [list(c) for c in cs.cosets]}), args)
    else:
        _emit("\n".join(f"C_{c[0]:<6} {list(c)}" for c in cs.cosets), args)
    return EXIT_OK


COMMANDS = {
    "construct": cmd_construct,
    "analyze": cmd_analyze,
    "verify-paper": cmd_verify_paper,
    "factor": cmd_factor,
    "cosets": cmd_cosets,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ParameterError as exc:
        sys.stderr.write(f"invalid parameters: {exc}\n")
        return EXIT_PARAMS
    except BudgetExceeded as exc:
        sys.stderr.write(f"budget exhausted: {exc}\n")
        return EXIT_BUDGET
    except Exception as exc:  # noqa: BLE001
        sys.stderr.write(f"internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
