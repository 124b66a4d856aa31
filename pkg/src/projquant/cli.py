"""Command-line surface.

Subcommands: spectrum, critical, resonances, quantize, symbol, verify.
All numeric input and output is exact rational text (p/q or integer);
decimal input is rejected.  Exit codes: 0 success, 1 usage or parse error,
2 mathematical obstruction.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .casimir import casimir_eigenvalue
from .densities import Context, SymbolPoly, BidiffOp
from .parsing import ParseError, format_poly, parse_poly
from .quantization import ObstructionError, quantize, symbol_map
from .resonance import classify_shift, critical_values_in_interval
from .verify import run_suite

USAGE_EXIT = 1
OBSTRUCTION_EXIT = 2

_RATIONAL = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


class UsageError(Exception):
    pass


def parse_rational(text: str) -> Fraction:
    if not _RATIONAL.match(text.strip()):
        raise UsageError(
            f"expected an exact rational like 3 or -5/7, got {text!r}")
    return Fraction(text)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="projquant", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    spectrum = sub.add_parser("spectrum", help="eigenvalue table")
    spectrum.add_argument("--n", type=int, required=True)
    spectrum.add_argument("--delta", required=True)
    spectrum.add_argument("--max-order", type=int, default=4)
    spectrum.add_argument("--json", action="store_true")

    critical = sub.add_parser("critical", help="critical shifts in an interval")
    critical.add_argument("--n", type=int, required=True)
    critical.add_argument("--range", nargs=2, required=True,
                          metavar=("LO", "HI"))
    critical.add_argument("--json", action="store_true")

    resonances = sub.add_parser("resonances", help="classify one shift")
    resonances.add_argument("--n", type=int, required=True)
    resonances.add_argument("--delta", required=True)
    resonances.add_argument("--max-order", type=int, default=6)
    resonances.add_argument("--json", action="store_true")

    quant = sub.add_parser("quantize", help="prolong a symbol")
    quant.add_argument("--n", type=int, required=True)
    quant.add_argument("--lambda1", required=True)
    quant.add_argument("--lambda2", required=True)
    quant.add_argument("--mu", required=True)
    quant.add_argument("expr")

    symb = sub.add_parser("symbol", help="symbol of an operator")
    symb.add_argument("--n", type=int, required=True)
    symb.add_argument("--lambda1", required=True)
    symb.add_argument("--lambda2", required=True)
    symb.add_argument("--mu", required=True)
    symb.add_argument("expr")

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", required=True)
    verify.add_argument("--n", type=int, default=2)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--max-order", type=int, default=3)
    verify.add_argument("--json", action="store_true")

    return parser


def _emit(payload, as_json: bool, text_lines) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_spectrum(args) -> int:
    delta = parse_rational(args.delta)
    rows = []
    for i in range(args.max_order + 1):
        for p in range(0 if args.n == 1 else i // 2 + 1):
            rows.append([i, p, str(casimir_eigenvalue(args.n, delta, i, p))])
    _emit({"delta": str(delta), "gamma": rows}, args.json,
          [f"i={i} p={p} gamma={g}" for i, p, g in rows])
    return 0


def _cmd_critical(args) -> int:
    lo = parse_rational(args.range[0])
    hi = parse_rational(args.range[1])
    grouped = critical_values_in_interval(args.n, lo, hi)
    payload = [{"delta": str(d),
                "tuples": [[t.i, t.p, t.j, t.q] for t in tuples]}
               for d, tuples in grouped]
    lines = [f"delta={entry['delta']} tuples={entry['tuples']}"
             for entry in payload]
    if not lines:
        lines = ["no critical shifts in the interval"]
    _emit(payload, args.json, lines)
    return 0


def _cmd_resonances(args) -> int:
    delta = parse_rational(args.delta)
    result = classify_shift(args.n, delta, args.max_order)
    payload = {
        "delta": str(delta),
        "tuples": [[t.i, t.p, t.j, t.q, t.critical] for t in result.tuples],
        "checks": {"kind": result.kind,
                   "max_order": result.max_order,
                   "critical_bound_index": result.critical_bound},
    }
    lines = [f"delta={delta}: {result.kind} "
             f"(resonances complete up to order {result.max_order}; "
             f"criticality certified, bound index {result.critical_bound})"]
    for t in result.tuples:
        lines.append(f"  ({t.i},{t.p};{t.j},{t.q})"
                     + (" critical" if t.critical else " not critical"))
    _emit(payload, args.json, lines)
    return 0


def _context_from(args) -> Context:
    return Context(args.n, (parse_rational(args.lambda1),
                            parse_rational(args.lambda2)),
                   parse_rational(args.mu))


def _cmd_quantize(args) -> int:
    ctx = _context_from(args)
    body = parse_poly(args.expr, args.n)
    try:
        result = quantize(SymbolPoly(body, ctx))
    except ObstructionError as err:
        print(json.dumps({"obstruction": {
            "source": list(err.source),
            "blocked": list(err.blocked),
            "component": format_poly(err.obstruction.body),
        }}, sort_keys=True))
        return OBSTRUCTION_EXIT
    print(json.dumps({
        "input": format_poly(body),
        "operator": format_poly(result.operator.body),
        "free_slots": sorted([i, p] for i, p in result.free_slots),
        "unique": result.unique,
    }, sort_keys=True))
    return 0


def _cmd_symbol(args) -> int:
    ctx = _context_from(args)
    body = parse_poly(args.expr, args.n)
    try:
        result = symbol_map(BidiffOp(body, ctx))
    except ObstructionError as err:
        print(json.dumps({"obstruction": {
            "source": list(err.source),
            "blocked": list(err.blocked),
            "component": format_poly(err.obstruction.body),
        }}, sort_keys=True))
        return OBSTRUCTION_EXIT
    print(json.dumps({
        "input": format_poly(body),
        "symbol": format_poly(result.symbol.body),
        "free_slots": sorted([i, p] for i, p in result.free_slots),
        "unique": result.unique,
    }, sort_keys=True))
    return 0


def _cmd_verify(args) -> int:
    try:
        checks = run_suite(args.suite, args.n, args.seed, args.max_order)
    except KeyError as err:
        raise UsageError(str(err)) from None
    payload = {"checks": [{"name": c.name,
                           "status": "pass" if c.passed else "fail"}
                          for c in checks]}
    lines = [f"{'PASS' if c.passed else 'FAIL'} {c.name}"
             + (f" ({c.detail})" if c.detail else "") for c in checks]
    _emit(payload, args.json, lines)
    return 0 if all(c.passed for c in checks) else 1


_COMMANDS = {
    "spectrum": _cmd_spectrum,
    "critical": _cmd_critical,
    "resonances": _cmd_resonances,
    "quantize": _cmd_quantize,
    "symbol": _cmd_symbol,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except (UsageError, ParseError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
