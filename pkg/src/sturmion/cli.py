"""Command-line front end: build chains on classical grids, count real roots
in an interval, and run the verification suite, with machine-readable output.

Exit codes: 0 success, 1 unexpected verification mismatch, 2 input parse
error, 3 degenerate grid, 4 chain failure (e.g. non-simple roots), 5 reserved
for endpoint-at-root rejection."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from fractions import Fraction

from . import __version__, grids, harness
from .chain import ChainError, EndpointIsRoot, build_chain, count_roots, sturmian_pair
from .poly import Polynomial
from .scalars import DEFAULT_PRECISION, parse_rational, scalar_json
from .spectral import dual_weights, primal_weights

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_CHAIN = 4
EXIT_ENDPOINT = 5


class PolynomialSyntaxError(ValueError):
    pass


_TERM = re.compile(
    r"(?P<sign>[+-]?)"
    r"(?:"
    r"(?P<coeff>\d+(?:/\d+)?)(?P<var1>x(?:\^(?P<pow1>\d+))?)?"
    r"|"
    r"(?P<var2>x(?:\^(?P<pow2>\d+))?)"
    r")"
)


def parse_polynomial(text: str) -> Polynomial:
    """Rational-coefficient polynomials in x: e.g. ``x^3-3x^2+2x``, ``1/2x-3``."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise PolynomialSyntaxError("empty polynomial")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == m.start():
            raise PolynomialSyntaxError(f"cannot parse term at {s[pos:]!r}")
        if not first and m.group("sign") == "":
            raise PolynomialSyntaxError(f"missing sign before {s[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coeff") is not None:
            coeff = Fraction(m.group("coeff"))
            var = m.group("var1")
            power = m.group("pow1")
        else:
            coeff = Fraction(1)
            var = m.group("var2")
            power = m.group("pow2")
        if var is None:
            degree = 0
        elif power is None:
            degree = 1
        else:
            degree = int(power)
        coeffs[degree] = coeffs.get(degree, Fraction(0)) + sign * coeff
        pos = m.end()
        first = False
    top = max(coeffs)
    return Polynomial(tuple(coeffs.get(k, Fraction(0)) for k in range(top + 1)))


def _envelope(command: str, inputs: dict, payload) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "payload": payload,
        "versions": {
            "engine": __version__,
            "default_precision": DEFAULT_PRECISION,
        },
    }


def _emit_json(envelope: dict, out) -> None:
    json.dump(envelope, out, indent=2, sort_keys=True)
    out.write("\n")


def _emit_chain_csv(payload: dict, out) -> None:
    writer = csv.writer(out)
    writer.writerow(["field", "index", "value"])
    for field in ("b", "u", "nodes", "primal_weights", "dual_weights"):
        for i, value in enumerate(payload[field]):
            if isinstance(value, dict):
                value = value["value"]
            writer.writerow([field, i, value])


def _resolve_grid(args) -> grids.GridSpec:
    text = args.grid
    if text == "quad" and args.tau is not None:
        text = f"quad:tau={args.tau}"
    if text == "exp" and args.q:
        text = f"exp:q={args.q[0]}"
    return grids.parse_grid(text, args.n, args.precision)


def cmd_chain(args, out) -> int:
    spec = _resolve_grid(args)
    xs = grids.nodes(spec)
    chain = build_chain(*sturmian_pair(grids.characteristic_polynomial(spec)))
    pw = primal_weights(chain, xs)
    dw = dual_weights(chain.polys[0], chain.polys[1], xs)
    payload = {
        "b": [scalar_json(v) for v in chain.b],
        "u": [scalar_json(v) for v in chain.u],
        "nodes": [scalar_json(v) for v in xs],
        "primal_weights": [scalar_json(v) for v in pw.weights],
        "dual_weights": [scalar_json(v) for v in dw.weights],
    }
    inputs = {"grid": args.grid, "n": args.n, "precision": args.precision,
              "format": args.format}
    if args.format == "csv":
        _emit_chain_csv(payload, out)
    else:
        _emit_json(_envelope("chain", inputs, payload), out)
    return EXIT_OK


def cmd_count(args, out) -> int:
    poly = parse_polynomial(args.poly)
    lo = parse_rational(args.lo)
    hi = parse_rational(args.hi)
    if not lo < hi:
        raise PolynomialSyntaxError(f"need lo < hi, got {args.lo} >= {args.hi}")
    n = count_roots(poly, lo, hi)
    inputs = {"poly": args.poly, "lo": args.lo, "hi": args.hi}
    _emit_json(_envelope("count", inputs, {"count": n}), out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    q_list = tuple(parse_rational(q) for q in args.q) or (Fraction(1, 2),)
    reports = harness.run_all(args.nmax, q_list, args.precision)
    inputs = {"nmax": args.nmax, "q": [str(q) for q in args.q],
              "precision": args.precision}
    payload = [r.to_dict() for r in reports]
    _emit_json(_envelope("verify", inputs, payload), out)
    if any(r.status == harness.MISMATCH for r in reports):
        return EXIT_MISMATCH
    return EXIT_OK


def _default_precision() -> int:
    env = os.environ.get("STURMION_PRECISION")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_PRECISION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sturmion",
        description="Exact Sturm chains of finite orthogonal polynomials "
                    "on classical grids.")
    parser.add_argument("--precision", type=int, default=_default_precision(),
                        help="working precision in bits for floating grids")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for randomized subcommands (reserved)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_chain = sub.add_parser("chain", help="build the chain on a grid")
    p_chain.add_argument("--grid", required=True,
                         help="e.g. linear, quad:tau=1, exp:q=1/2, trig1")
    p_chain.add_argument("--n", type=int, required=True)
    p_chain.add_argument("--q", action="append", default=[])
    p_chain.add_argument("--tau", default=None)
    p_chain.set_defaults(func=cmd_chain)

    p_count = sub.add_parser("count", help="count real roots in (lo, hi]")
    p_count.add_argument("--poly", required=True)
    p_count.add_argument("--lo", required=True)
    p_count.add_argument("--hi", required=True)
    p_count.set_defaults(func=cmd_count)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument("--nmax", type=int, default=2)
    p_verify.add_argument("--q", action="append", default=[])
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except EndpointIsRoot as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENDPOINT
    except ChainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHAIN
    except grids.DegenerateGrid as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (PolynomialSyntaxError, grids.GridError, ValueError,
            ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
