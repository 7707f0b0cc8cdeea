"""Command-line interface: ``sturmroots {seq,count,isolate,eval}``.

Exit codes: 0 success, 2 parse error, 3 domain error, 4 degenerate endpoint
under the strict policy.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from sturmroots.isolation import isolate_roots, refine_root
from sturmroots.parsing import ParseError, format_polynomial, format_rational, parse_coeffs, parse_expression, parse_rational
from sturmroots.poly import DomainError, Polynomial, derivative, evaluate, square_free_part
from sturmroots.sturm import (
    DegenerateEndpointError,
    EndpointPolicy,
    Interval,
    count_roots_half_open,
    sign_sequence,
    sign_variations,
    sturm_sequence,
    variations,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_DEGENERATE = 4

# options whose values may start with "-" (negative rationals like -1/2)
_VALUE_OPTIONS = {"-a", "-b", "-c", "--epsilon", "--coeffs", "--expr"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _coeff_list(p: Polynomial) -> list[str]:
    return [format_rational(c) for c in p.coeffs]


def _decimal(q: Fraction, digits: int) -> str:
    scaled = round(q * 10**digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    return f"~{sign}{whole}.{frac:0{digits}d}" if digits else f"~{sign}{whole}"


def _read_input(args) -> Polynomial:
    if args.coeffs is not None:
        return parse_coeffs(args.coeffs)
    text = sys.stdin.read() if args.expr == "-" else args.expr
    return parse_expression(text)


def _require_nonconstant(f: Polynomial) -> None:
    if f.is_constant():
        raise DomainError("polynomial must have degree >= 1")


def cmd_seq(args, f: Polynomial) -> tuple[dict, list[str]]:
    _require_nonconstant(f)
    seq = sturm_sequence(f)
    polys = seq.padded() if args.padded else seq.polys
    payload = {"sequence": [_coeff_list(p) for p in polys]}
    lines = [f"p{i} = {format_polynomial(p)}    [{', '.join(_coeff_list(p))}]" for i, p in enumerate(polys)]
    return payload, lines


def cmd_count(args, f: Polynomial) -> tuple[dict, list[str]]:
    a, b = parse_rational(args.a), parse_rational(args.b)
    iv = Interval(a, b)
    policy = EndpointPolicy(args.policy)
    n = count_roots_half_open(f, iv, policy)
    va = vb = 0
    if not f.is_constant():
        seq = sturm_sequence(f if policy is EndpointPolicy.STRICT else square_free_part(f))
        va, vb = variations(seq, a), variations(seq, b)
    payload = {
        "interval": {"a": format_rational(a), "b": format_rational(b)},
        "policy": policy.value,
        "count": n,
        "V_a": va,
        "V_b": vb,
    }
    lines = [str(n)]
    if args.verbose:
        lines.append(f"V({format_rational(a)}) = {va}")
        lines.append(f"V({format_rational(b)}) = {vb}")
    return payload, lines


def cmd_isolate(args, f: Polynomial) -> tuple[dict, list[str]]:
    _require_nonconstant(f)
    reports = isolate_roots(f)
    if args.epsilon is not None:
        eps = parse_rational(args.epsilon)
        if eps <= 0:
            raise DomainError("epsilon must be positive")
        reports = [refine_root(f, r, eps) for r in reports]
    roots, lines = [], []
    for r in reports:
        entry = {"a": format_rational(r.a), "b": format_rational(r.b), "V_a": r.variations_left, "V_b": r.variations_right}
        line = f"({entry['a']}, {entry['b']}]  V_a={r.variations_left} V_b={r.variations_right}"
        if args.decimal is not None:
            entry["approx"] = {"a": _decimal(r.a, args.decimal), "b": _decimal(r.b, args.decimal)}
            line += f"  approx ({entry['approx']['a']}, {entry['approx']['b']}]"
        roots.append(entry)
        lines.append(line)
    if not roots:
        lines.append("no real roots")
    return {"roots": roots}, lines


def cmd_eval(args, f: Polynomial) -> tuple[dict, list[str]]:
    _require_nonconstant(f)
    c = parse_rational(args.c)
    value, slope = evaluate(f, c), evaluate(derivative(f), c)
    signs = sign_sequence(sturm_sequence(f), c)
    v = sign_variations(signs)
    payload = {
        "c": format_rational(c),
        "value": format_rational(value),
        "derivative": format_rational(slope),
        "signs": list(signs),
        "V": v,
    }
    cs = format_rational(c)
    lines = [
        f"f({cs}) = {payload['value']}",
        f"f'({cs}) = {payload['derivative']}",
        "signs = (" + ", ".join(str(s) for s in signs) + ")",
        f"V = {v}",
    ]
    if args.decimal is not None:
        payload["approx"] = {"value": _decimal(value, args.decimal), "derivative": _decimal(slope, args.decimal)}
        lines.insert(2, f"approx f({cs}) {payload['approx']['value']}, f'({cs}) {payload['approx']['derivative']}")
    return payload, lines


COMMANDS = {"seq": cmd_seq, "count": cmd_count, "isolate": cmd_isolate, "eval": cmd_eval}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sturmroots", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help):
        p = sub.add_parser(name, help=help)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--coeffs", help="ascending comma-separated coefficients, e.g. '-3,7,-5,1'")
        src.add_argument("--expr", help="expression such as 'x^3-5x^2+7x-3'; '-' reads stdin")
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("seq", "print the Sturm sequence")
    p.add_argument("--padded", action="store_true", help="pad with zeros to length deg(f)+1")

    p = add("count", "count distinct roots in (a, b]")
    p.add_argument("-a", required=True)
    p.add_argument("-b", required=True)
    p.add_argument("--policy", choices=[e.value for e in EndpointPolicy], default="strict")
    p.add_argument("-v", "--verbose", action="store_true")

    p = add("isolate", "isolate every real root in a half-open interval")
    p.add_argument("--epsilon", help="refine each interval to this width")
    p.add_argument("--decimal", type=int, metavar="K", help="also print K-digit decimal approximations")

    p = add("eval", "evaluate f, f' and the sign sequence at c")
    p.add_argument("-c", required=True)
    p.add_argument("--decimal", type=int, metavar="K")
    return parser


def _glue_negative_values(argv: list[str]) -> list[str]:
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and nxt != "-":
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_glue_negative_values(argv))
    try:
        f = _read_input(args)
        payload, lines = COMMANDS[args.command](args, f)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DegenerateEndpointError as exc:
        print(f"degenerate endpoint: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.format == "json":
        doc = {"command": args.command, "input": _coeff_list(f), **payload}
        print(json.dumps(doc, indent=2))
    else:
        for line in lines:
            print(line)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
