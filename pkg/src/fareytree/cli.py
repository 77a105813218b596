"""Command-line interface.

    fareytree classify 8/3
    fareytree expand 1
    fareytree --json expand 1.4142135623730950488016887242096980785697 --terms 6
    fareytree render --x-min -1 --x-max 3 --show tree_edges,path --path "[2,2,-2]" --out fig.svg

Exit codes: 0 success, 2 parse error, 3 precision or undecidable,
4 contract violation.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import approx, eicf, farey, mobius
from .errors import ContractError, ParseError, PrecisionError, PrecisionExhausted, Undecidable
from .exact import (
    ApproxReal,
    classify,
    decimal_digits,
    parse_decimal,
    parse_number,
    parse_rational,
)
from .render import SHOW_CHOICES, RenderSpec, write_svg

MIN_DIGITS = 20
DEFAULT_TERMS = 10

EXIT_OK, EXIT_PARSE, EXIT_PRECISION, EXIT_CONTRACT = 0, 2, 3, 4


def _opt(args, name, default):
    value = getattr(args, name, None)
    return default if value is None else value


def _decimal_input(text: str, digits: int | None) -> ApproxReal:
    have = digits if digits is not None else decimal_digits(text)
    if have < MIN_DIGITS:
        raise PrecisionExhausted(
            f"{text!r} carries {have} digits; expansion needs at least {MIN_DIGITS} "
            "(pass more digits, or --digits)"
        )
    return parse_decimal(text, digits)


def _sequence(text: str, digits: int | None, terms: int) -> tuple[eicf.EicfSeq, str]:
    """Read an EICF literal, a rational or a decimal as a sequence."""
    t = text.strip()
    if t.startswith("["):
        return eicf.parse_eicf(t), "eicf"
    if "." in t:
        return eicf.expand_approx(_decimal_input(t, digits), terms), "decimal"
    return eicf.expand_rational(parse_rational(t)), "rational"


def _rats(qs) -> list[str]:
    return [str(q) for q in qs]


def cmd_classify(args) -> dict:
    q = parse_rational(args.value)
    return {"value": str(q), "class": classify(q).value}


def cmd_expand(args) -> dict:
    terms = _opt(args, "terms", DEFAULT_TERMS)
    x = parse_number(args.value, _opt(args, "digits", None))
    if isinstance(x, ApproxReal):
        s = eicf.expand_approx(_decimal_input(args.value, _opt(args, "digits", None)), terms)
        return {"kind": "decimal", "expansions": [_expansion(s, len(s))]}
    s = eicf.expand_rational(x)
    if s.is_finite:
        return {"kind": classify(x).value, "expansions": [_expansion(s, len(s))]}
    alt = eicf.alternate_expansion(s)
    return {
        "kind": classify(x).value,
        "expansions": [_expansion(s, terms), _expansion(alt, terms)],
    }


def _expansion(s: eicf.EicfSeq, n: int) -> dict:
    n = n if not s.is_finite else min(n, len(s))
    return {"eicf": eicf.format_eicf(s), "convergents": _rats(eicf.convergents(s, n))}


def cmd_eval(args) -> dict:
    s = eicf.parse_eicf(args.eicf)
    return {"eicf": eicf.format_eicf(s), "value": str(eicf.value(s))}


def cmd_convergents(args) -> dict:
    terms = _opt(args, "terms", DEFAULT_TERMS)
    s, kind = _sequence(args.value, _opt(args, "digits", None), terms)
    n = terms if not s.is_finite else min(terms, len(s))
    return {"eicf": eicf.format_eicf(s), "source": kind, "convergents": _rats(eicf.convergents(s, n))}


def cmd_equivalent(args) -> dict:
    terms = _opt(args, "terms", 30)
    digits = _opt(args, "digits", None)
    a, _ = _sequence(args.a, digits, terms)
    b, _ = _sequence(args.b, digits, terms)
    match = eicf.tails_equivalent(a, b, args.min_overlap)
    out = {
        "a": eicf.format_eicf(a),
        "b": eicf.format_eicf(b),
        "verdict": match.kind.value,
        "m": match.m,
        "n": match.n,
        "overlap": match.overlap,
        "exact": match.exact,
    }
    if match.found:
        g = eicf.witness_transformation(a, b, match.m, match.n, match.negated)
        out["witness"] = g.rows()
        out["in_extended_theta"] = mobius.in_extended_theta(g)
    return out


def cmd_approximants(args) -> dict:
    max_den = _opt(args, "max_den", 12)
    text = args.x.strip()
    if "." in text:
        x = parse_decimal(text, _opt(args, "digits", None))
    else:
        x = ApproxReal.exact(parse_rational(text))
    hits = farey.enumerate_inf_rationals(max_den, x.lo, x.hi)
    if hits:
        raise Undecidable(
            f"x must not be an ∞-rational at this precision: [{x.lo}, {x.hi}] contains {hits[0]}"
        )
    convs = eicf.convergents(*_as_many_terms(x))
    rows, undecided = [], []
    window = farey.enumerate_inf_rationals(max_den, x.lo - 2, x.hi + 2)
    for u in sorted(window, key=lambda q: (q.den, q.fraction)):
        try:
            strong = approx.is_strong_approximant(u, x)
        except Undecidable as exc:
            undecided.append({"u": str(u), "reason": str(exc)})
            continue
        if not strong:
            continue
        try:
            v = approx.convergent_certificate(u, x)
        except Undecidable:
            v = None
        rows.append({
            "u": str(u),
            "convergent_index": convs.index(u) + 1 if u in convs else None,
            "certificate": None if v is None else str(v),
        })
    return {"x": str(x.mid), "max_den": max_den, "rows": rows, "undecided": undecided}


def _as_many_terms(x: ApproxReal) -> tuple[eicf.EicfSeq, int]:
    s = eicf.expand_approx(x, 10**6, strict=False)
    return s, len(s)


def cmd_neighbors(args) -> dict:
    v = parse_rational(args.vertex)
    lo, hi = parse_rational(args.lo), parse_rational(args.hi)
    ns = farey.neighbors_in_F(v, lo, hi, _opt(args, "max_den", None))
    return {"vertex": str(v), "window": [str(lo), str(hi)], "neighbors": _rats(ns)}


def cmd_render(args) -> dict:
    show = frozenset(s for s in args.show.split(",") if s)
    path = eicf.parse_eicf(args.path) if args.path else None
    if path is not None:
        show |= {"path"}
    try:
        spec = RenderSpec(
            x_min=Fraction(args.x_min),
            x_max=Fraction(args.x_max),
            max_denominator=_opt(args, "max_den", 8),
            height_scale=Fraction(args.height_scale),
            show=show,
            path=path,
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    write_svg(spec, args.out)
    return {"out": args.out, "show": sorted(spec.show)}


# argparse only recognises "-3" and "-.5" as values; also accept "-3/7"
_NEGATIVE = re.compile(r"^-(\d+(/\d+)?|\d*\.\d+)$")


def _global_flags(p: argparse.ArgumentParser) -> None:
    p._negative_number_matcher = _NEGATIVE
    d = argparse.SUPPRESS
    p.add_argument("--json", action="store_true", default=d, help="emit one JSON object")
    p.add_argument("--digits", type=int, default=d, help="decimal precision of inputs")
    p.add_argument("--terms", type=int, default=d, help="number of EICF terms")
    p.add_argument("--max-den", dest="max_den", type=int, default=d, help="denominator bound")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fareytree", description="Even-integer continued fractions on the Farey tree."
    )
    _global_flags(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        _global_flags(p)
        p.set_defaults(func=func)
        return p

    add("classify", cmd_classify, "∞-rational or 1-rational").add_argument("value")
    add("expand", cmd_expand, "EICF expansion and convergents").add_argument("value")
    add("eval", cmd_eval, "value of an EICF literal").add_argument("eicf")
    add("convergents", cmd_convergents, "convergents of an EICF or number").add_argument("value")
    p = add("equivalent", cmd_equivalent, "tail equivalence under the extended theta group")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--min-overlap", type=int, default=10)
    add("approximants", cmd_approximants, "strong ∞-approximants of a decimal").add_argument("x")
    p = add("neighbors", cmd_neighbors, "Farey tree neighbours in a window")
    p.add_argument("vertex")
    p.add_argument("--lo", required=True)
    p.add_argument("--hi", required=True)
    p = add("render", cmd_render, "SVG of the tree, graph, Ford circles and a path")
    p.add_argument("--x-min", required=True)
    p.add_argument("--x-max", required=True)
    p.add_argument("--height-scale", default="1")
    p.add_argument("--show", default="tree_edges", help=f"comma list of {','.join(SHOW_CHOICES)}")
    p.add_argument("--path", default=None, help="EICF literal to highlight")
    p.add_argument("--out", required=True)
    return parser


def _text(val, nested: bool = False) -> str:
    if isinstance(val, list):
        body = ", ".join(_text(v, True) for v in val)
        return f"[{body}]" if nested else body
    return str(val)


def _print_text(result: dict) -> None:
    for key, val in result.items():
        if isinstance(val, list) and val and isinstance(val[0], dict):
            print(f"{key}:")
            for row in val:
                print("  " + "  ".join(f"{k}={_text(v)}" for k, v in row.items()))
        else:
            print(f"{key}: {_text(val)}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    as_json = _opt(args, "json", False)
    inputs = {k: v for k, v in vars(args).items() if k not in ("func", "json")}
    code, result, diagnostics = EXIT_OK, None, {}
    try:
        result = args.func(args)
    except ParseError as exc:
        code, diagnostics = EXIT_PARSE, {"error": type(exc).__name__, "message": str(exc)}
    except PrecisionError as exc:
        code, diagnostics = EXIT_PRECISION, {"error": type(exc).__name__, "message": str(exc)}
    except ContractError as exc:
        code, diagnostics = EXIT_CONTRACT, {"error": type(exc).__name__, "message": str(exc)}
    if as_json:
        json.dump({"input": inputs, "result": result, "diagnostics": diagnostics}, sys.stdout)
        sys.stdout.write("\n")
    elif result is not None:
        _print_text(result)
    if code != EXIT_OK and not as_json:
        print(f"error: {diagnostics['error']}: {diagnostics['message']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
