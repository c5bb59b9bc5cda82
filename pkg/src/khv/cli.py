"""``khv`` command-line front end."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import corpus
from .diagram import Diagram, parse_pd
from .errors import KhvError
from .expansion import (
    MAX_TRUNCATION, birman_lin, extremal_term, v_n, v_nj, vassiliev_value,
)
from .homology import homology_ranks
from .laurent import format_coeff
from .polynomials import (
    check_skein_triple, jones_from_bracket, jones_from_kh, khovanov_polynomial, normalize_jones,
    to_latex,
)


def _fraction_json(c) -> list[int]:
    c = Fraction(c)
    return [c.numerator, c.denominator]


def _poly_json(poly) -> dict:
    return {"variables": list(poly.VARS), "terms": poly.to_term_list()}


def _order(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    if n > MAX_TRUNCATION:
        raise argparse.ArgumentTypeError(f"at most {MAX_TRUNCATION} (got {n})")
    return n


def _add_source(p: argparse.ArgumentParser, required: bool = True):
    src = p.add_mutually_exclusive_group(required=required)
    src.add_argument("--knot", help="corpus name, e.g. 3_1")
    src.add_argument("--pd", help="PD code, e.g. 'X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)'")


def _add_format(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="khv", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("compute", help="Khovanov homology ranks and Kh(t, q)")
    _add_source(p)
    _add_format(p)
    p.add_argument("--ring", choices=("rationals", "GF2"), default="rationals")

    p = sub.add_parser("vn", help="v_n(K)(t, x), or v_{n,j} with --j")
    _add_source(p)
    _add_format(p)
    order = p.add_mutually_exclusive_group(required=True)
    order.add_argument("--n", type=_order, help="order n")
    order.add_argument("--truncation", type=_order, help="print rows v_0..v_N")
    p.add_argument("--j", type=int, help="restrict to the x^j piece")
    p.add_argument("--ring", choices=("rationals", "GF2"), default="rationals")

    p = sub.add_parser("vassiliev", help="v_n(K)(-1, 1)")
    _add_source(p)
    _add_format(p)
    p.add_argument("--n", type=_order, required=True)

    p = sub.add_parser("extremal", help="lowest x-degree term of v_n")
    _add_source(p)
    _add_format(p)
    p.add_argument("--n", type=_order, required=True)

    p = sub.add_parser("jones", help="Jones polynomial from Kh (checked against the bracket)")
    _add_source(p)
    _add_format(p)
    p.add_argument("--normalized", action="store_true", help="print V(r) instead of J(q)")
    p.add_argument("--truncation", type=_order,
                   help="also print the Birman-Lin coefficients u_0..u_N of V(e^x)")

    p = sub.add_parser("skein", help="check q^-2 J(L+) - q^2 J(L-) = (q^-1 - q) J(L0)")
    _add_format(p)
    for role in ("plus", "minus", "zero"):
        p.add_argument(f"--{role}", required=True, help="corpus name or PD code")

    p = sub.add_parser("verify-table", help="recompute the golden Kh / v_0..v_5 table")
    _add_format(p)
    return parser


def _diagram(args) -> Diagram:
    if args.knot is not None:
        return corpus.load(args.knot).diagram
    return parse_pd(args.pd)


def _resolve(source: str) -> Diagram:
    if "X" in source or source.strip().startswith("U"):
        try:
            return parse_pd(source)
        except KhvError:
            if source not in corpus.entries():
                raise
    return corpus.load(source).diagram


def _emit(args, text: str, payload: dict, latex: str | None = None):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    elif args.format == "latex":
        print(latex if latex is not None else text)
    else:
        print(text)


def cmd_compute(args):
    d = _diagram(args)
    ranks = homology_ranks(d, args.ring)
    kh = khovanov_polynomial(ranks)
    payload = {
        "ring": args.ring,
        "writhe": d.writhe,
        "components": d.components,
        "ranks": [{"i": i, "j": j, "rank": r} for (i, j), r in sorted(ranks.items())],
        "kh": _poly_json(kh),
    }
    lines = [f"writhe {d.writhe}, {d.components} component(s), ring {args.ring}"]
    lines += [f"H^({i},{j}) rank {r}" for (i, j), r in sorted(ranks.items())]
    lines.append(f"Kh = {kh}")
    _emit(args, "\n".join(lines), payload, to_latex(kh))


def cmd_vn(args):
    ranks = homology_ranks(_diagram(args), args.ring)
    orders = [args.n] if args.n is not None else list(range(args.truncation + 1))
    polys = [v_nj(ranks, n, args.j) if args.j is not None else v_n(ranks, n) for n in orders]
    if len(polys) == 1:
        text = polys[0].to_text(reverse=True)
        latex = to_latex(polys[0])
    else:
        text = "\n".join(f"v_{n} = {p.to_text(reverse=True)}" for n, p in zip(orders, polys))
        latex = "\n".join(f"v_{n} & {to_latex(p)} \\\\ \\hline" for n, p in zip(orders, polys))
    payload = {"j": args.j, "rows": [{"n": n, **_poly_json(p)} for n, p in zip(orders, polys)]}
    _emit(args, text, payload, latex)


def cmd_vassiliev(args):
    value = vassiliev_value(v_n(homology_ranks(_diagram(args)), args.n))
    _emit(args, format_coeff(value), {"n": args.n, "value": _fraction_json(value)})


def cmd_extremal(args):
    j_min, coeff = extremal_term(v_n(homology_ranks(_diagram(args)), args.n))
    _emit(args, f"j_min = {j_min}\ncoefficient = {coeff}",
          {"n": args.n, "j_min": j_min, "coefficient": _poly_json(coeff)})


def cmd_jones(args):
    d = _diagram(args)
    j = jones_from_kh(khovanov_polynomial(homology_ranks(d)))
    oracle = jones_from_bracket(d)
    if j != oracle:
        raise KhvError(f"Kh specialization {j} disagrees with bracket oracle {oracle}")
    payload = {"unnormalized": _poly_json(j)}
    text = f"J = {j}"
    if args.normalized or args.truncation is not None:
        v = normalize_jones(j)
        payload["normalized"] = {"variables": ["r"], "doubled_exponents": True,
                                 "terms": v.to_term_list()}
        text = f"V = {v}" if args.normalized else text
        if args.truncation is not None:
            u = birman_lin(v, args.truncation)
            payload["birman_lin"] = [_fraction_json(c) for c in u.coefficients]
            text += "\n" + "\n".join(f"u_{k} = {format_coeff(c)}" for k, c in enumerate(u.coefficients))
    _emit(args, text, payload)


def cmd_skein(args):
    jp, jm, j0 = (jones_from_bracket(_resolve(s)) for s in (args.plus, args.minus, args.zero))
    holds = check_skein_triple(jp, jm, j0)
    _emit(args, "true" if holds else "false", {"holds": holds})


def cmd_verify_table(args):
    report = corpus.verify_table()
    if args.format == "json":
        payload = {
            "passed": report.passed,
            "total": report.total,
            "route_mismatches": report.route_mismatches,
            "rows": [{"knot": r.knot, "row": r.row, "passed": r.passed,
                      "witness": None if r.passed else
                      {"j": r.witness[0], "expected": _poly_json(r.witness[1]),
                       "computed": _poly_json(r.witness[2])}}
                     for r in report.rows],
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "latex":
        for name in corpus.TABLE_KNOTS:
            entry = corpus.load(name)
            ranks = homology_ranks(entry.diagram)
            print("\\begin{array}{|c|c|} \\hline")
            print(f" \\text{{Knot}} & {name} \\\\ \\hline")
            print(f" \\text{{Kh}} & {to_latex(khovanov_polynomial(ranks))} \\\\ \\hline")
            for n in range(corpus.TABLE_ORDERS):
                print(f" v_{n} & {to_latex(v_n(ranks, n))} \\\\ \\hline")
            print("\\end{array}")
        print(f"% {report.summary()}")
    else:
        for r in report.rows:
            print(r.describe())
        print(report.summary())
    return 0 if report.ok else 1


COMMANDS = {
    "compute": cmd_compute,
    "vn": cmd_vn,
    "vassiliev": cmd_vassiliev,
    "extremal": cmd_extremal,
    "jones": cmd_jones,
    "skein": cmd_skein,
    "verify-table": cmd_verify_table,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "j", None) is not None and getattr(args, "n", None) is None:
        parser.error("--j requires --n")
    try:
        return COMMANDS[args.verb](args) or 0
    except KhvError as exc:
        print(f"khv: {exc.stage} error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
