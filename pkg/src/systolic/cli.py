"""Command-line front end for the package.

One subcommand per computation: finite group orders, the exact constants,
bound certificates, the congruence-cover systole oracle, and the complex
Salem searches.  Every subcommand renders to plain text, CSV, or JSON
(keys sorted), deterministically for fixed inputs.

Exit codes: 0 success, 1 invalid input, 2 numerical refusal (tolerance
failure, indeterminate verdict, or exhausted search budget).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import salem
from .congruence_bounds import (
    Family,
    IdealData,
    LatticeSpec,
    Subtype,
    gromov_constant,
    systole_lower_from_ideal,
    systole_volume_bound,
)
from .errors import DomainError, SearchBudgetError, ToleranceError
from .lie_orders import LieType, Series, group_order
from .modular_oracle import growth_table


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with code 1, not 2."""

    def error(self, message: str) -> None:
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    return str(value)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _csv_text(header: tuple, rows: list[tuple]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(tuple(_cell(v) for v in row))
    return buf.getvalue().rstrip("\n")


def _plain_table(header: tuple[str, ...], rows: list[tuple]) -> str:
    text_rows = [tuple(_fmt(v) for v in row) for row in rows]
    widths = [len(h) for h in header]
    for row in text_rows:
        widths = [max(w, len(v)) for w, v in zip(widths, row)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    for row in text_rows:
        lines.append("  ".join(v.rjust(w) for v, w in zip(row, widths)))
    return "\n".join(lines)


def _lattice_spec(family: str, n: int, f: int, subtype: str | None,
                  vol: float | None) -> LatticeSpec:
    sub = Subtype(subtype) if subtype is not None else None
    if family == "so":
        if n % 2 == 1:
            return LatticeSpec(Family.REAL_HYP_ODD, (n + 1) // 2, f, sub, vol)
        return LatticeSpec(Family.REAL_HYP_EVEN, n // 2, f, sub, vol)
    if family == "su":
        return LatticeSpec(Family.COMPLEX_HYP, n, f, sub, vol)
    return LatticeSpec(Family.SPECIAL_LINEAR, n + 1, f, sub, vol)


def _cmd_group_order(args) -> tuple[str, int]:
    order = group_order(LieType(Series(args.series), args.rank), args.q)
    if args.format == "json":
        return _json_text({"order": str(order), "q": args.q,
                           "rank": args.rank, "type": args.series}), 0
    if args.format == "csv":
        return _csv_text(("type", "rank", "q", "order"),
                         [(args.series, args.rank, args.q, order)]), 0
    return str(order), 0


def _cmd_gromov_constant(args) -> tuple[str, int]:
    if args.family == "su" and args.subtype is None:
        raise DomainError("--subtype is required for family su")
    spec = _lattice_spec(args.family, args.n, 1, args.subtype, None)
    constant = gromov_constant(spec)
    if args.format == "json":
        return _json_text({"constant": str(constant), "family": args.family,
                           "n": args.n, "subtype": args.subtype,
                           "value": constant.value()}), 0
    if args.format == "csv":
        return _csv_text(("family", "n", "subtype", "constant", "value"),
                         [(args.family, args.n, args.subtype, str(constant),
                           constant.value())]), 0
    return str(constant), 0


def _cmd_bound(args) -> tuple[str, int]:
    subtype = args.subtype
    if args.family == "su" and subtype is None:
        subtype = "first"
    spec = _lattice_spec(args.family, args.n, args.f, subtype, args.vol)
    ideal = IdealData(args.norm, args.f)
    if args.vol is not None:
        cert = systole_volume_bound(spec, ideal)
    else:
        cert = systole_lower_from_ideal(spec, ideal)
    if args.format == "json":
        return _json_text(cert.to_json_dict()), 0
    summary = [("final_bound", "", cert.final_bound), ("C", "", str(cert.C)),
               ("c", "", cert.c), ("threshold", "", cert.threshold)]
    if args.format == "csv":
        rows = [(s.label, s.ref, s.value) for s in cert.steps] + summary
        return _csv_text(("label", "ref", "value"), rows), 0
    table = _plain_table(("label", "value", "ref"),
                         [(s.label, s.value, s.ref) for s in cert.steps])
    footer = "\n".join(f"{label}: {_fmt(value)}" for label, _, value in summary)
    return table + "\n" + footer, 0


def _cmd_modular(args) -> tuple[str, int]:
    table = growth_table(args.level_from, args.level_to)
    rows = [(r.level, r.t_min, r.systole, margin)
            for r, margin in zip(table.rows, table.margins)]
    if args.format == "json":
        return _json_text({
            "rows": [{"N": n, "t_min": t, "systole": s, "margin": m}
                     for n, t, s, m in rows],
            "slope": table.slope,
        }), 0
    if args.format == "csv":
        return _csv_text(("N", "t_min", "systole", "margin"), rows), 0
    text = _plain_table(("N", "t_min", "systole", "margin"), rows)
    slope = _fmt(table.slope) if table.slope is not None else "undefined (single level)"
    return text + f"\nslope: {slope}", 0


_VERDICT_COLUMNS = ("poly", "is_complex_salem", "mahler", "lambda_re",
                    "lambda_im", "lambda_abs", "cyclotomic_removed",
                    "irreducibility", "indeterminate", "diagnostic")


def _verdict_row(v: salem.SalemVerdict) -> tuple:
    lam_re = v.lam.real if v.lam is not None else None
    lam_im = v.lam.imag if v.lam is not None else None
    lam_abs = abs(v.lam) if v.lam is not None else None
    removed = ";".join(str(k) for k in v.cyclotomic_removed)
    return (salem.poly_to_string(v.poly), v.is_complex_salem, v.mahler,
            lam_re, lam_im, lam_abs, removed, v.irreducibility,
            v.indeterminate, v.diagnostic)


def _verdict_plain(v: salem.SalemVerdict) -> str:
    lines = [f"poly: {salem.poly_to_string(v.poly)}",
             f"is_complex_salem: {_fmt(v.is_complex_salem)}"]
    if v.lam is not None:
        lines.append(f"lambda: {v.lam.real:.12g}{v.lam.imag:+.12g}i")
        lines.append(f"abs_lambda: {abs(v.lam):.12g}")
    else:
        lines.append("lambda: -")
        lines.append("abs_lambda: -")
    removed = ",".join(str(k) for k in v.cyclotomic_removed)
    lines.append(f"mahler: {_fmt(v.mahler)}")
    lines.append(f"cyclotomic_removed: {removed or '-'}")
    lines.append(f"irreducibility: {v.irreducibility}")
    if v.indeterminate:
        lines.append("indeterminate: true")
    if v.diagnostic:
        lines.append(f"diagnostic: {v.diagnostic}")
    return "\n".join(lines)


def _cmd_salem_check(args) -> tuple[str, int]:
    poly = salem.poly_from_string(args.poly)
    verdict = salem.is_complex_salem(poly)
    code = 2 if verdict.indeterminate else 0
    if args.format == "json":
        return _json_text(verdict.to_json_dict()), code
    if args.format == "csv":
        return _csv_text(_VERDICT_COLUMNS, [_verdict_row(verdict)]), code
    return _verdict_plain(verdict), code


def _cmd_salem_search(args) -> tuple[str, int]:
    verdicts = salem.enumerate_complex_salem(args.degree, args.mahler_max,
                                             args.height)
    if args.format == "json":
        return _json_text({
            "count": len(verdicts),
            "degree": args.degree,
            "height": args.height,
            "mahler_max": args.mahler_max,
            "results": [v.to_json_dict() for v in verdicts],
        }), 0
    if args.format == "csv":
        return _csv_text(_VERDICT_COLUMNS, [_verdict_row(v) for v in verdicts]), 0
    head = (f"found {len(verdicts)} complex Salem polynomials "
            f"(degree {args.degree}, mahler <= {args.mahler_max:g}")
    head += f", height <= {args.height})" if args.height is not None else ")"
    lines = [head]
    for v in verdicts:
        lines.append(f"{salem.poly_to_string(v.poly)}  mahler={_fmt(v.mahler)}  "
                     f"abs_lambda={_fmt(abs(v.lam))}")
    return "\n".join(lines), 0


def _cmd_salem_min(args) -> tuple[str, int]:
    result = salem.minimal_complex_salem(args.degree_max, args.mahler_max)
    best = result.best
    if args.format == "json":
        return _json_text(result.to_json_dict()), 0
    if args.format == "csv":
        row = (result.degree_max, result.mahler_max, best is not None,
               salem.poly_to_string(best.poly) if best else None,
               best.mahler if best else None,
               abs(best.lam) if best and best.lam is not None else None,
               result.note)
        return _csv_text(("degree_max", "mahler_max", "found", "poly",
                          "mahler", "lambda_abs", "note"), [row]), 0
    lines = [f"found: {_fmt(best is not None)}"]
    if best is not None:
        lines.append(f"poly: {salem.poly_to_string(best.poly)}")
        lines.append(f"mahler: {_fmt(best.mahler)}")
        lines.append(f"abs_lambda: {_fmt(abs(best.lam))}")
    lines.append(f"note: {result.note}")
    return "\n".join(lines), 0


def _cmd_salem_systole(args) -> tuple[str, int]:
    result = salem.salem_systole_bound(args.n, args.mahler_max)
    if args.format == "json":
        return _json_text(result.to_json_dict()), 0
    witness = result.witness
    if args.format == "csv":
        row = (result.n, result.degree_bound, result.mahler_max, result.bound,
               salem.poly_to_string(witness.poly) if witness else None,
               witness.mahler if witness else None, result.note)
        return _csv_text(("n", "degree_bound", "mahler_max", "bound", "witness",
                          "mahler", "note"), [row]), 0
    lines = [f"n: {result.n}",
             f"degree_bound: {result.degree_bound}",
             f"bound: {_fmt(result.bound)}"]
    if witness is not None:
        lines.append(f"witness: {salem.poly_to_string(witness.poly)}")
        lines.append(f"mahler: {_fmt(witness.mahler)}")
    lines.append(f"note: {result.note}")
    return "\n".join(lines), 0


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "csv", "plain"),
                        default="plain")


def build_parser() -> _Parser:
    parser = _Parser(prog="systolic",
                     description="systole bounds for arithmetic lattices")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("group-order", help="finite group order over F_q")
    p.add_argument("--type", required=True, dest="series",
                   choices=("1A", "2A", "BC", "1D", "2D"))
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--q", required=True, type=int)
    _add_format(p)
    p.set_defaults(handler=_cmd_group_order)

    p = sub.add_parser("gromov-constant",
                       help="exact constant C in sys >= C*log(vol) - d")
    p.add_argument("--family", required=True, choices=("so", "su", "sl"))
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--subtype", choices=("first", "second", "mixed"))
    _add_format(p)
    p.set_defaults(handler=_cmd_gromov_constant)

    p = sub.add_parser("bound", help="systole bound certificate from an ideal norm")
    p.add_argument("--family", required=True, choices=("so", "su", "sl"))
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--f", required=True, type=int)
    p.add_argument("--norm", required=True, type=int)
    p.add_argument("--vol", type=float)
    p.add_argument("--subtype", choices=("first", "second", "mixed"))
    _add_format(p)
    p.set_defaults(handler=_cmd_bound)

    p = sub.add_parser("modular", help="exact systoles of congruence covers")
    p.add_argument("--from", required=True, dest="level_from", type=int)
    p.add_argument("--to", required=True, dest="level_to", type=int)
    _add_format(p)
    p.set_defaults(handler=_cmd_modular)

    p = sub.add_parser("salem", help="complex Salem polynomial operations")
    salem_sub = p.add_subparsers(dest="salem_command", required=True,
                                 parser_class=_Parser)

    q = salem_sub.add_parser("check", help="verdict for one polynomial")
    q.add_argument("poly", help="comma-separated ascending coefficients")
    _add_format(q)
    q.set_defaults(handler=_cmd_salem_check)

    q = salem_sub.add_parser("search", help="exhaustive search at one degree")
    q.add_argument("--degree", required=True, type=int)
    q.add_argument("--height", type=int)
    q.add_argument("--mahler-max", dest="mahler_max", type=float, default=4.0)
    _add_format(q)
    q.set_defaults(handler=_cmd_salem_search)

    q = salem_sub.add_parser("min", help="minimal Mahler measure below a cutoff")
    q.add_argument("--degree-max", required=True, dest="degree_max", type=int)
    q.add_argument("--mahler-max", required=True, dest="mahler_max", type=float)
    _add_format(q)
    q.set_defaults(handler=_cmd_salem_min)

    q = salem_sub.add_parser("systole", help="uniform geodesic-length lower bound")
    q.add_argument("--n", required=True, type=int)
    q.add_argument("--mahler-max", required=True, dest="mahler_max", type=float)
    _add_format(q)
    q.set_defaults(handler=_cmd_salem_systole)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        text, code = args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (SearchBudgetError, ToleranceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
