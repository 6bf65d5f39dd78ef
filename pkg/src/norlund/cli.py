"""Command line front end: ``eval``, ``table`` and ``verify``.

Exit codes: 0 success, 1 usage error, 2 route disagreement or failed verification.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .closed_forms import (
    bernoulli_number_closed,
    bernoulli_poly_closed,
    euler_number_closed,
    euler_poly_closed,
)
from .combinatorics import StirlingTable
from .determinant import bernoulli_via_det, euler_via_det
from .exact_arith import format_rational, parse_rational
from .series import oracle_bernoulli, oracle_euler
from .verify import run_verification

FAMILIES = ("bernoulli", "euler")
METHODS = ("closed", "det", "series", "all")
FORMATS = ("json", "csv", "latex", "plain")
TABLE_CAP = 64

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for math failures here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class EvalRequest:
    family: str
    n: int
    alpha: Fraction
    x: Fraction | None = None
    method: str = "closed"
    format: str = "json"


@dataclass
class EvalResult:
    request: EvalRequest
    value: Fraction | list[Fraction]
    per_method: dict[str, Fraction] | None = None
    agreement: bool | None = None

    def to_json(self) -> dict:
        req = self.request
        if isinstance(self.value, list):
            value = [format_rational(c) for c in self.value]
        else:
            value = format_rational(self.value)
        return {
            "family": req.family,
            "n": req.n,
            "alpha": format_rational(req.alpha),
            "x": None if req.x is None else format_rational(req.x),
            "method": req.method,
            "value": value,
            "per_method": None
            if self.per_method is None
            else {k: format_rational(v) for k, v in self.per_method.items()},
            "agreement": self.agreement,
        }


def _table_for(family: str, n: int) -> StirlingTable:
    return StirlingTable.build(2 * n if family == "bernoulli" else n)


def _route(family: str, method: str, n: int, alpha: Fraction, x: Fraction, table) -> Fraction:
    if family == "bernoulli":
        if method == "closed":
            return bernoulli_poly_closed(n, alpha, table)(x)
        if method == "det":
            return bernoulli_via_det(n, alpha, x, table)
        return oracle_bernoulli(n, alpha, x)
    if method == "closed":
        return euler_poly_closed(n, alpha, table)(x)
    if method == "det":
        return euler_via_det(n, alpha, x, table)
    return oracle_euler(n, alpha, x)


def cmd_eval(req: EvalRequest) -> EvalResult:
    """Evaluate by one route, or by all three with an agreement flag.

    Without ``x`` the closed route returns the coefficient list (lowest degree
    first); the other routes, and ``all``, evaluate at x = 0.
    """
    if req.family not in FAMILIES:
        raise UsageError(f"unknown family {req.family!r}")
    if req.method not in METHODS:
        raise UsageError(f"unknown method {req.method!r}")
    if req.n < 0:
        raise UsageError("n must be a natural number")
    table = _table_for(req.family, req.n)
    if req.method == "closed" and req.x is None:
        build = bernoulli_poly_closed if req.family == "bernoulli" else euler_poly_closed
        poly = build(req.n, req.alpha, table)
        coeffs = list(poly.coeffs) or [Fraction(0)]
        return EvalResult(req, coeffs)
    x = Fraction(0) if req.x is None else req.x
    if req.method != "all":
        return EvalResult(req, _route(req.family, req.method, req.n, req.alpha, x, table))
    per = {m: _route(req.family, m, req.n, req.alpha, x, table) for m in ("closed", "det", "series")}
    agree = len(set(per.values())) == 1
    return EvalResult(req, per["closed"], per, agree)


def table_values(family: str, n_max: int, alpha: Fraction) -> list[Fraction]:
    """B_n^(alpha) (x = 0) or the 2^n E_n^(alpha)(1/2) Euler numbers, n = 0..n_max."""
    if n_max < 0:
        raise UsageError("nmax must be natural")
    if n_max > TABLE_CAP:
        raise UsageError(f"nmax {n_max} exceeds the cap of {TABLE_CAP}")
    table = _table_for(family, n_max)
    number = bernoulli_number_closed if family == "bernoulli" else euler_number_closed
    return [number(n, alpha, table) for n in range(n_max + 1)]


# -- rendering ----------------------------------------------------------------


def latex_rational(v: Fraction) -> str:
    if v.denominator == 1:
        return f"${v.numerator}$"
    sign = "-" if v < 0 else ""
    return f"${sign}\\frac{{{abs(v.numerator)}}}{{{v.denominator}}}$"


_LATEX_FRAC = re.compile(r"^\$(-?)\\frac\{(\d+)\}\{(\d+)\}\$$")
_LATEX_INT = re.compile(r"^\$(-?\d+)\$$")


def parse_latex_rational(text: str) -> Fraction:
    s = text.strip()
    m = _LATEX_FRAC.match(s)
    if m:
        v = Fraction(int(m.group(2)), int(m.group(3)))
        return -v if m.group(1) else v
    m = _LATEX_INT.match(s)
    if m:
        return Fraction(int(m.group(1)))
    raise ValueError(f"not a LaTeX rational: {text!r}")


def render_rows(
    rows: list[tuple[int, Fraction]],
    fmt: str,
    header: dict | None = None,
    columns: tuple[str, str] = ("n", "value"),
) -> str:
    """Render (index, value) rows; ``header`` carries the JSON envelope."""
    key, val = columns
    if fmt == "json":
        body = dict(header or {})
        body["rows"] = [{key: i, val: format_rational(v)} for i, v in rows]
        return json.dumps(body)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([key, val])
        for i, v in rows:
            w.writerow([i, format_rational(v)])
        return buf.getvalue().rstrip("\n")
    if fmt == "latex":
        return "\n".join(f"{i} & {latex_rational(v)} \\\\" for i, v in rows)
    return "\n".join(f"{i} {format_rational(v)}" for i, v in rows)


def render_eval(result: EvalResult, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result.to_json())
    if isinstance(result.value, list):
        # coefficient list: row index is the power of x
        return render_rows(list(enumerate(result.value)), fmt, columns=("power", "coefficient"))
    if fmt == "plain" and result.per_method is not None:
        lines = [f"{m} {format_rational(v)}" for m, v in result.per_method.items()]
        lines.append(f"agreement {str(result.agreement).lower()}")
        return "\n".join(lines)
    return render_rows([(result.request.n, result.value)], fmt)


# -- entry point --------------------------------------------------------------


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$")
_RATIONAL_OPTIONS = ("--alpha", "--x")


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Rewrite ``--x -3/4`` as ``--x=-3/4``; argparse takes ``-3/4`` for a flag."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _RATIONAL_OPTIONS and i + 1 < len(argv) and _NEGATIVE_RATIONAL.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="norlund", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", help="evaluate one polynomial or number")
    ev.add_argument("--family", choices=FAMILIES, required=True)
    ev.add_argument("--n", type=int, required=True)
    ev.add_argument("--alpha", type=_rational_arg, required=True)
    ev.add_argument("--x", type=_rational_arg, default=None)
    ev.add_argument("--method", choices=METHODS, default="closed")
    ev.add_argument("--format", choices=FORMATS, default="json")

    tb = sub.add_parser("table", help="tabulate numbers for n = 0..nmax")
    tb.add_argument("--family", choices=FAMILIES, required=True)
    tb.add_argument("--nmax", type=int, required=True)
    tb.add_argument("--alpha", type=_rational_arg, required=True)
    tb.add_argument("--format", choices=FORMATS, default="plain")

    vf = sub.add_parser("verify", help="run the cross-verification suite")
    vf.add_argument("--max-n", type=int, default=10)
    vf.add_argument("--seed", type=int, default=0)
    vf.add_argument("--corrupt-gamma1", action="store_true", help=argparse.SUPPRESS)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative_values(sys.argv[1:] if argv is None else list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command == "eval":
            req = EvalRequest(args.family, args.n, args.alpha, args.x, args.method, args.format)
            result = cmd_eval(req)
            print(render_eval(result, args.format))
            return EXIT_MISMATCH if result.agreement is False else EXIT_OK
        if args.command == "table":
            values = table_values(args.family, args.nmax, args.alpha)
            header = {"family": args.family, "alpha": format_rational(args.alpha)}
            print(render_rows(list(enumerate(values)), args.format, header))
            return EXIT_OK
        if args.max_n < 0:
            raise UsageError("--max-n must be natural")
        report = run_verification(args.max_n, args.seed, args.corrupt_gamma1)
        print("\n".join(report.lines()))
        return EXIT_OK if report.ok else EXIT_MISMATCH
    except UsageError as exc:
        print(f"norlund: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
