"""Command line surface: factor, solve, cf and verify-pi2 subcommands.

Exit status contract (stable for shell scripting):
    0  success / verification passed
    1  verification failed
    2  usage or parse error
    3  math error (factorization breakdown, division by zero, ...)

Rationals serialize as exact "p/q" strings in both JSON and CSV;
decimal strings appear only in fields named *_decimal.  stdout carries
only the report; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction

from .contfrac import CFSpec, convergents
from .errors import (
    DivisionByZero,
    DomainViolation,
    FactorizationBreakdown,
    IndeterminateConvergent,
    ParseError,
)
from .factorize import compute_cd
from .pi_squared import CASES, check_A_closed_form, check_B_series, \
    check_factorization_closed_form, check_limit
from .sequences import PolySeq, Recurrence, parse_polyseq
from .solve import closed_form_nonhomogeneous, iterate_direct
from .arith import to_decimal

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_MATH = 3

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")

# flags whose values may start with '-' (polynomials, rational literals);
# merged into --flag=value form so argparse does not mistake them for options
_VALUE_FLAGS = {
    "--a", "--b", "--f", "--d1", "--y-init", "--tol",
    "--N", "--digits", "--case", "--output", "--out",
}


@dataclass
class JobConfig:
    """Validated inputs of one CLI invocation."""

    command: str
    a: PolySeq | None = None
    b: PolySeq | None = None
    f: PolySeq | None = None
    y_init: tuple[Fraction, Fraction] | None = None
    d1: Fraction | None = None
    N: int = 1
    digits: int | None = None
    output: str = "json"
    out_path: str | None = None
    case: str | None = None
    tol: Decimal | None = None


class UsageError(ValueError):
    pass


def _parse_rational(text: str, what: str) -> Fraction:
    if not _RATIONAL_RE.match(text.strip()):
        raise UsageError(f"{what}: not a rational literal p or p/q: {text!r}")
    return Fraction(text.strip())


def _parse_y_init(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(
            f"--y-init expects two comma-separated rationals, got {text!r}"
        )
    return (
        _parse_rational(parts[0], "--y-init first value"),
        _parse_rational(parts[1], "--y-init second value"),
    )


def _merge_flag_values(argv: list[str]) -> list[str]:
    merged: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            merged.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            merged.append(tok)
            i += 1
    return merged


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="recfrac",
        description="Exact second-order recurrence solving via operator "
        "factorization, and generalized continued fraction evaluation.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp):
        sp.add_argument("--N", type=int, required=True, help="horizon (>= 1)")
        sp.add_argument("--output", choices=("json", "csv"), default="json")
        sp.add_argument("--out", default=None, help="write report to this path")

    f = sub.add_parser("factor", help="compute the factor sequences c_n, d_n")
    f.add_argument("--b", required=True, metavar="POLY")
    f.add_argument("--a", required=True, metavar="POLY")
    f.add_argument("--d1", default="1", help="nonzero rational seed (default 1)")
    add_common(f)

    s = sub.add_parser("solve", help="solve the recurrence exactly")
    s.add_argument("--b", required=True, metavar="POLY")
    s.add_argument("--a", required=True, metavar="POLY")
    s.add_argument("--f", default="0", metavar="POLY")
    s.add_argument("--y-init", required=True, metavar="RAT,RAT",
                   help="initial values y_{-1},y_0")
    s.add_argument("--d1", default=None,
                   help="if given, solve via the closed form over this seed "
                        "and cross-check against direct iteration")
    s.add_argument("--digits", type=int, default=None,
                   help="also emit y_n rounded to this many digits")
    add_common(s)

    c = sub.add_parser("cf", help="continued fraction convergents A_n, B_n")
    c.add_argument("--b", required=True, metavar="POLY")
    c.add_argument("--a", required=True, metavar="POLY")
    c.add_argument("--digits", type=int, default=50)
    add_common(c)

    v = sub.add_parser("verify-pi2", help="run the pi^2 verification reports")
    v.add_argument("--case", required=True, choices=sorted(CASES))
    v.add_argument("--tol", default="1e-12", help="limit-check tolerance")
    add_common(v)
    return p


def _config_from_args(args: argparse.Namespace) -> JobConfig:
    cfg = JobConfig(command=args.command, N=args.N,
                    output=getattr(args, "output", "json"),
                    out_path=getattr(args, "out", None))
    if cfg.N < 1:
        raise UsageError(f"--N must be >= 1, got {cfg.N}")
    if args.command in ("factor", "solve", "cf"):
        cfg.b = parse_polyseq(args.b)
        cfg.a = parse_polyseq(args.a)
    if args.command == "factor":
        cfg.d1 = _parse_rational(args.d1, "--d1")
        if cfg.d1 == 0:
            raise UsageError("--d1 must be nonzero")
    if args.command == "solve":
        cfg.f = parse_polyseq(args.f)
        cfg.y_init = _parse_y_init(getattr(args, "y_init"))
        if args.d1 is not None:
            cfg.d1 = _parse_rational(args.d1, "--d1")
            if cfg.d1 == 0:
                raise UsageError("--d1 must be nonzero")
    if args.command in ("solve", "cf"):
        cfg.digits = getattr(args, "digits", None)
        if cfg.digits is not None and not 1 <= cfg.digits <= 100:
            raise UsageError(f"--digits must be in 1..100, got {cfg.digits}")
    if args.command == "verify-pi2":
        cfg.case = args.case
        try:
            cfg.tol = Decimal(args.tol)
        except InvalidOperation:
            raise UsageError(f"--tol: not a decimal literal: {args.tol!r}")
        if cfg.tol <= 0:
            raise UsageError("--tol must be positive")
    return cfg


def _emit(cfg: JobConfig, text: str) -> None:
    if cfg.out_path:
        with open(cfg.out_path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _run_factor(cfg: JobConfig) -> int:
    rec = Recurrence(a=cfg.a, b=cfg.b, f=PolySeq.zero(),
                     y_init=(Fraction(1), Fraction(1)))
    fac = compute_cd(rec, cfg.d1, cfg.N)
    if cfg.output == "csv":
        rows = [[str(n), str(fac.c_at(n)), str(fac.d_at(n))]
                for n in range(1, cfg.N + 1)]
        rows.append([str(cfg.N + 1), "", str(fac.d_at(cfg.N + 1))])
        _emit(cfg, _csv_text(["n", "c_n", "d_n"], rows))
    else:
        report = {
            "command": "factor",
            "d1": str(fac.d1),
            "N": fac.N,
            "d": [str(v) for v in fac.d],
            "c": [str(v) for v in fac.c],
        }
        _emit(cfg, json.dumps(report, indent=2))
    return EXIT_OK


def _run_solve(cfg: JobConfig) -> int:
    rec = Recurrence(a=cfg.a, b=cfg.b, f=cfg.f, y_init=cfg.y_init)
    direct = iterate_direct(rec, cfg.N)
    closed_matches = None
    trace = direct
    if cfg.d1 is not None:
        fac = compute_cd(rec, cfg.d1, cfg.N)
        trace = closed_form_nonhomogeneous(rec, fac, cfg.N)
        closed_matches = trace.y == direct.y
    decimals = None
    if cfg.digits is not None:
        decimals = [str(to_decimal(v, cfg.digits)) for v in trace.y]
    if cfg.output == "csv":
        header = ["n", "y_n"] + (["y_decimal"] if decimals else [])
        rows = []
        for idx, v in enumerate(trace.y):
            row = [str(idx - 1), str(v)]
            if decimals:
                row.append(decimals[idx])
            rows.append(row)
        _emit(cfg, _csv_text(header, rows))
    else:
        report = {
            "command": "solve",
            "N": cfg.N,
            "method": trace.method.value,
            "y": [str(v) for v in trace.y],
        }
        if decimals:
            report["y_decimal"] = decimals
        if closed_matches is not None:
            report["closed_form_matches_direct"] = closed_matches
        _emit(cfg, json.dumps(report, indent=2))
    if closed_matches is False:
        return EXIT_VERIFY_FAIL
    return EXIT_OK


def _run_cf(cfg: JobConfig) -> int:
    cf = CFSpec(b=cfg.b, a=cfg.a)
    pair = convergents(cf, cfg.N)
    digits = cfg.digits if cfg.digits is not None else 50

    def ratio_str(n: int) -> str:
        if pair.B_at(n) == 0:
            return ""
        return str(to_decimal(pair.ratio(n), digits))

    if cfg.output == "csv":
        rows = [
            [str(n), str(pair.A_at(n)), str(pair.B_at(n)), ratio_str(n)]
            for n in range(-1, cfg.N + 1)
        ]
        _emit(cfg, _csv_text(["n", "A_n", "B_n", "ratio_decimal"], rows))
    else:
        final = ratio_str(cfg.N)
        if not final:
            raise IndeterminateConvergent(f"B_{cfg.N} = 0, convergent undefined")
        report = {
            "command": "cf",
            "N": cfg.N,
            "digits": digits,
            "A": [str(v) for v in pair.A],
            "B": [str(v) for v in pair.B],
            "ratio_decimal": final,
        }
        _emit(cfg, json.dumps(report, indent=2))
    return EXIT_OK


def _run_verify_pi2(cfg: JobConfig) -> int:
    case = CASES[cfg.case]
    reports = [
        check_factorization_closed_form(case, cfg.N),
        check_A_closed_form(case, cfg.N),
        check_B_series(case, cfg.N),
        check_limit(case, cfg.N, cfg.tol),
    ]
    _emit(cfg, json.dumps([r.to_dict() for r in reports], indent=2))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY_FAIL


def run(cfg: JobConfig) -> int:
    """Execute a validated job; returns the exit status."""
    runners = {
        "factor": _run_factor,
        "solve": _run_solve,
        "cf": _run_cf,
        "verify-pi2": _run_verify_pi2,
    }
    return runners[cfg.command](cfg)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(_merge_flag_values(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = _config_from_args(args)
    except (UsageError, ParseError) as exc:
        print(f"recfrac: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return run(cfg)
    except (
        FactorizationBreakdown,
        DivisionByZero,
        IndeterminateConvergent,
        DomainViolation,
        ZeroDivisionError,
    ) as exc:
        print(f"recfrac: math error: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
