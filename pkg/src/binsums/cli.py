"""Command-line front end.

    binsums table  --a -1 --b 0 --n 4 [--format csv|json]
    binsums sum    --n 4 --m 5 --k 0 --z -1
    binsums poly   --family lucas --index 4 --s -1
    binsums verify --suite thm3
    binsums paths  --n 4 --m 2

Exit codes: 0 success (and all-pass verification), 1 verification failures,
2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .exact import LaurentPoly, format_rational, parse_rational
from .kernel import KernelParams, kernel_table
from .polyfam import family_poly
from .sums import SYMBOLIC, a_value
from .verify import SUITES, lattice_path_count, run_suite

IDENTITY = "binomial-sum annihilator identities (kernel lemmas, corollary, theorems 1-3, strip paths)"
FAMILY_CHOICES = ("p", "q", "fib", "lucas", "fib-closed", "lucas-closed")


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _z_value(text: str):
    if text == SYMBOLIC:
        return SYMBOLIC
    value = _rational(text)
    if value == 0:
        raise argparse.ArgumentTypeError("z must be nonzero (or 'symbolic')")
    return value


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="binsums", description="Exact binomial sums and their recurrences.")
    parser.add_argument("--version", action="version", version=f"binsums {__version__} ({IDENTITY})")
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="kernel table s(n, k, a, b)")
    table.add_argument("--a", type=_rational, default=parse_rational("-1"))
    table.add_argument("--b", type=_rational, default=parse_rational("0"))
    table.add_argument("--n", type=_nonneg, required=True, help="last row to print")
    table.add_argument("--format", choices=("csv", "json"), default="csv")

    sm = sub.add_parser("sum", help="a(n, m, k, z)")
    sm.add_argument("--n", type=_nonneg, required=True)
    sm.add_argument("--m", type=_positive, required=True)
    sm.add_argument("--k", type=_integer, required=True)
    sm.add_argument("--z", type=_z_value, default=SYMBOLIC, help="rational p/q or 'symbolic'")

    poly = sub.add_parser("poly", help="member of a polynomial family")
    poly.add_argument("--family", choices=FAMILY_CHOICES, required=True)
    poly.add_argument("--index", type=_nonneg, required=True)
    poly.add_argument("--a", type=_rational, default=parse_rational("-1"))
    poly.add_argument("--b", type=_rational, default=parse_rational("0"))
    poly.add_argument("--s", type=_rational, default=parse_rational("-1"))
    poly.add_argument("--format", choices=("pretty", "json"), default=None,
                      help="print only one form (default: both)")

    ver = sub.add_parser("verify", help="run verification suites")
    ver.add_argument("--suite", choices=SUITES + ("all",), default="all")
    ver.add_argument("--m-max", type=_nonneg, default=None)
    ver.add_argument("--n-max", type=_nonneg, default=None)
    ver.add_argument("--k-max", type=_nonneg, default=None)
    ver.add_argument("--k-margin", type=_nonneg, default=None)

    paths = sub.add_parser("paths", help="strip lattice-path count")
    paths.add_argument("--n", type=_nonneg, required=True)
    paths.add_argument("--m", type=_positive, required=True)
    parser.commands = {"table": table, "sum": sm, "poly": poly, "verify": ver, "paths": paths}
    return parser


def _cmd_table(args, out) -> int:
    table = kernel_table(KernelParams(args.a, args.b))
    if args.format == "csv":
        ks = range(-args.n, args.n + 1)
        out.write("n," + ",".join(str(k) for k in ks) + "\n")
        for n in range(args.n + 1):
            out.write(f"{n}," + ",".join(format_rational(table.value(n, k)) for k in ks) + "\n")
    else:
        rows = [
            [[k, format_rational(table.value(n, k))] for k in range(-n, n + 1)]
            for n in range(args.n + 1)
        ]
        out.write(json.dumps(rows) + "\n")
    return 0


def _cmd_sum(args, out) -> int:
    value = a_value(args.n, args.m, args.k, args.z)
    if isinstance(value, LaurentPoly):
        out.write(json.dumps(value.to_json()) + "\n")
    else:
        out.write(format_rational(value) + "\n")
    return 0


def _cmd_poly(args, out, parser) -> int:
    if args.family.endswith("-closed") and args.index < 1:
        parser.error("argument --index: closed forms need --index >= 1")
    poly = family_poly(args.family, args.index, a=args.a, b=args.b, s=args.s)
    if args.format in (None, "pretty"):
        out.write(poly.format(coeff_var="s") + "\n")
    if args.format in (None, "json"):
        out.write(json.dumps(poly.to_json()) + "\n")
    return 0


def _cmd_verify(args, out, parser) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    if args.m_max is not None and args.m_max < 1 and any(
        n in ("lemma2", "thm1", "thm2", "thm3", "paths") for n in names
    ):
        parser.error("argument --m-max: must be >= 1 for this suite")
    reports = [
        run_suite(name, m_max=args.m_max, n_max=args.n_max, k_max=args.k_max, k_margin=args.k_margin)
        for name in names
    ]
    passed = all(r.passed for r in reports)
    doc = {
        "identity": IDENTITY,
        "version": __version__,
        "passed": passed,
        "reports": [r.to_dict() for r in reports],
    }
    out.write(json.dumps(doc, indent=2) + "\n")
    return 0 if passed else 1


def _cmd_paths(args, out) -> int:
    out.write(f"{lattice_path_count(args.n, args.m)}\n")
    return 0


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    old_out, old_err = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = out, err
    try:
        args = parser.parse_args(argv)
        if args.command == "table":
            return _cmd_table(args, out)
        if args.command == "sum":
            return _cmd_sum(args, out)
        if args.command == "poly":
            return _cmd_poly(args, out, parser.commands["poly"])
        if args.command == "verify":
            return _cmd_verify(args, out, parser.commands["verify"])
        return _cmd_paths(args, out)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    finally:
        sys.stdout, sys.stderr = old_out, old_err


def main() -> None:
    sys.exit(run())

