"""Command-line front end.

Commands: verify, bounds, figure, asymptotics, boundary.  JSON is the
canonical output (exact values as "p/q" strings); CSV and text are lossy
projections rendered at the configured precision.  Exit codes: 0 success,
1 identity/ordering failure, 2 usage error, 3 undecided at precision.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial
from typing import Callable, Iterable, Sequence

from .charpoly import (
    char_poly,
    char_poly_by_summation,
    recurrence_residual,
    verify_inverse_identity,
)
from .determinants import (
    DetReport,
    verify_boundary,
    verify_cauchy,
    verify_corollary_full,
    verify_kron_factorization,
    verify_legendre_hooks,
    verify_thm31,
)
from .exact import bits_to_digits, format_decimal
from .spectra import (
    asymptotic_table,
    bound_report,
    boundary_factor_roots,
    max_boundary_eigenvalue,
    all_roots,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_UNDECIDED = 3

VERIFY_SETS = ("thm31", "corollary", "lemma32", "cauchy", "recurrence",
               "kron", "legendre", "boundary", "charpoly", "all")

KRON_SAMPLES = (Fraction(0), Fraction(1), Fraction(7, 2))


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """Parse 'A..B' (inclusive) or a comma-separated list of integers."""
    try:
        if ".." in text:
            a_str, b_str = text.split("..", 1)
            a, b = int(a_str), int(b_str)
            if a > b:
                raise UsageError(f"empty range {text!r}")
            return list(range(a, b + 1))
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise UsageError(f"malformed range {text!r}") from exc
    if not values:
        raise UsageError(f"empty range {text!r}")
    return values


def parse_tolerance(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            tol = Fraction(int(num), int(den))
        else:
            tol = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed tolerance {text!r}") from exc
    if tol <= 0:
        raise UsageError("tolerance must be positive")
    return tol


# -- verify ------------------------------------------------------------------


def _rows_for_identity(identity: str, n: int) -> list[dict]:
    rows: list[dict] = []

    def from_reports(reports: Iterable[DetReport]) -> None:
        for rep in reports:
            rows.append(rep.to_json_dict())

    if identity == "thm31":
        from_reports(verify_thm31(n))
    elif identity == "corollary":
        if n >= 1:
            from_reports([verify_corollary_full(n)])
    elif identity == "cauchy":
        from_reports([verify_cauchy(0, n), verify_cauchy(1, n)])
    elif identity == "legendre":
        from_reports(verify_legendre_hooks(n))
    elif identity == "boundary":
        from_reports(verify_boundary(n))
    elif identity == "recurrence":
        residual = recurrence_residual(n)
        rows.append({
            "n": n,
            "identity": "recurrence",
            "lhs": residual.coeff_strings(),
            "rhs": [],
            "equal": residual.is_zero(),
        })
    elif identity == "lemma32":
        if n >= 1:
            for ell in (0, 1):
                report = verify_inverse_identity(ell, n)
                rows.append({
                    "n": n,
                    "identity": f"lemma32-parity{ell}",
                    "equal": report.ok,
                    "failures": [
                        {"row": idx, "residual": res.coeff_strings()}
                        for idx, res in report.failures
                    ],
                })
    elif identity == "kron":
        for sample in KRON_SAMPLES:
            rows.append({
                "n": n,
                "identity": "kron",
                "sample": str(sample),
                "equal": verify_kron_factorization(n, sample),
            })
    elif identity == "charpoly":
        # Dump the exact coefficients while checking the two independent
        # construction routes agree.
        direct = char_poly(n).poly
        rows.append({
            "n": n,
            "identity": "charpoly",
            "coeffs": direct.coeff_strings(),
            "equal": direct == char_poly_by_summation(n).poly,
        })
    else:
        raise UsageError(f"unknown identity set {identity!r}")
    return rows


def _verify_worker(identities: tuple[str, ...], n: int) -> list[dict]:
    rows = []
    for identity in identities:
        rows.extend(_rows_for_identity(identity, n))
    return rows


_VERIFY_MINIMUMS = {"thm31": 0, "corollary": 1, "lemma32": 1, "cauchy": 0,
                    "recurrence": 0, "kron": 1, "legendre": 0, "boundary": 0,
                    "charpoly": 0}


def _domain_check_verify(identities: Sequence[str], ns: Sequence[int]) -> None:
    for identity in identities:
        low = _VERIFY_MINIMUMS[identity]
        if min(ns) < low:
            raise UsageError(f"{identity} needs n >= {low}")
        if identity == "kron" and max(ns) > 6:
            raise UsageError("kron factorization check is limited to n <= 6")


def cmd_verify(args: argparse.Namespace) -> int:
    ns = parse_range(args.range)
    identities = VERIFY_SETS[:-1] if args.identity == "all" else (args.identity,)
    if args.identity == "all":
        # Restrict each identity to its own domain instead of failing.
        work = []
        for identity in identities:
            sub = [n for n in ns if n >= _VERIFY_MINIMUMS[identity]]
            if identity == "kron":
                sub = [n for n in sub if n <= 6]
            work.append((identity, sub))
    else:
        _domain_check_verify(identities, ns)
        work = [(args.identity, ns)]

    rows: list[dict] = []
    for identity, sub_ns in work:
        worker = partial(_verify_worker, (identity,))
        rows.extend(_run_mapped(worker, sub_ns, args.jobs))
    rows.sort(key=lambda r: (r["n"], r["identity"], r.get("sample", "")))
    _emit(rows, args, csv_fields=("n", "identity", "equal"))
    return EXIT_OK if all(r["equal"] for r in rows) else EXIT_FAILURE


# -- bounds --------------------------------------------------------------------


def _bounds_worker(tol: Fraction, digits: int, n: int) -> list[dict]:
    report = bound_report(n, tol)
    flags = report.orderings
    return [{
        "n": n,
        "m": {
            "u": str(report.m.u),
            "v": str(report.m.v),
            "lo": str(report.m_enclosure.lo),
            "hi": str(report.m_enclosure.hi),
        },
        "lambda": {"lo": str(report.lam.lo), "hi": str(report.lam.hi)},
        "f1": str(report.f1),
        "M": {"lo": str(report.upper_enclosure.lo), "hi": str(report.upper_enclosure.hi)},
        "orderings": {
            "m_le_lambda": flags.m_le_lambda,
            "lambda_le_f1": flags.lambda_le_f1,
            "lambda_le_M": flags.lambda_le_upper,
            "m_strict": flags.m_strict,
            "f1_strict": flags.f1_strict,
            "M_strict": flags.upper_strict,
            "M_equal": flags.upper_equal,
            "decided": flags.decided,
        },
        "ok": flags.all_hold,
        "_csv": {
            "n": n,
            "m": format_decimal(report.m_enclosure.mid, digits),
            "lambda_lo": format_decimal(report.lam.lo, digits),
            "lambda_hi": format_decimal(report.lam.hi, digits),
            "f1": str(report.f1),
            "M": format_decimal(report.upper_enclosure.mid, digits),
            "ok": flags.all_hold,
        },
    }]


def cmd_bounds(args: argparse.Namespace) -> int:
    ns = parse_range(args.range)
    if min(ns) < 2:
        raise UsageError("bounds needs n >= 2 throughout the range")
    tol = parse_tolerance(args.tol)
    digits = bits_to_digits(args.bits)
    rows = _run_mapped(partial(_bounds_worker, tol, digits), ns, args.jobs)
    rows.sort(key=lambda r: r["n"])
    _emit(rows, args, csv_fields=("n", "m", "lambda_lo", "lambda_hi", "f1", "M", "ok"))
    if not all(r["ok"] for r in rows):
        return EXIT_FAILURE
    if not all(r["orderings"]["decided"] for r in rows):
        return EXIT_UNDECIDED
    return EXIT_OK


# -- figure --------------------------------------------------------------------


def _figure_worker(tol: Fraction, digits: int, n: int) -> list[dict]:
    table = all_roots(n, tol)
    return [
        {
            "n": n,
            "root": format_decimal(enc.mid, digits),
            "parity": n % 2,
        }
        for enc in table.roots
    ]


def cmd_figure(args: argparse.Namespace) -> int:
    ns = parse_range(args.range)
    if min(ns) < 2:
        raise UsageError("figure needs n >= 2 throughout the range")
    tol = parse_tolerance(args.tol)
    digits = bits_to_digits(args.bits)
    rows = _run_mapped(partial(_figure_worker, tol, digits), ns, args.jobs)
    rows.sort(key=lambda r: (r["n"], Fraction(r["root"])))
    _emit(rows, args, csv_fields=("n", "root", "parity"), default_format="csv")
    return EXIT_OK


# -- asymptotics -----------------------------------------------------------------


def cmd_asymptotics(args: argparse.Namespace) -> int:
    ns = parse_range(args.range)
    if min(ns) < 2:
        raise UsageError("asymptotics needs n >= 2")
    tol = parse_tolerance(args.tol)
    digits = bits_to_digits(args.bits)
    rows = []
    for row in asymptotic_table(ns, tol):
        # JSON keeps the exact rationals; the CSV projection renders decimals.
        rows.append({
            "n": row.n,
            "lambda_over_n4": str(row.lambda_over_n4),
            "lambda_over_f1": str(row.lambda_over_f1),
            "smallest_root_even": str(row.smallest_root_even),
            "smallest_root_odd": str(row.smallest_root_odd),
            "targets": {k: str(v) for k, v in row.targets.items()},
            "_csv": {
                "n": row.n,
                "lambda_over_n4": format_decimal(row.lambda_over_n4, digits),
                "lambda_over_f1": format_decimal(row.lambda_over_f1, digits),
                "smallest_root_even": format_decimal(row.smallest_root_even, digits),
                "smallest_root_odd": format_decimal(row.smallest_root_odd, digits),
            },
        })
    _emit(rows, args, csv_fields=("n", "lambda_over_n4", "lambda_over_f1",
                                  "smallest_root_even", "smallest_root_odd"))
    return EXIT_OK


# -- boundary --------------------------------------------------------------------


def _boundary_worker(n: int) -> list[dict]:
    reports = verify_boundary(n)
    identities_ok = all(rep.equal for rep in reports)
    mu = max_boundary_eigenvalue(n)
    mu_matches = mu == max(boundary_factor_roots(n))
    return [{
        "n": n,
        "mu": str(mu),
        "identities_equal": identities_ok,
        "mu_matches_det": mu_matches,
        "ok": identities_ok and mu_matches,
    }]


def cmd_boundary(args: argparse.Namespace) -> int:
    ns = parse_range(args.range)
    if min(ns) < 1:
        raise UsageError("boundary needs n >= 1")
    rows = _run_mapped(_boundary_worker, ns, args.jobs)
    rows.sort(key=lambda r: r["n"])
    _emit(rows, args, csv_fields=("n", "mu", "ok"))
    return EXIT_OK if all(r["ok"] for r in rows) else EXIT_FAILURE


# -- shared plumbing --------------------------------------------------------------


def _run_mapped(worker: Callable[[int], list[dict]], ns: Sequence[int],
                jobs: int) -> list[dict]:
    if jobs > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(worker, ns))
    else:
        chunks = [worker(n) for n in ns]
    return [row for chunk in chunks for row in chunk]


def _emit(rows: list[dict], args: argparse.Namespace,
          csv_fields: tuple[str, ...], default_format: str = "json") -> None:
    fmt = args.format or default_format
    lines = []
    if fmt == "json":
        for row in rows:
            lines.append(json.dumps({k: v for k, v in row.items() if k != "_csv"}))
    elif fmt == "csv":
        lines.append(",".join(csv_fields))
        for row in rows:
            source = row.get("_csv", row)
            lines.append(",".join(_csv_cell(source.get(f)) for f in csv_fields))
    else:
        for row in rows:
            source = row.get("_csv", row)
            flat = {f: source.get(f) for f in csv_fields}
            lines.append("  ".join(f"{k}={_csv_cell(v)}" for k, v in flat.items()))
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _csv_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invineq",
        description="Exact verification of the determinant identities and "
                    "certified eigenvalue bounds for inverse inequalities on "
                    "the reference square.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, default_range: str = "2..50") -> None:
        p.add_argument("--range", default=default_range,
                       help="inclusive range A..B or comma list (default %(default)s)")
        p.add_argument("--tol", default="1/1000000000000",
                       help="rational tolerance P/Q or decimal (default 1e-12)")
        p.add_argument("--bits", type=int, default=128,
                       help="fixed-point fraction bits for decimal output (>= 64)")
        p.add_argument("--format", choices=("json", "csv", "text"), default=None)
        p.add_argument("--out", default=None, help="write output to this path")
        p.add_argument("--jobs", type=int, default=1,
                       help="worker processes for per-n computations")

    p_verify = sub.add_parser("verify", help="exact determinant/identity checks")
    p_verify.add_argument("identity", choices=VERIFY_SETS)
    add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_bounds = sub.add_parser("bounds", help="certified eigenvalue bound orderings")
    add_common(p_bounds)
    p_bounds.set_defaults(func=cmd_bounds)

    p_figure = sub.add_parser("figure", help="root-distribution table (CSV)")
    add_common(p_figure)
    p_figure.set_defaults(func=cmd_figure)

    p_asym = sub.add_parser("asymptotics", help="limit diagnostics per n")
    add_common(p_asym, default_range="10,25,50")
    p_asym.set_defaults(func=cmd_asymptotics)

    p_boundary = sub.add_parser("boundary", help="boundary eigenvalues and identities")
    add_common(p_boundary, default_range="1..10")
    p_boundary.set_defaults(func=cmd_boundary)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.bits < 64:
        parser.exit(EXIT_USAGE, "error: --bits must be >= 64\n")
    if args.jobs < 1:
        parser.exit(EXIT_USAGE, "error: --jobs must be >= 1\n")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.exit(EXIT_USAGE, f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
