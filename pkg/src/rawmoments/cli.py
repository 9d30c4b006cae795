"""Command-line driver.

Exit codes: 0 success, 1 domain error, 2 property violation, 64 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import analysis, asymptote, bounds, exact
from .errors import DomainError

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_VIOLATION = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def format_cell(value) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def emit(header: Sequence[str], rows: Sequence[Sequence], out_path: Optional[str], stdout) -> None:
    cells = [[format_cell(v) for v in row] for row in rows]
    if out_path:
        with open(out_path, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(cells)
        return
    widths = [max(len(h), *(len(r[i]) for r in cells)) for i, h in enumerate(header)]
    stdout.write("  ".join(h.rjust(w) for h, w in zip(header, widths)) + "\n")
    for r in cells:
        stdout.write("  ".join(c.rjust(w) for c, w in zip(r, widths)) + "\n")


def _rational(text: str) -> Fraction:
    try:
        return exact.as_fraction(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rawmoments", description="Raw moments of the binomial distribution.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--out", help="write CSV to this path instead of a table on stdout")
        return sp

    sp = add("moment", "exact E(R^k)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=_rational, required=True)
    sp.add_argument("--k", type=int, required=True)

    sp = add("asymptote", "saddle point, maximiser and log Psi")
    sp.add_argument("--beta", type=float, required=True)
    sp.add_argument("--p", type=float, required=True)

    sp = add("bounds", "log-space bound report")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=_rational, required=True)
    sp.add_argument("--k", type=int, required=True)

    sp = add("temme", "saddle-point approximation of log S(k, j)")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--j", type=int, nargs="*", help="default: every j in 1..k-1")

    sp = add("converge", "normalised exact log-moment against log Psi")
    sp.add_argument("--beta", type=float, required=True)
    sp.add_argument("--p", type=_rational, required=True)
    sp.add_argument("--k", type=int, nargs="+", default=[50, 100, 200, 400])
    sp.add_argument("--kmax-hard", type=int, default=1000)

    sp = add("check", "log-concavity and unimodality sweep")
    sp.add_argument("--kmax", type=int, default=100)
    sp.add_argument("--p", type=_rational, nargs="+", default=[Fraction(1, 3), Fraction(1, 2)])

    sp = add("mc", "Monte Carlo estimate of P(all red)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--samples", type=int, default=1_000_000)
    sp.add_argument("--seed", type=int, default=0)
    return parser


def _cmd_moment(args, stdout) -> int:
    q = exact.MomentQuery(args.n, args.p, args.k)
    value = exact.raw_moment_stirling(q)
    if args.out:
        emit(["n", "p", "k", "moment", "log_moment"],
             [[q.n, q.p, q.k, value, bounds.log_of_exact(value).log_e]], args.out, stdout)
    else:
        stdout.write(format_cell(value) + "\n")
    return EXIT_OK


def _cmd_asymptote(args, stdout) -> int:
    sol = asymptote.log_psi(args.beta, args.p)
    header = ["beta", "p", "chi0", "tau0", "log_psi", "psi", "printed_log_psi", "printed_psi"]
    row = [sol.beta, sol.p, sol.chi0, sol.tau0, sol.log_psi, sol.psi,
           sol.psi_theorem_form, sol.theorem_form_value]
    emit(header, [row], args.out, stdout)
    if not args.out:
        note = "exceeds" if sol.theorem_form_exceeds_ceiling else "respects"
        stdout.write(
            f"note: the closed-form product without the p^tau/e factor {note} the ceiling "
            f"Psi <= beta = {sol.beta:.12g}; log_psi - printed_log_psi = "
            f"{sol.log_psi - sol.psi_theorem_form:.12g} (= tau0 log p - 1)\n"
        )
    return EXIT_OK


def _cmd_bounds(args, stdout) -> int:
    report = bounds.bound_report(exact.MomentQuery(args.n, args.p, args.k))
    emit(bounds.BoundReport.csv_header(), [report.csv_row()], args.out, stdout)
    bad = report.violations()
    if bad:
        sys.stderr.write("bound violation: " + ", ".join(bad) + "\n")
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_temme(args, stdout) -> int:
    k = args.k
    js = args.j if args.j else range(1, k)
    row_k = exact.stirling_row(k)
    rows = []
    for j in js:
        approx = bounds.temme_stirling(k, j).log_e
        ex = bounds.log_of_exact(row_k[j]).log_e
        rel = abs(approx - ex) / abs(ex) if ex != 0 else float("nan")
        rows.append([k, j, ex, approx, rel, 0.1 <= j / k <= 0.9])
    emit(["k", "j", "log_exact", "log_temme", "rel_error", "in_core_range"], rows, args.out, stdout)
    return EXIT_OK


def _cmd_converge(args, stdout) -> int:
    rows = analysis.converge_table(args.beta, args.p, args.k, kmax_hard=args.kmax_hard)
    emit(["k", "n", "normalized_log_moment", "log_psi", "gap"],
         [[r.k, r.n, r.normalized_log_moment, r.log_psi, r.gap] for r in rows], args.out, stdout)
    return EXIT_OK


def _cmd_check(args, stdout) -> int:
    rows = []
    failed = False
    for k in range(1, args.kmax + 1):
        for n in sorted({max(1, k // 2), k, 2 * k}):
            for p in args.p:
                r = analysis.unimodality_check(k, n, p)
                failed |= not r.ok
                rows.append([r.k, r.n, r.p, r.klaner_holds, r.unimodal_stirling,
                             r.unimodal_with_falling, r.unimodal_with_p, r.mode_index])
    header = ["k", "n", "p", "klaner_holds", "unimodal_stirling", "unimodal_with_falling",
              "unimodal_with_p", "mode_index"]
    if args.out:
        emit(header, rows, args.out, stdout)
    status = "VIOLATION" if failed else "all properties hold"
    stdout.write(f"checked {len(rows)} cases up to k={args.kmax}: {status}\n")
    return EXIT_VIOLATION if failed else EXIT_OK


def _cmd_mc(args, stdout) -> int:
    est = analysis.mc_all_red(args.n, args.p, args.k, args.samples, args.seed)
    ex = exact.all_red_probability(exact.MomentQuery(args.n, exact.as_fraction(args.p), args.k))
    z = (est.estimate - float(ex)) / est.stderr if est.stderr > 0 else 0.0
    emit(["n", "p", "k", "samples", "seed", "estimate", "stderr", "exact", "z"],
         [[args.n, args.p, args.k, args.samples, args.seed, est.estimate, est.stderr, ex, z]],
         args.out, stdout)
    return EXIT_OK


_COMMANDS = {
    "moment": _cmd_moment,
    "asymptote": _cmd_asymptote,
    "bounds": _cmd_bounds,
    "temme": _cmd_temme,
    "converge": _cmd_converge,
    "check": _cmd_check,
    "mc": _cmd_mc,
}


def main(argv: Optional[List[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(str(exc) + "\n")
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, stdout)
    except DomainError as exc:
        sys.stderr.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN


def run(argv: Sequence[str]) -> tuple:
    """Run the CLI in-process and return ``(exit_code, stdout_text)``."""
    buf = io.StringIO()
    code = main(list(argv), stdout=buf)
    return code, buf.getvalue()
