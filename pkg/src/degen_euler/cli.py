"""Command-line front end.

Subcommands: ``euler``, ``stirling``, ``altsum``, ``verify``, ``padic``,
``kernel``.  Machine-readable results go to stdout, diagnostics to stderr.
Exit codes: 0 all checks passed, 1 at least one check falsified, 2 usage,
parity, or budget error.

Grid subcommands (``verify``, ``padic eq10``) default to the full built-in
parameter grids; ``--jobs K`` fans the grid out over a process pool while
keeping the output order deterministic.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import grids, render
from .errors import (
    BudgetExceeded,
    DenominatorNotInvertible,
    NonOddPrime,
    ParityViolation,
)
from .identities import VERIFIERS, build_kernel
from .padic import DEFAULT_BUDGET, check_eq2, check_eq3, check_eq10
from .poly import MPoly, parse_poly
from .series import TSeries

USAGE_ERROR = 2


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational a/b, got {text!r}")


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("DEGEN_EULER_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            print(f"ignoring malformed DEGEN_EULER_BUDGET={env!r}", file=sys.stderr)
    return DEFAULT_BUDGET


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degen-euler",
        description="Exact tables, identity verification, and p-adic congruence "
        "checks for higher-order degenerate Euler polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = dict(choices=("plain", "json", "latex"), default="plain")

    p_euler = sub.add_parser("euler", help="tables of E_n^(r)(x|L) or E_n^(r)(L)")
    p_euler.add_argument("--order", type=int, default=1, help="family order r")
    p_euler.add_argument("--max", type=int, default=8, help="largest index n")
    group = p_euler.add_mutually_exclusive_group()
    group.add_argument("--numbers", action="store_true", help="emit E_n^(r)(L)")
    group.add_argument("--polynomials", action="store_true", help="emit E_n^(r)(x|L) (default)")
    p_euler.add_argument("--format", **fmt)

    p_stir = sub.add_parser("stirling", help="triangle of S1(n, l)")
    p_stir.add_argument("--max", type=int, default=10, help="largest n")
    p_stir.add_argument("--format", **fmt)

    p_alt = sub.add_parser("altsum", help="table of S~_k(n|L)")
    p_alt.add_argument("--max", type=int, default=6, help="largest k")
    p_alt.add_argument("--n", type=int, default=6, help="largest n")
    p_alt.add_argument("--format", **fmt)

    p_verify = sub.add_parser("verify", help="verify one identity (or all) over a grid")
    p_verify.add_argument(
        "identity",
        nargs="?",
        choices=sorted(grids.DEFAULTS),
        help="identity id; omit with --all",
    )
    p_verify.add_argument("--all", action="store_true", help="run every identity grid")
    p_verify.add_argument("--w1", type=_int_list, help="comma list of w1 values")
    p_verify.add_argument("--w2", type=_int_list, help="comma list of w2 values")
    p_verify.add_argument("--n", type=_int_list, help="comma list of n values")
    p_verify.add_argument("--m", type=_int_list, help="comma list of m values")
    p_verify.add_argument("--order", type=_int_list, help="series truncation order(s)")
    p_verify.add_argument("--allow-even", action="store_true", help="skip parity checks")
    p_verify.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p_verify.add_argument("--format", **fmt)

    p_padic = sub.add_parser("padic", help="fermionic-sum congruence checks")
    p_padic.add_argument("check", choices=("eq2", "eq3", "eq10"))
    p_padic.add_argument("--p", type=_int_list, help="comma list of odd primes")
    p_padic.add_argument("--N", type=_int_list, help="comma list of levels")
    p_padic.add_argument("--n", type=_int_list, help="index n (eq10) or shift (eq3)")
    p_padic.add_argument("--r", type=_int_list, help="variable counts (eq10)")
    p_padic.add_argument("--lambda", dest="lam", type=_fraction, default=None, help="rational a/b")
    p_padic.add_argument("--f", help="integrand polynomial in x, L (eq2/eq3)")
    p_padic.add_argument("--budget", type=int, default=None, help="max p^(N*r) terms")
    p_padic.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p_padic.add_argument("--format", **fmt)

    p_kernel = sub.add_parser("kernel", help="build the symmetric kernel series")
    p_kernel.add_argument("--w1", type=int, default=1)
    p_kernel.add_argument("--w2", type=int, default=1)
    p_kernel.add_argument("--m", type=int, default=1)
    p_kernel.add_argument("--order", type=int, default=6)
    p_kernel.add_argument("--allow-even", action="store_true")
    p_kernel.add_argument("--format", **fmt)

    return parser


# -- verify ---------------------------------------------------------------------


def _verify_case(task: tuple[str, dict, bool]) -> dict:
    identity, params, allow_even = task
    kwargs = dict(params)
    if identity in grids.PARITY_CONSTRAINED and allow_even:
        kwargs["allow_even"] = True
    return VERIFIERS[identity](**kwargs).to_dict()


def _run_ordered(worker, tasks: list, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [worker(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks))


def _emit_verify_reports(reports: list[dict], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(reports, indent=2))
        return
    for report in reports:
        fields = " ".join(f"{k}={v}" for k, v in report["params"].items())
        verdict = "equal" if report["equal"] else "UNEQUAL"
        if fmt == "latex":
            print(
                f"% {report['identity']} {fields} {verdict}\n"
                f"{_latex_side(report['lhs'])} &= {_latex_side(report['rhs'])} \\\\"
            )
        else:
            print(
                f"{report['identity']} {fields} {verdict} "
                f"elapsed_ms={report['elapsed_ms']}"
            )


def _latex_side(data: list) -> str:
    if data and isinstance(data[0], list):
        return render.series_latex(TSeries.from_json(data))
    return render.poly_latex(MPoly.from_json(data))


def cmd_verify(args) -> int:
    if args.all == (args.identity is not None):
        print("specify exactly one of an identity id or --all", file=sys.stderr)
        return USAGE_ERROR
    overrides = {
        k: v
        for k, v in {
            "w1": args.w1,
            "w2": args.w2,
            "n": args.n,
            "m": args.m,
            "order": args.order,
        }.items()
        if v is not None
    }
    if args.all:
        if overrides:
            print("--all always runs the full default grids; drop the axis flags",
                  file=sys.stderr)
            return USAGE_ERROR
        identities = sorted(grids.DEFAULTS)
    else:
        identities = [args.identity]
    tasks = []
    for identity in identities:
        for params in grids.identity_grid(identity, overrides):
            tasks.append((identity, params, args.allow_even))
    try:
        reports = _run_ordered(_verify_case, tasks, args.jobs)
    except ParityViolation as exc:
        print(f"parity violation: {exc}", file=sys.stderr)
        return USAGE_ERROR
    _emit_verify_reports(reports, args.format)
    failed = sum(1 for report in reports if not report["equal"])
    print(
        f"{len(reports)} checks, {len(reports) - failed} passed, {failed} falsified",
        file=sys.stderr,
    )
    return 0 if failed == 0 else 1


# -- padic ----------------------------------------------------------------------


def _padic_eq10_case(task: tuple[int, int, str, int, int, int]) -> dict:
    p, level, lam_text, n, r, budget = task
    lam = Fraction(lam_text)
    verdict = check_eq10(n, r, lam, p, level, budget)
    return {
        "check": "eq10",
        "p": p,
        "N": level,
        "r": r,
        "n": n,
        "lambda": lam_text,
        "sum": str(verdict.lhs),
        "target": str(verdict.rhs),
        "valuation": verdict.valuation,
        "required": verdict.modulus_exponent,
        "pass": verdict.verdict,
    }


def _emit_padic(rows: list[dict], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(rows, indent=2))
        return
    for row in rows:
        head = " ".join(f"{k}={row[k]}" for k in row if k not in ("pass",))
        print(f"{head} pass={row['pass']}")


def cmd_padic(args) -> int:
    budget = _budget(args)
    rows: list[dict]
    if args.check == "eq10":
        if all(v is None for v in (args.p, args.N, args.n, args.r, args.lam)):
            cases = grids.padic_eq10_grid()
        else:
            ps = args.p or [3]
            levels = args.N or [2]
            ns = args.n or [1]
            rs = args.r or [1]
            lam = args.lam if args.lam is not None else Fraction(0)
            cases = [
                {"p": p, "N": level, "lam": lam, "n": n, "r": r}
                for p in ps
                for level in levels
                for n in ns
                for r in rs
            ]
        tasks = [
            (c["p"], c["N"], str(c["lam"]), c["n"], c["r"], budget) for c in cases
        ]
        rows = _run_ordered(_padic_eq10_case, tasks, args.jobs)
    else:
        if not args.f:
            print(f"{args.check} requires --f POLYNOMIAL", file=sys.stderr)
            return USAGE_ERROR
        try:
            integrand = parse_poly(args.f)
        except ValueError as exc:
            print(f"cannot parse --f: {exc}", file=sys.stderr)
            return USAGE_ERROR
        lam = args.lam if args.lam is not None else Fraction(0)
        ps = args.p or [3]
        levels = args.N or [1]
        rows = []
        for p in ps:
            for level in levels:
                if args.check == "eq2":
                    verdict = check_eq2(integrand, lam, p, level, budget)
                    extra = {}
                else:
                    shift = (args.n or [1])[0]
                    verdict = check_eq3(integrand, lam, p, level, shift, budget)
                    extra = {"shift": shift}
                rows.append(
                    {
                        "check": args.check,
                        "p": p,
                        "N": level,
                        **extra,
                        "f": args.f,
                        "lambda": str(lam),
                        "sum": str(verdict.lhs),
                        "target": str(verdict.rhs),
                        "valuation": verdict.valuation,
                        "required": verdict.modulus_exponent,
                        "pass": verdict.verdict,
                    }
                )
    _emit_padic(rows, args.format)
    failed = sum(1 for row in rows if not row["pass"])
    print(
        f"{len(rows)} congruences, {len(rows) - failed} passed, {failed} failed",
        file=sys.stderr,
    )
    return 0 if failed == 0 else 1


# -- tables -----------------------------------------------------------------------


def cmd_euler(args) -> int:
    polynomials = not args.numbers
    rows = render.euler_rows(args.order, args.max, polynomials=polynomials)
    print(render.render_euler_table(rows, args.format, polynomials))
    return 0


def cmd_stirling(args) -> int:
    rows = render.stirling_rows(args.max)
    print(render.render_stirling_table(rows, args.format))
    return 0


def cmd_altsum(args) -> int:
    rows = render.altsum_rows(args.max, args.n)
    print(render.render_altsum_table(rows, args.format))
    return 0


def cmd_kernel(args) -> int:
    kernel = build_kernel(args.w1, args.w2, args.m, args.order, allow_even=args.allow_even)
    if args.format == "json":
        print(json.dumps(kernel.to_json()))
    elif args.format == "latex":
        print(render.series_latex(kernel))
    else:
        print(kernel)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "euler": cmd_euler,
        "stirling": cmd_stirling,
        "altsum": cmd_altsum,
        "verify": cmd_verify,
        "padic": cmd_padic,
        "kernel": cmd_kernel,
    }
    try:
        return handlers[args.command](args)
    except ParityViolation as exc:
        print(f"parity violation: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (BudgetExceeded, NonOddPrime, DenominatorNotInvertible) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
