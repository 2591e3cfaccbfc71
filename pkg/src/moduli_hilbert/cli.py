"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import asymptotics as asy
from .checks import SUITES, run_suite
from .coefficient_formulas import (
    conjecture_prefactor,
    delta_formula,
    fit_Qk,
    gamma_formula,
)
from .exact_series import ExpPolynomial, coeff_of
from .fj_series import compute_fj
from .hilbert_triangle import compute_alpha, compute_sigma_recursive

# largest f_j the coeff command will build to compare against a formula
DESK_J_MAX = 20


class UsageError(Exception):
    pass


def rational_json(c: Fraction | int) -> dict[str, str]:
    c = Fraction(c)
    return {"num": str(c.numerator), "den": str(c.denominator)}


def rational_text(c: Fraction | int) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def exp_polynomial_json(f: ExpPolynomial) -> list[dict[str, Any]]:
    return [{"freq": k, "poly": [rational_json(c) for c in p.coeffs]} for k, p in f.terms.items()]


def record(command: str, parameters: dict[str, Any], payload: Any) -> dict[str, Any]:
    return {"command": command, "parameters": {k: str(v) for k, v in parameters.items()}, "payload": payload}


def emit_json(obj: Any, out) -> None:
    json.dump(obj, out, sort_keys=True, separators=(",", ":"))
    out.write("\n")


def emit_csv(header: Sequence[str], rows: Sequence[Sequence[Any]], out) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    out.write(buf.getvalue())


def _nonneg(name: str, value: int) -> int:
    if value is None or value < 0:
        raise UsageError(f"--{name} must be a nonnegative integer")
    return value


# commands -----------------------------------------------------------------


def cmd_triangle(args, out) -> int:
    n = _nonneg("n", args.n)
    tri = compute_alpha(n)
    sums = tri.row_sums()
    if args.format == "json":
        rows = [{"n": k, "alpha": [str(a) for a in r], "sigma": str(s)} for k, (r, s) in enumerate(zip(tri.rows, sums))]
        emit_json(record("triangle", {"n": n}, rows), out)
    elif args.format == "csv":
        emit_csv(
            ["n", "i", "j", "alpha", "sigma"],
            [(k, i, k - i, a, sums[k]) for k, r in enumerate(tri.rows) for i, a in enumerate(r)],
            out,
        )
    else:
        width = len(" ".join(map(str, tri.rows[-1])))
        for r, s in zip(tri.rows, sums):
            out.write(f"{' '.join(map(str, r)).center(width)}    {s}\n")
    return 0


def cmd_sigma(args, out) -> int:
    n = _nonneg("n", args.n)
    values = compute_sigma_recursive(n).values
    if args.format == "json":
        emit_json(record("sigma", {"n": n}, [str(v) for v in values]), out)
    elif args.format == "csv":
        emit_csv(["n", "sigma"], list(enumerate(values)), out)
    else:
        for k, v in enumerate(values):
            out.write(f"{k}\t{v}\n")
    return 0


def cmd_fj(args, out) -> int:
    j = _nonneg("j", args.j)
    f = compute_fj(j)[j]
    if args.format == "json":
        emit_json(record("fj", {"j": j}, exp_polynomial_json(f)), out)
    elif args.format == "csv":
        emit_csv(
            ["freq", "power", "coeff"],
            [(k, d, rational_text(c)) for k, p in f.terms.items() for d, c in enumerate(p.coeffs)],
            out,
        )
    else:
        for k, p in f.terms.items():
            out.write(f"freq {k}: [{', '.join(rational_text(c) for c in p.coeffs)}]\n")
    return 0


def cmd_coeff(args, out) -> int:
    s, t, k = args.s, args.t, args.k
    if None in (s, t, k):
        raise UsageError("coeff needs --s, --t and --k")
    if k < 0 or s < k or t < max(k, 1):
        raise UsageError(f"(s={s}, t={t}, k={k}) is outside s >= k, t >= max(k, 1)")
    if k == 0:
        formula, source = gamma_formula(s, t), "gamma"
    elif k == 1:
        formula, source = delta_formula(s, t), "delta"
    else:
        fit = fit_Qk(k)
        formula, source = conjecture_prefactor(k, s, t) * fit(s, t), f"fitted Q_{k}"
    j = s + t - 1
    extracted = coeff_of(compute_fj(j)[j], t, 2 * s - k) if j <= DESK_J_MAX else None
    verdict = "SKIPPED" if extracted is None else "MATCH" if extracted == formula else "MISMATCH"
    params = {"s": s, "t": t, "k": k}
    if args.format == "json":
        emit_json(
            record(
                "coeff",
                params,
                {
                    "source": source,
                    "formula": rational_json(formula),
                    "extracted": None if extracted is None else rational_json(extracted),
                    "verdict": verdict,
                },
            ),
            out,
        )
    elif args.format == "csv":
        emit_csv(
            ["s", "t", "k", "source", "formula", "extracted", "verdict"],
            [(s, t, k, source, rational_text(formula), "" if extracted is None else rational_text(extracted), verdict)],
            out,
        )
    else:
        out.write(f"[x^{2 * s - k} e^{t}x] f_{j}\n")
        out.write(f"formula ({source}): {formula}\n")
        out.write(f"extracted: {'-' if extracted is None else extracted}\n")
        out.write(f"{verdict}\n")
    return 1 if verdict == "MISMATCH" else 0


def cmd_asymptotics(args, out) -> int:
    n_max = args.n
    if n_max is None or n_max < 10:
        raise UsageError("--n must be at least 10")
    sig = compute_sigma_recursive(n_max).values
    rows = []
    for n in range(1, n_max + 1):
        rep = asy.asymptotic_report(n, sig[n])
        corrected = asy.asymptotic_report(n, sig[n], corrected=True).ratio
        rows.append((n, str(sig[n]), asy.mpmath.nstr(rep.estimate, 12), f"{rep.ratio:.10f}", f"{corrected:.10f}"))
    radius = asy.growth_rate_diagnostic(sig)
    header = ["n", "sigma", "estimate", "ratio", "corrected_ratio"]
    if args.format == "json":
        payload = {
            "rows": [dict(zip(header, r)) for r in rows],
            "growth_rate": f"{radius:.10f}",
            "e_minus_2": f"{asy.RADIUS:.10f}",
        }
        emit_json(record("asymptotics", {"n": n_max}, payload), out)
    elif args.format == "csv":
        emit_csv(header, rows, out)
    else:
        for r in rows:
            out.write("\t".join(map(str, r)) + "\n")
        out.write(f"growth-rate estimate {radius:.10f}  (e-2 = {asy.RADIUS:.10f})\n")
    return 0


def cmd_conjecture(args, out) -> int:
    k = _nonneg("k", args.k)
    fit = fit_Qk(k)
    if args.format == "json":
        payload = {
            "candidate": [{"s_power": a, "t_power": b, "coeff": rational_json(c)} for (a, b), c in fit.candidate.items()],
            "grid": [list(p) for p in fit.grid_used],
            "held_out": [list(p) for p in fit.held_out],
            "consistent": fit.consistent,
        }
        emit_json(record("conjecture", {"k": k}, payload), out)
    elif args.format == "csv":
        emit_csv(["s_power", "t_power", "coeff"], [(a, b, rational_text(c)) for (a, b), c in fit.candidate.items()], out)
    else:
        out.write(f"Q_{k}(s,t) = {fit.format()}\n")
        out.write(f"grid {len(fit.grid_used)} points, held out {len(fit.held_out)}\n")
        out.write(f"consistent: {fit.consistent}\n")
    return 0


def cmd_verify(args, out) -> int:
    failed = 0
    for name, ok, detail in run_suite(args.suite):
        print(f"verify: {name}", file=sys.stderr)
        out.write(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}\n")
        failed += not ok
    out.write(f"{args.suite}: {len(SUITES[args.suite]) - failed} passed, {failed} failed\n")
    return 1 if failed else 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["plain", "csv", "json"], default="plain")

    parser = _Parser(prog="moduli-hilbert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("triangle", parents=[common], help="graded dimensions alpha(i,j), i+j <= n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("sigma", parents=[common], help="total dimensions sigma_0..sigma_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("fj", parents=[common], help="closed form of f_j")
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(func=cmd_fj)

    p = sub.add_parser("coeff", parents=[common], help="[x^(2s-k) e^(tx)] f_(s+t-1) against its formula")
    for flag in ("--s", "--t", "--k"):
        p.add_argument(flag, type=int, required=True)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("asymptotics", parents=[common], help="sigma_n against its asymptotic estimate")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_asymptotics)

    p = sub.add_parser("conjecture", parents=[common], help="fit Q_k(s,t) from computed coefficients")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=sorted(SUITES), default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"moduli-hilbert: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
