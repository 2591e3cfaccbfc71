"""Named verification suites shared by ``verify`` and the experiment scripts.

Each check returns ``(passed, detail)``.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Callable

from . import asymptotics as asy
from .coefficient_formulas import (
    abel_identity_check,
    binomial_derivative_check,
    delta_formula,
    fit_Qk,
    gamma_formula,
)
from .exact_series import ExpPolynomial, coeff_of, taylor_coeff
from .fj_series import compute_fj, verify_degree_bound, verify_integral_identity
from .hilbert_triangle import check_symmetry, compute_alpha, compute_sigma_recursive

Check = Callable[[], "tuple[bool, str]"]

TABLE1 = [
    [1],
    [1, 1],
    [1, 5, 1],
    [1, 16, 16, 1],
    [1, 42, 127, 42, 1],
    [1, 99, 715, 715, 99, 1],
    [1, 219, 3292, 7723, 3292, 219, 1],
]
TABLE1_SIGMA = [1, 2, 7, 34, 213, 1630, 14747]

F = Fraction
TABLE2 = [
    ExpPolynomial({0: [-1, -1], 1: [1]}),
    ExpPolynomial({2: [2], 1: [-2, -2, F(-1, 2)]}),
    ExpPolynomial({3: [F(27, 2)], 2: [-22, -20, -4], 1: [F(17, 2), 15, F(17, 2), F(11, 6), F(1, 8)]}),
    ExpPolynomial(
        {
            4: [F(512, 3)],
            3: [-378, -324, F(-243, 4)],
            2: [262, 432, 240, F(160, 3), 4],
            1: [F(-164, 3), -126, F(-423, 4), -41, F(-185, 24), F(-2, 3), F(-1, 48)],
        }
    ),
]


def table1() -> tuple[bool, str]:
    tri = compute_alpha(6)
    ok = [list(r) for r in tri.rows] == TABLE1 and tri.row_sums() == TABLE1_SIGMA
    ok = ok and list(compute_sigma_recursive(6).values) == TABLE1_SIGMA
    return ok, "28 entries and sigma column"


def table2() -> tuple[bool, str]:
    table = compute_fj(3)
    bad = [j for j in range(4) if table[j] != TABLE2[j]]
    return not bad, "f_0..f_3" + (f", mismatched {bad}" if bad else "")


def symmetry() -> tuple[bool, str]:
    return check_symmetry(compute_alpha(30)), "rows 0..30 palindromic"


def sigma_paths() -> tuple[bool, str]:
    n = 60
    ok = compute_alpha(n).row_sums() == list(compute_sigma_recursive(n).values)
    return ok, f"row sums == sigma recursion for n <= {n}"


def cross_derivation(j_max: int = 10, i_max: int = 20) -> tuple[bool, str]:
    tri = compute_alpha(j_max + i_max)
    table = compute_fj(j_max)
    for j in range(j_max + 1):
        for i in range(i_max + 1):
            if taylor_coeff(table[j], i + 2) * math.factorial(i + 2) != tri(i, j):
                return False, f"alpha({i},{j}) mismatch"
    return True, f"j <= {j_max}, i <= {i_max}"


def integral_identity(j_max: int = 8) -> tuple[bool, str]:
    table = compute_fj(j_max + 1)
    bad = [j for j in range(j_max + 1) if not verify_integral_identity(j, table)]
    return not bad, f"j = 0..{j_max}" + (f", failed {bad}" if bad else "")


def degree_sequences(j_max: int = 10) -> tuple[bool, str]:
    table = compute_fj(j_max)
    bad = [j for j in range(1, j_max + 1) if not verify_degree_bound(j, table)]
    return not bad, f"j = 1..{j_max}" + (f", failed {bad}" if bad else "")


def gamma_delta(total: int = 10) -> tuple[bool, str]:
    table = compute_fj(total - 1)
    for s in range(0, total):
        for t in range(1, total - s + 1):
            f = table[s + t - 1]
            if coeff_of(f, t, 2 * s) != gamma_formula(s, t):
                return False, f"gamma({s},{t})"
            if s >= 1 and coeff_of(f, t, 2 * s - 1) != delta_formula(s, t):
                return False, f"delta({s},{t})"
    return True, f"all valid (s,t) with s+t <= {total}"


def abel(t_max: int = 30) -> tuple[bool, str]:
    bad = [t for t in range(1, t_max + 1) if not abel_identity_check(t)]
    return not bad, f"t = 1..{t_max}"


def binomial_moments(n_points: int = 20, seed: int = 20100) -> tuple[bool, str]:
    rng = random.Random(seed)
    grid = [(rng.randint(0, 12), rng.randint(1, 9), rng.randint(1, 9)) for _ in range(n_points)]
    bad = [p for p in grid if not binomial_derivative_check(*p)]
    return not bad, f"{n_points} random (s,c,d)"


def ode_residual(N: int = 60) -> tuple[bool, str]:
    return asy.ode_residual_series(N, compute_sigma_recursive(N).values), f"through x^{N}"


def puiseux(k_max: int = 12) -> tuple[bool, str]:
    mu = asy.puiseux_mu(k_max).mu
    ok = mu[2] == F(-1, 3) and mu[3] == F(11, 72)
    ok = ok and not any(asy.puiseux_functional_residual(mu))
    return ok, f"mu_2, mu_3 and functional equation through p^{k_max}"


def lambert_special() -> tuple[bool, str]:
    w = asy.lambert_w(-2 * math.exp(-2), -1)
    return abs(w + 2) <= 1e-12, f"W_-1(-2e^-2) = {w!r}"


def g_vs_series() -> tuple[bool, str]:
    sig = compute_sigma_recursive(40).values
    diff = abs(asy.g_closed_form(0.1) - asy.g_series(0.1, sig))
    return diff <= 1e-10, f"|g(0.1) - series_40| = {diff:.3e}"


def sigma_ratio_200() -> tuple[bool, str]:
    r = asy.sigma_ratio(200)
    return abs(r - 1) <= 0.02, f"sigma_200/estimate = {r:.6f}"


def sigma_ratio_improves() -> tuple[bool, str]:
    sig = compute_sigma_recursive(400).values
    r200, r400 = asy.sigma_ratio(200, sig), asy.sigma_ratio(400, sig)
    return abs(r400 - 1) < abs(r200 - 1), f"|r400-1| = {abs(r400 - 1):.6f} < |r200-1| = {abs(r200 - 1):.6f}"


def growth_rate() -> tuple[bool, str]:
    est = asy.growth_rate_diagnostic(compute_sigma_recursive(299).values)
    return abs(est / asy.RADIUS - 1) <= 0.01, f"ratio-test radius {est:.6f} vs e-2 = {asy.RADIUS:.6f}"


def conjecture_k(k: int) -> Check:
    def check() -> tuple[bool, str]:
        fit = fit_Qk(k)
        return fit.consistent, f"Q_{k} = {fit.format()}"

    check.__name__ = f"conjecture_Q{k}"
    return check


def conjecture_known() -> tuple[bool, str]:
    q0, q1 = fit_Qk(0), fit_Qk(1)
    ok = q0.consistent and q0.candidate == {(0, 0): 1}
    ok = ok and q1.consistent and q1.candidate == {(0, 0): F(-8, 3), (1, 0): F(5, 3), (0, 1): F(3)}
    return ok, f"Q_0 = {q0.format()}, Q_1 = {q1.format()}"


SUITES: dict[str, list[Check]] = {
    "tables": [table1, table2, symmetry, sigma_paths],
    "identities": [integral_identity, abel, binomial_moments, ode_residual, puiseux],
    "formulas": [cross_derivation, gamma_delta, degree_sequences, conjecture_known, conjecture_k(2)],
    "asymptotics": [lambert_special, g_vs_series, sigma_ratio_200, sigma_ratio_improves, growth_rate],
}
SUITES["all"] = [c for name in ("tables", "identities", "formulas", "asymptotics") for c in SUITES[name]]


def run_suite(name: str) -> list[tuple[str, bool, str]]:
    results = []
    for check in SUITES[name]:
        try:
            ok, detail = check()
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((check.__name__, ok, detail))
    return results
