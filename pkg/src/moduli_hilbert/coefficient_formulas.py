"""Closed-form coefficients of f_j, supporting identities, and the Q_k scanner."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional

from .exact_series import coeff_of
from .fj_series import FjTable


class SingularGridError(ValueError):
    """The sample grid does not determine a unique interpolating polynomial."""


def gamma_formula(s: int, t: int) -> Fraction:
    """``[x^{2s} e^{tx}] f_{s+t-1} = (-1)^s / (2^s s!) * t^{2(s+t-1)} / t!``."""
    if s < 0 or t < 1:
        raise ValueError(f"gamma needs s >= 0, t >= 1 (got s={s}, t={t})")
    return Fraction((-1) ** s * t ** (2 * (s + t - 1)), 2**s * math.factorial(s) * math.factorial(t))


def delta_formula(s: int, t: int) -> Fraction:
    """``[x^{2s-1} e^{tx}] f_{s+t-1}``, the subleading coefficient."""
    if s < 1 or t < 1:
        raise ValueError(f"delta needs s, t >= 1 (got s={s}, t={t})")
    num = (-1) ** s * (5 * s + 9 * t - 8) * t ** (2 * s + 2 * t - 4)
    den = 3 * 2 ** (s - 1) * math.factorial(s - 1) * math.factorial(t - 1)
    return Fraction(num, den)


def abel_sums(t: int) -> tuple[int, int]:
    """Direct sums ``sum C(t;c,d) c^(c-1) d^(d-1)`` and ``sum C(t;c,d) c^c d^(d-1)`` over c+d=t, c,d>=1."""
    first = second = 0
    for c in range(1, t):
        d = t - c
        m = math.comb(t, c)
        first += m * c ** (c - 1) * d ** (d - 1)
        second += m * c**c * d ** (d - 1)
    return first, second


def abel_identity_check(t: int) -> bool:
    if t < 1:
        raise ValueError("t must be positive")
    first, second = abel_sums(t)
    # t = 1 has empty sums; t^(t-2) is then 1/1 but multiplied by (t-1) = 0
    rhs_first = 2 * (t - 1) * Fraction(t) ** (t - 2)
    rhs_second = (t - 1) * t ** (t - 1)
    return first == rhs_first and second == rhs_second


def binomial_derivative_check(s: int, c: int, d: int) -> bool:
    """First and second ``c d/dc`` moments of the binomial theorem, by direct summation."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    c, d = Fraction(c), Fraction(d)
    first = sum(a * math.comb(s, a) * c**a * d ** (s - a) for a in range(s + 1))
    second = sum(a * a * math.comb(s, a) * c**a * d ** (s - a) for a in range(s + 1))
    # s*(c+d)^(s-1) is 0 at s = 0 whatever (c+d)^(-1) means; guard the s-1, s-2 powers
    rhs_first = s * c * (c + d) ** (s - 1) if s >= 1 else 0
    rhs_second = rhs_first + (s * (s - 1) * c**2 * (c + d) ** (s - 2) if s >= 2 else 0)
    return first == rhs_first and second == rhs_second


def alpha_asymptotic_estimate(i: int, j: int) -> float:
    """Leading growth ``(j+1)^(2j+1) / j! * (j+1)^i`` of ``alpha(i, j)`` as ``i`` grows."""
    return math.exp((2 * j + 1 + i) * math.log(j + 1) - math.lgamma(j + 1))


# Conjecture scanner -------------------------------------------------------


def conjecture_prefactor(k: int, s: int, t: int) -> Fraction:
    """``(-1)^s t^(2s+2t-2k-2) / (2^(s-k) (s-k)! (t-k)!)``."""
    num = (-1) ** s * Fraction(t) ** (2 * s + 2 * t - 2 * k - 2)
    return num / (2 ** (s - k) * math.factorial(s - k) * math.factorial(t - k))


def normalized_coefficient(k: int, s: int, t: int, table: FjTable) -> Fraction:
    """``[x^{2s-k} e^{tx}] f_{s+t-1}`` divided by the conjectured prefactor."""
    return coeff_of(table[s + t - 1], t, 2 * s - k) / conjecture_prefactor(k, s, t)


def monomials(k: int) -> list[tuple[int, int]]:
    """Exponents ``(a, b)`` of ``s^a t^b`` with ``a + b <= k``, graded then lex."""
    return [(a, n - a) for n in range(k + 1) for a in range(n, -1, -1)]


@dataclass(frozen=True)
class QkFit:
    """A fitted ``Q_k``: ``candidate[(a, b)]`` is the coefficient of ``s^a t^b``."""

    k: int
    candidate: dict
    grid_used: tuple
    held_out: tuple
    consistent: bool

    def __call__(self, s: int, t: int) -> Fraction:
        return sum((c * s**a * t**b for (a, b), c in self.candidate.items()), Fraction(0))

    def format(self) -> str:
        terms = []
        for (a, b), c in sorted(self.candidate.items(), key=lambda kv: (-sum(kv[0]), -kv[0][0])):
            if c == 0:
                continue
            mono = "*".join(v for v in (_pow("s", a), _pow("t", b)) if v)
            terms.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(terms) if terms else "0"


def _pow(var: str, e: int) -> str:
    return "" if e == 0 else var if e == 1 else f"{var}^{e}"


def qk_grid(k: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Raster grid ``k <= s, t <= 2k + 2`` (with ``t >= 1``), last quarter held out."""
    hi = 2 * k + 2
    pts = [(s, t) for s, t in product(range(k, hi + 1), range(max(k, 1), hi + 1))]
    n_hold = math.ceil(len(pts) / 4)
    return pts[:-n_hold], pts[-n_hold:]


def _reduce(m: list[list[Fraction]], n: int) -> list[int]:
    """In-place Gauss-Jordan on the first ``n`` columns; returns the original
    indices of the rows chosen as pivots."""
    order = list(range(len(m)))
    pivot_row = 0
    for col in range(n):
        piv = next((r for r in range(pivot_row, len(m)) if m[r][col] != 0), None)
        if piv is None:
            raise SingularGridError(f"grid does not determine coefficient {col}")
        m[pivot_row], m[piv] = m[piv], m[pivot_row]
        order[pivot_row], order[piv] = order[piv], order[pivot_row]
        pr = m[pivot_row]
        inv = 1 / pr[col]
        pr[:] = [x * inv for x in pr]
        for r in range(len(m)):
            if r != pivot_row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], pr)]
        pivot_row += 1
    return order[:n]


def solve_exact_system(rows: list[list[Fraction]], rhs: list[Fraction]) -> Optional[list[Fraction]]:
    """Exact solve of a possibly overdetermined system.

    Returns the unique solution, ``None`` if the equations are inconsistent,
    and raises :class:`SingularGridError` if the solution is not unique.
    """
    n = len(rows[0])
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    _reduce(m, n)
    if any(row[n] != 0 for row in m[n:]):
        return None
    return [m[i][n] for i in range(n)]


def fit_Qk(k: int, table: Optional[FjTable] = None) -> QkFit:
    """Fit a total-degree-``k`` polynomial to normalized coefficients and test it.

    The candidate interpolates a unisolvent subset of the training points.
    ``consistent`` is true only if it reproduces every training and
    held-out value exactly.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    train, held = qk_grid(k)
    need = max(s + t - 1 for s, t in train + held)
    if table is None:
        from .fj_series import compute_fj

        table = compute_fj(need)
    elif table.j_max < need:
        table.extend(need)
    mons = monomials(k)
    rows = [[Fraction(s**a * t**b) for a, b in mons] for s, t in train]
    basis = _reduce([list(r) for r in rows], len(mons))
    sol = solve_exact_system(
        [rows[i] for i in basis],
        [normalized_coefficient(k, *train[i], table) for i in basis],
    )
    fit = QkFit(k, dict(zip(mons, sol)), tuple(train), tuple(held), False)
    consistent = all(fit(s, t) == normalized_coefficient(k, s, t, table) for s, t in train + held)
    return QkFit(k, fit.candidate, fit.grid_used, fit.held_out, consistent)
