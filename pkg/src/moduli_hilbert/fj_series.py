"""Closed forms of the diagonal generating functions f_j.

``f_j(x) = sum_i alpha(i, j) x^(i+2) / (i+2)!`` is an exp-polynomial for
every ``j``.  Starting from ``f_0 = e^x - x - 1`` each next series solves a
first-order linear ODE whose forcing term is built from its predecessors.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .exact_series import (
    NEG_INF,
    ZERO,
    ExpPolynomial,
    degree_sequence,
    ep_iter_diff,
    solve_linear_ode,
    taylor_coeff,
)
from .hilbert_triangle import compute_alpha

F0 = ExpPolynomial({0: [-1, -1], 1: [1]})


class InvariantViolation(RuntimeError):
    """A computed f_j disagrees with an independently known property."""


@dataclass
class FjTable:
    """Incrementally grown table of ``f_0, f_1, ...``.

    ``integrals[j][q]`` caches ``I^q(f_j)``.
    """

    entries: list[ExpPolynomial] = field(default_factory=lambda: [F0])
    integrals: list[list[ExpPolynomial]] = field(default_factory=lambda: [[F0]])

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, j: int) -> ExpPolynomial:
        return self.entries[j]

    @property
    def j_max(self) -> int:
        return len(self.entries) - 1

    def iterated_integral(self, j: int, q: int) -> ExpPolynomial:
        """``I^q(f_j)``, memoized."""
        cache = self.integrals[j]
        while len(cache) <= q:
            cache.append(cache[-1].integrate())
        return cache[q]

    def convolution(self, j: int) -> ExpPolynomial:
        """``1/2 sum_{q=0}^{j} I^q(f_q) I^{j-q}(f_{j-q})``."""
        total = ZERO
        for q in range(j // 2 + 1):
            prod = self.iterated_integral(q, q) * self.iterated_integral(j - q, j - q)
            # pair q with j-q; the middle term (q == j-q) appears once
            total = total + (prod if 2 * q != j else prod * Fraction(1, 2))
        return total

    def extend(self, j_max: int, check: bool = True) -> "FjTable":
        while self.j_max < j_max:
            j = self.j_max
            bracket = self.iterated_integral(j, j + 1) + self.convolution(j)
            forcing = ep_iter_diff(bracket, j + 2)
            nxt = solve_linear_ode(forcing)
            self.entries.append(nxt)
            self.integrals.append([nxt])
            if check:
                _check_new_entry(j + 1, nxt)
        return self


def expected_degree_sequence(j: int) -> tuple:
    """``(-inf, 2j, 2(j-1), ..., 2, 0)`` for ``j >= 1``."""
    return (NEG_INF,) + tuple(2 * (j + 1 - k) for k in range(1, j + 2))


def _check_new_entry(j: int, f: ExpPolynomial) -> None:
    if f(0) != 0 or taylor_coeff(f, 0) != 0 or taylor_coeff(f, 1) != 0:
        raise InvariantViolation(f"f_{j} does not start at x^2")
    if taylor_coeff(f, 2) != Fraction(1, 2):
        raise InvariantViolation(f"f_{j} has x^2 coefficient {taylor_coeff(f, 2)}, expected 1/2")
    if degree_sequence(f) != expected_degree_sequence(j):
        raise InvariantViolation(f"f_{j} has degree sequence {degree_sequence(f)}")
    # cross-check a few Taylor coefficients against the triangle recursion
    n_check = 6
    tri = compute_alpha(j + n_check)
    for i in range(n_check + 1):
        got = taylor_coeff(f, i + 2) * math.factorial(i + 2)
        if got != tri(i, j):
            raise InvariantViolation(f"f_{j}: Taylor gives alpha({i},{j}) = {got}, triangle {tri(i, j)}")


def compute_fj(j_max: int, check: bool = True) -> FjTable:
    """``f_0 .. f_{j_max}`` via the ODE ``f' = f + D^{j+2}[I^{j+1} f_j + conv_j]``."""
    if j_max < 0:
        raise ValueError("j_max must be nonnegative")
    return FjTable().extend(j_max, check=check)


def verify_integral_identity(j: int, table: FjTable) -> bool:
    """Exact check of
    ``I^{j+1} f_{j+1} == I^{j+2} f_{j+1} + I^{j+1} f_j + 1/2 sum_q I^q f_q * I^{j-q} f_{j-q}``.
    """
    if table.j_max < j + 1:
        raise ValueError(f"table must contain f_{j + 1}")
    lhs = table.iterated_integral(j + 1, j + 1)
    # full sum over q, without the pairing shortcut used by the ODE route
    conv = ZERO
    for q in range(j + 1):
        conv = conv + table.iterated_integral(q, q) * table.iterated_integral(j - q, j - q)
    rhs = (
        table.iterated_integral(j + 1, j + 2)
        + table.iterated_integral(j, j + 1)
        + conv * Fraction(1, 2)
    )
    return lhs == rhs


def verify_degree_bound(j: int, table: FjTable) -> bool:
    if j < 1:
        raise ValueError("degree sequence statement needs j >= 1")
    return degree_sequence(table[j]) == expected_degree_sequence(j)
