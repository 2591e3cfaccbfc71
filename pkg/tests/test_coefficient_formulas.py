from fractions import Fraction as F
from itertools import product
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from moduli_hilbert.coefficient_formulas import (
    SingularGridError,
    abel_identity_check,
    abel_sums,
    alpha_asymptotic_estimate,
    binomial_derivative_check,
    delta_formula,
    fit_Qk,
    gamma_formula,
    monomials,
    normalized_coefficient,
    qk_grid,
    solve_exact_system,
)
from moduli_hilbert.exact_series import coeff_of
from moduli_hilbert.fj_series import compute_fj
from moduli_hilbert.hilbert_triangle import compute_alpha


@pytest.fixture(scope="module")
def table():
    return compute_fj(14)


def test_gamma_examples():
    assert gamma_formula(0, 1) == 1
    assert gamma_formula(1, 1) == F(-1, 2)
    assert gamma_formula(0, 3) == F(27, 2)
    with pytest.raises(ValueError):
        gamma_formula(0, 0)


def test_delta_examples():
    assert delta_formula(1, 1) == -2
    assert delta_formula(1, 2) == -20
    assert delta_formula(2, 1) == F(11, 6)
    for bad in [(0, 1), (1, 0)]:
        with pytest.raises(ValueError):
            delta_formula(*bad)


def _gamma_by_recursion(s_plus_t_max, table):
    # (gamma_{s,t}/t^{s+t-1})(1 - 1/t) = 1/2 sum_{a+b=s} sum_{c+d=t, c,d>=1} g(a,c) g(b,d)
    # with g(a,c) = gamma_{a,c}/c^{a+c-1}; the t = 1 column is read off the computed series
    g = {(0, 1): F(1)}
    for n in range(2, s_plus_t_max + 1):
        for s in range(n):
            t = n - s
            if t == 1:
                continue
            rhs = sum(
                g[a, c] * g[s - a, t - c]
                for a in range(s + 1)
                for c in range(1, t)
                if (a, c) in g and (s - a, t - c) in g
            ) / 2
            g[s, t] = rhs / (1 - F(1, t))
        g[n - 1, 1] = coeff_of(table[n - 1], 1, 2 * (n - 1))
    return {(s, t): v * F(t) ** (s + t - 1) for (s, t), v in g.items()}


def test_gamma_recursion_oracle(table):
    for (s, t), v in _gamma_by_recursion(10, table).items():
        assert v == gamma_formula(s, t)


def test_formulas_match_computed_series(table):
    for s in range(0, 12):
        for t in range(1, 13 - s):
            f = table[s + t - 1]
            assert coeff_of(f, t, 2 * s) == gamma_formula(s, t)
            if s >= 1:
                assert coeff_of(f, t, 2 * s - 1) == delta_formula(s, t)


def test_boundary_values(table):
    # gamma_{s,0} = 0, delta_{s,0} = 0 for s >= 2, delta_{1,0} = -1
    for s in range(1, 10):
        assert coeff_of(table[s - 1], 0, 2 * s) == 0
        if s >= 2:
            assert coeff_of(table[s - 1], 0, 2 * s - 1) == 0
    assert coeff_of(table[0], 0, 1) == -1


def test_abel_examples():
    assert abel_identity_check(1)
    assert abel_sums(2) == (2, 2)
    assert abel_identity_check(2)
    assert abel_identity_check(25)
    assert all(abel_identity_check(t) for t in range(1, 31))
    with pytest.raises(ValueError):
        abel_identity_check(0)


def test_binomial_derivative_examples():
    assert binomial_derivative_check(0, 3, 4)
    assert binomial_derivative_check(2, 1, 1)
    assert binomial_derivative_check(5, 3, 7)


@given(st.integers(0, 15), st.integers(-6, 6), st.integers(-6, 6))
def test_binomial_derivative_property(s, c, d):
    assert binomial_derivative_check(s, c, d)


def test_alpha_estimate_examples():
    assert all(alpha_asymptotic_estimate(i, 0) == pytest.approx(1.0) for i in range(20))
    tri = compute_alpha(70)
    assert tri(30, 1) / alpha_asymptotic_estimate(30, 1) == pytest.approx(1, rel=0.10)
    assert tri(60, 2) / alpha_asymptotic_estimate(60, 2) == pytest.approx(1, rel=0.10)


@pytest.mark.parametrize("j", [1, 2, 3])
def test_alpha_estimate_improves(j):
    i_max = 60
    tri = compute_alpha(i_max + j)
    err = lambda i: abs(tri(i, j) / alpha_asymptotic_estimate(i, j) - 1)
    assert err(i_max) < err(i_max // 2)


def test_grid_layout():
    train, held = qk_grid(1)
    assert len(train) + len(held) == 16
    assert len(held) == 4
    assert all(s >= 1 and t >= 1 for s, t in train + held)
    assert len(monomials(2)) == 6


def test_fit_q0_q1(table):
    q0 = fit_Qk(0, table)
    assert q0.consistent and q0.candidate == {(0, 0): 1}
    q1 = fit_Qk(1, table)
    assert q1.consistent
    for s, t in product(range(1, 8), range(1, 8)):
        assert q1(s, t) == F(5 * s + 9 * t - 8, 3)


def test_fit_q2_reports_a_candidate(table):
    q2 = fit_Qk(2, table)
    assert len(q2.candidate) == 6
    assert q2.held_out
    # the fit interpolates a unisolvent subset of the training grid
    hits = sum(q2(s, t) == normalized_coefficient(2, s, t, table) for s, t in q2.grid_used)
    assert hits >= 6


def test_q2_normalized_values_are_rational_in_s_and_t():
    # (s-1)(t-1) Q_2 fits a quartic exactly on a wide grid; Q_2 alone fits no low-degree polynomial
    table = compute_fj(19)
    pts = [(s, t) for s in range(2, 11) for t in range(2, 11) if s + t - 1 <= 19]
    mons = monomials(4)
    rows = [[F(s**a * t**b) for a, b in mons] for s, t in pts]
    scaled = [normalized_coefficient(2, s, t, table) * (s - 1) * (t - 1) for s, t in pts]
    assert solve_exact_system(rows, scaled) is not None
    plain = [normalized_coefficient(2, s, t, table) for s, t in pts]
    assert solve_exact_system(rows, plain) is None


def test_singular_grid():
    with pytest.raises(SingularGridError):
        solve_exact_system([[F(1), F(2)], [F(2), F(4)]], [F(1), F(2)])
    assert solve_exact_system([[F(1), F(0)], [F(0), F(1)], [F(1), F(1)]], [F(1), F(2), F(4)]) is None
    assert solve_exact_system([[F(1), F(0)], [F(0), F(1)], [F(1), F(1)]], [F(1), F(2), F(3)]) == [1, 2]
