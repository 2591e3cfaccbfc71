"""Run the Q_k scanner and probe the structure of the normalized coefficients.

For each k the normalized coefficient N_k(s,t) is the extracted coefficient
divided by the conjectured prefactor.  Besides the degree-k fit, this tries
to clear the denominators (s-1)...(s-k+1)(t-1)...(t-k+1) and fit the result
with a polynomial of degree 3k - 2 on a wider grid.
"""
import argparse
from fractions import Fraction
from math import prod

from moduli_hilbert.coefficient_formulas import (
    SingularGridError,
    fit_Qk,
    monomials,
    normalized_coefficient,
    solve_exact_system,
)
from moduli_hilbert.fj_series import compute_fj


def cleared_fit(k, table, j_max):
    pts = [(s, t) for s in range(k, 14) for t in range(max(k, 1), 14) if s + t - 1 <= j_max]
    deg = max(3 * k - 2, k)
    mons = monomials(deg)
    if len(pts) <= len(mons):
        return None, deg, len(pts)
    rows = [[Fraction(s**a * t**b) for a, b in mons] for s, t in pts]
    rhs = [
        normalized_coefficient(k, s, t, table) * prod(s - i for i in range(1, k)) * prod(t - i for i in range(1, k))
        for s, t in pts
    ]
    try:
        sol = solve_exact_system(rows, rhs)
    except SingularGridError:
        return None, deg, len(pts)
    return (None if sol is None else dict(zip(mons, sol))), deg, len(pts)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--k-max", type=int, default=3)
    parser.add_argument("--j-max", type=int, default=22)
    args = parser.parse_args()

    table = compute_fj(args.j_max)
    for k in range(args.k_max + 1):
        fit = fit_Qk(k, table)
        print(f"k = {k}: consistent = {fit.consistent}")
        print(f"   degree-{k} candidate: {fit.format()}")
        if k >= 2:
            sol, deg, n = cleared_fit(k, table, args.j_max)
            verdict = "no polynomial fit" if sol is None else "exact polynomial fit"
            print(f"   cleared denominators, degree <= {deg} on {n} points: {verdict}")
            if sol:
                terms = " + ".join(f"({c})s^{a}t^{b}" for (a, b), c in sol.items() if c)
                print(f"   {terms}")


if __name__ == "__main__":
    main()
