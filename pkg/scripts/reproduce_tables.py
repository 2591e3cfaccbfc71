"""Print the graded-dimension triangle with row sums and the first closed forms f_j."""
import argparse

from moduli_hilbert.fj_series import compute_fj
from moduli_hilbert.hilbert_triangle import compute_alpha


def format_exp_poly(f) -> str:
    parts = []
    for k, p in sorted(f.terms.items(), reverse=True):
        poly = " + ".join(f"({c})x^{d}" if d else f"({c})" for d, c in reversed(list(enumerate(p.coeffs))) if c)
        parts.append(f"[{poly}] e^{{{k}x}}" if k else f"[{poly}]")
    return " + ".join(parts)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=6)
    parser.add_argument("--j", type=int, default=3)
    args = parser.parse_args()

    tri = compute_alpha(args.n)
    for row, s in zip(tri.rows, tri.row_sums()):
        print(" ".join(map(str, row)), "|", s)
    print()
    table = compute_fj(args.j)
    for j, f in enumerate(table.entries):
        print(f"f_{j} = {format_exp_poly(f)}")


if __name__ == "__main__":
    main()
