"""Compare sigma_n with the stated asymptotic estimate and with the corrected constant.

The ratio against the stated estimate settles near sqrt(e - 2) ~ 0.8475;
the corrected estimate, which keeps the sqrt(r) factor of the square-root
transfer and the (n+2)^(-3/2) power, converges to 1 at rate O(1/n).
"""
import argparse
import math
import time

from moduli_hilbert import asymptotics as asy
from moduli_hilbert.hilbert_triangle import compute_sigma_recursive


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=400)
    args = parser.parse_args()

    start = time.perf_counter()
    sig = compute_sigma_recursive(args.n).values
    print(f"sigma_0..sigma_{args.n} in {time.perf_counter() - start:.2f}s")
    print(f"{'n':>5} {'ratio':>12} {'corrected':>12} {'radius est':>12}")
    ns = [n for n in (10, 25, 50, 100, 200, 400, 800, 1600) if n <= args.n]
    for n in ns:
        r = asy.sigma_ratio(n, sig)
        rc = asy.sigma_ratio(n, sig, corrected=True)
        rad = asy.growth_rate_diagnostic(sig[: n + 1])
        print(f"{n:>5} {r:>12.8f} {rc:>12.8f} {rad:>12.8f}")
    if len(ns) >= 2:
        a, b = ns[-2], ns[-1]
        limit = (b * asy.sigma_ratio(b, sig) - a * asy.sigma_ratio(a, sig)) / (b - a)
        print(f"Richardson limit of ratio from n = {a}, {b}: {limit:.6f}   sqrt(e-2) = {math.sqrt(asy.RADIUS):.6f}")


if __name__ == "__main__":
    main()
