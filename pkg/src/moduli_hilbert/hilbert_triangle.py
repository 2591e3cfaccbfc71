"""Graded dimensions of H*(M_{0,n}) and their row sums.

The triangle entry ``alpha(i, j)`` is the dimension in degree ``i`` of the
ring in row ``n = i + j``.  Row ``n`` of the triangle corresponds to the
moduli space with ``n + 3`` marked points.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@lru_cache(maxsize=None)
def _pascal(n_max: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1,)]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        rows.append((1,) + tuple(prev[k - 1] + prev[k] for k in range(1, n)) + (1,))
    return tuple(rows)


def binomial_table(n_max: int) -> tuple[tuple[int, ...], ...]:
    """Pascal rows ``0..n_max``; ``table[n][k] == C(n, k)``."""
    return _pascal(n_max)


@dataclass(frozen=True)
class AlphaTriangle:
    """Rows of graded dimensions; ``rows[n][i] == alpha(i, n - i)``."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def __call__(self, i: int, j: int) -> int:
        return self.rows[i + j][i]

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.rows]


@dataclass(frozen=True)
class SigmaSequence:
    values: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def compute_alpha(n_max: int) -> AlphaTriangle:
    """All ``alpha(i, j)`` with ``i + j <= n_max`` from the symmetrized Keel recursion.

    alpha(i+1, j+1) = alpha(i+1, j) + alpha(i, j+1)
                      + 1/2 sum_{p<=i, q<=j} C(i+j+4, p+q+2) alpha(p,q) alpha(i-p, j-q)
    with boundary ``alpha(i, 0) = alpha(0, i) = 1``.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    binom = binomial_table(n_max + 4)
    # a[i][j], grown row by row along anti-diagonals
    a: dict[tuple[int, int], int] = {}
    rows = []
    for n in range(n_max + 1):
        for i in range(n + 1):
            j = n - i
            if i == 0 or j == 0:
                a[i, j] = 1
                continue
            ii, jj = i - 1, j - 1
            b = binom[ii + jj + 4]
            twice = 0
            for p in range(ii + 1):
                for q in range(jj + 1):
                    twice += b[p + q + 2] * a[p, q] * a[ii - p, jj - q]
            # the double sum is symmetric under (p,q) -> (i-p, j-q), hence even
            assert twice % 2 == 0
            a[i, j] = a[i, jj] + a[ii, j] + twice // 2
        rows.append(tuple(a[i, n - i] for i in range(n + 1)))
    return AlphaTriangle(tuple(rows))


def compute_sigma_recursive(n_max: int) -> SigmaSequence:
    """Total dimensions ``sigma_0..sigma_{n_max}`` straight from the sigma recursion.

    sigma_{n+2} = 2 sigma_{n+1} + 1/2 sum_{i+j=n} (n+4)!/((i+2)!(j+2)!) sigma_i sigma_j

    The recursion does not reach ``sigma_1``; it is seeded with the row sum
    of triangle row 1, which is 2.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    binom = binomial_table(n_max + 2)
    s = [1, 2]
    for n in range(n_max - 1):
        b = binom[n + 4]
        twice = sum(b[i + 2] * s[i] * s[n - i] for i in range(n + 1))
        s.append(2 * s[n + 1] + twice // 2)
    return SigmaSequence(tuple(s[: n_max + 1]))


def check_symmetry(t: AlphaTriangle) -> bool:
    return all(row == row[::-1] for row in t.rows)
