"""Lambert W, the generating function of the total dimensions, and their asymptotics.

The exponential generating function ``g(x) = sum sigma_n x^(n+2)/(n+2)!``
has the closed form ``g(z) = 1 - (z+2)(1 + 1/W_{-1}(-(z+2)/e^2))`` on the
real interval ``-2 < z < e-2``.  Its square-root singularity at ``e - 2``
governs the growth of ``sigma_n``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import mpmath

from .hilbert_triangle import compute_sigma_recursive

BRANCH_POINT = -1.0 / math.e
RADIUS = math.e - 2.0

_BRANCHES = {0: 0, -1: -1, "principal": 0, "minus_one": -1}
_EPS = 2.220446049250313e-16


class LambertWDomainError(ValueError):
    pass


class LambertWConvergenceError(ArithmeticError):
    pass


def _branch_point_series(z: float, sign: float) -> float:
    # w = -1 + p - p^2/3 + 11/72 p^3 - ..., p = sign*sqrt(2(ez+1))
    p = sign * math.sqrt(max(2.0 * (math.e * z + 1.0), 0.0))
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0))))


def _initial_guess(z: float, branch: int) -> float:
    if branch == 0:
        if z < -0.25:
            return _branch_point_series(z, 1.0)
        if z < 3.0:
            return math.log1p(z)
        l1 = math.log(z)
        l2 = math.log(l1)
        return l1 - l2 + l2 / l1
    if z < -0.25:
        return _branch_point_series(z, -1.0)
    l1 = math.log(-z)
    l2 = math.log(-l1)
    return l1 - l2 + l2 / l1


def lambert_w(z: float, branch: Union[int, str] = 0, max_iter: int = 64) -> float:
    """Real Lambert W: the solution ``w`` of ``w * exp(w) = z`` on the given branch.

    ``branch`` is ``0``/``"principal"`` (``z >= -1/e``, ``w >= -1``) or
    ``-1``/``"minus_one"`` (``-1/e <= z < 0``, ``w <= -1``).  Uses Halley
    iteration from a series or asymptotic seed.
    """
    try:
        k = _BRANCHES[branch]
    except (KeyError, TypeError):
        raise LambertWDomainError(f"unknown branch {branch!r}") from None
    z = float(z)
    if math.isnan(z):
        raise LambertWDomainError("z is NaN")
    # allow one ulp of slack at the branch point
    if z < BRANCH_POINT - 4 * _EPS:
        raise LambertWDomainError(f"z = {z} is below -1/e")
    if k == -1 and z >= 0:
        raise LambertWDomainError("the -1 branch is real only on [-1/e, 0)")
    if k == 0 and z == 0:
        return 0.0
    if k == 0 and math.isinf(z):
        return math.inf
    if z <= BRANCH_POINT or math.e * z + 1.0 <= 0.0:
        return -1.0

    w = _initial_guess(z, k)
    for _ in range(max_iter):
        ew = math.exp(w)
        f = w * ew - z
        if f == 0.0:
            return w
        wp1 = w + 1.0
        if wp1 == 0.0:
            return w
        step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w_new = w - step
        if k == 0 and w_new < -1.0:
            w_new = -1.0 + 0.5 * (w + 1.0)
        elif k == -1 and w_new > -1.0:
            w_new = -1.0 + 0.5 * (w + 1.0)
        if abs(w_new - w) <= 4 * _EPS * max(1.0, abs(w_new)):
            return w_new
        w = w_new
    if abs(w * math.exp(w) - z) <= 1e-14 * max(1.0, abs(z)):
        return w
    raise LambertWConvergenceError(f"Halley iteration did not converge for z = {z}, branch {k}")


def g_closed_form(z: float) -> float:
    """``1 - (z+2)(1 + 1/W_{-1}(-(z+2)/e^2))`` for real ``-2 < z < e - 2``."""
    z = float(z)
    if not -2.0 < z < RADIUS:
        raise LambertWDomainError(f"g is evaluated only on (-2, e-2), got {z}")
    w = lambert_w(-math.exp(-2.0) * (z + 2.0), -1)
    return 1.0 - (z + 2.0) * (1.0 + 1.0 / w)


def g_series_coefficients(sigmas: Sequence[int]) -> list[Fraction]:
    """Exact Maclaurin coefficients ``g_m = sigma_{m-2}/m!`` for ``m < len(sigmas) + 2``."""
    out = [Fraction(0), Fraction(0)]
    fact = 1
    for m in range(2, len(sigmas) + 2):
        fact *= m
        out.append(Fraction(sigmas[m - 2], fact))
    return out


def g_series(z: float, sigmas: Sequence[int]) -> float:
    """Truncated series ``sum_n sigma_n z^(n+2)/(n+2)!``."""
    zf = mpmath.mpf(z)
    total = mpmath.mpf(0)
    for m, c in enumerate(g_series_coefficients(sigmas)):
        if c:
            total += mpmath.mpf(c.numerator) / c.denominator * zf**m
    return float(total)


def ode_residual_series(N: int, sigmas: Sequence[int]) -> bool:
    """Whether ``g'(1 - g) - x - 2g`` vanishes through ``x^N`` for the series built from ``sigmas``."""
    if len(sigmas) < N + 1:
        raise ValueError(f"need sigma_0..sigma_{N}")
    g = g_series_coefficients(sigmas[: N + 1])
    dg = [(m + 1) * g[m + 1] for m in range(len(g) - 1)]
    for m in range(N + 1):
        r = dg[m] - sum(dg[a] * g[m - a] for a in range(m + 1)) - 2 * g[m]
        if m == 1:
            r -= 1
        if r != 0:
            return False
    return True


@dataclass(frozen=True)
class PuiseuxCoefficients:
    """Coefficients of ``W = sum mu_k p^k`` at the branch point, ``p = -sqrt(2(ez+1))``.

    ``helper`` is the auxiliary convolution sequence of the recurrence.
    """

    mu: tuple[Fraction, ...]
    helper: tuple[Fraction, ...]


def puiseux_mu(k_max: int) -> PuiseuxCoefficients:
    """``mu_0..mu_{k_max}`` from

    mu_k = (k-1)/(k+1) (mu_{k-2}/2 + a_{k-2}/4) - a_k/2 - mu_{k-1}/(k+1)
    a_k  = sum_{j=2}^{k-1} mu_j mu_{k+1-j}

    starting from mu_0 = -1, mu_1 = 1, a_0 = 2, a_1 = -1.
    """
    if k_max < 1:
        raise ValueError("k_max must be positive")
    mu = [Fraction(-1), Fraction(1)]
    a = [Fraction(2), Fraction(-1)]
    for k in range(2, k_max + 1):
        a.append(sum((mu[j] * mu[k + 1 - j] for j in range(2, k)), Fraction(0)))
        mu.append(
            Fraction(k - 1, k + 1) * (mu[k - 2] / 2 + a[k - 2] / 4) - a[k] / 2 - mu[k - 1] / (k + 1)
        )
    return PuiseuxCoefficients(tuple(mu), tuple(a))


def puiseux_functional_residual(mu: Sequence[Fraction]) -> list[Fraction]:
    """Coefficients of ``w e^(w+1) - (p^2/2 - 1)`` through ``p^K`` for ``w = sum mu_k p^k``.

    This is ``e * (w e^w - z)`` with ``z = (p^2/2 - 1)/e``; a correct
    expansion gives all zeros.
    """
    K = len(mu) - 1
    v = [Fraction(0)] + list(mu[1:])  # w + 1
    v[0] = mu[0] + 1
    if v[0] != 0:
        raise ValueError("expansion must be centred at w = -1")
    # exp(v) for v without constant term: n E_n = sum_k k v_k E_{n-k}
    E = [Fraction(1)]
    for n in range(1, K + 1):
        E.append(sum((k * v[k] * E[n - k] for k in range(1, n + 1)), Fraction(0)) / n)
    w = list(mu)
    out = []
    for n in range(K + 1):
        c = sum((w[i] * E[n - i] for i in range(n + 1)), Fraction(0))
        target = {0: Fraction(-1), 2: Fraction(1, 2)}.get(n, Fraction(0))
        out.append(c - target)
    return out


def log_sigma_asymptotic_estimate(n: int, corrected: bool = False) -> float:
    """Natural log of the asymptotic estimate for ``sigma_n``.

    The default is ``sqrt(e/(2 pi)) (e-2)^(-n-2) n^(-3/2) (n+2)!``.  With
    ``corrected=True`` the transfer constant carries the extra
    ``sqrt(e-2)`` from ``sqrt(r - z) = sqrt(r) sqrt(1 - z/r)`` and the power
    is ``(n+2)^(-3/2)``; this is the form the data converge to.
    """
    if n < 1:
        raise ValueError("n must be positive")
    log_r = math.log(RADIUS)
    out = 0.5 * math.log(math.e / (2 * math.pi)) - (n + 2) * log_r + math.lgamma(n + 3)
    if corrected:
        return out + 0.5 * log_r - 1.5 * math.log(n + 2)
    return out - 1.5 * math.log(n)


def sigma_asymptotic_estimate(n: int, corrected: bool = False) -> mpmath.mpf:
    """The estimate itself as an ``mpf`` (the values overflow a double past n ~ 150)."""
    return mpmath.exp(log_sigma_asymptotic_estimate(n, corrected))


def log_int(x: int) -> float:
    """``log(x)`` for a positive integer of any size."""
    if x <= 0:
        raise ValueError("log of a nonpositive integer")
    shift = max(x.bit_length() - 64, 0)
    return math.log(x >> shift) + shift * math.log(2)


@dataclass(frozen=True)
class AsymptoticReport:
    n: int
    sigma_exact: int
    estimate: mpmath.mpf
    ratio: float


def asymptotic_report(n: int, sigma_n: int, corrected: bool = False) -> AsymptoticReport:
    log_est = log_sigma_asymptotic_estimate(n, corrected)
    ratio = math.exp(log_int(sigma_n) - log_est)
    return AsymptoticReport(n, sigma_n, mpmath.exp(log_est), ratio)


def sigma_ratio(n: int, sigmas: Sequence[int] | None = None, corrected: bool = False) -> float:
    if sigmas is None:
        sigmas = compute_sigma_recursive(n).values
    return asymptotic_report(n, sigmas[n], corrected).ratio


def growth_rate_diagnostic(sigmas: Sequence[int]) -> float:
    """Ratio-test estimate ``sigma_{n-1} (n+2) / sigma_n`` at the last index.

    For the true sequence this tends to the radius of convergence ``e - 2``
    of ``g``.
    """
    if len(sigmas) < 10:
        raise ValueError("need at least 10 terms")
    n = len(sigmas) - 1
    return math.exp(log_int(sigmas[n - 1]) + math.log(n + 2) - log_int(sigmas[n]))
