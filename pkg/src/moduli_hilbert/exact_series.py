"""Exact exp-polynomial algebra.

An exp-polynomial is a finite sum ``sum_k p_k(x) * exp(k x)`` with rational
polynomials ``p_k`` and nonnegative integer frequencies ``k``.  The set is
closed under addition, multiplication, differentiation and the integral
operator ``I(f) = int_0^x f(t) dt``, so every computation here stays exact.

Values are kept in canonical form (no trailing zero coefficients, no
frequency carrying the zero polynomial) so that ``==`` is mathematical
equality.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Fraction
Scalar = Union[int, Fraction]

#: Degree of the zero polynomial.
NEG_INF = -math.inf


def _as_fraction(c: Scalar) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Polynomial:
    """Dense univariate polynomial over the rationals, lowest power first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: list[Fraction]) -> "Polynomial":
        # trusted constructor: entries are already Fractions
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        p = cls.__new__(cls)
        p.coeffs = tuple(coeffs)
        return p

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __getitem__(self, d: int) -> Fraction:
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return Fraction(0)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw([-c for c in self.coeffs])

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Polynomial._raw(out)

    def scale(self, c: Scalar) -> "Polynomial":
        c = _as_fraction(c)
        if c == 0:
            return Polynomial()
        return Polynomial._raw([c * x for x in self.coeffs])

    def derivative(self) -> "Polynomial":
        return Polynomial._raw([i * c for i, c in enumerate(self.coeffs)][1:])

    def antiderivative(self) -> "Polynomial":
        """Antiderivative with zero constant term."""
        return Polynomial._raw([Fraction(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _exp_quadrature(p: Polynomial, lam: Fraction) -> Polynomial:
    """The polynomial q with q' + lam*q = p, lam != 0.

    Obtained from repeated integration by parts:
    q = sum_m (-1)^m p^(m) / lam^(m+1).
    """
    out = [Fraction(0)] * len(p.coeffs)
    deriv = list(p.coeffs)
    sign_over = 1 / lam
    while deriv:
        for i, c in enumerate(deriv):
            out[i] += c * sign_over
        deriv = [i * c for i, c in enumerate(deriv)][1:]
        sign_over = -sign_over / lam
    return Polynomial._raw(out)


class ExpPolynomial:
    """Finite sum ``sum_k p_k(x) e^{kx}`` in canonical form.

    ``terms`` maps frequency to a nonzero :class:`Polynomial`.  Instances are
    immutable; arithmetic operators return new objects.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Union[Polynomial, Iterable[Scalar]]] | None = None):
        clean: dict[int, Polynomial] = {}
        for k, p in (terms or {}).items():
            if not isinstance(k, int) or k < 0:
                raise ValueError(f"frequency must be a nonnegative integer, got {k!r}")
            if not isinstance(p, Polynomial):
                p = Polynomial(p)
            if p:
                clean[k] = p
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def _raw(cls, terms: dict[int, Polynomial]) -> "ExpPolynomial":
        f = cls.__new__(cls)
        f._terms = {k: p for k, p in sorted(terms.items()) if p}
        return f

    @classmethod
    def constant(cls, c: Scalar) -> "ExpPolynomial":
        return cls({0: [c]})

    @classmethod
    def exp(cls, k: int, coeffs: Iterable[Scalar] = (1,)) -> "ExpPolynomial":
        """``p(x) e^{kx}`` with ``p`` given by ``coeffs``."""
        return cls({k: coeffs})

    @property
    def terms(self) -> Mapping[int, Polynomial]:
        return dict(self._terms)

    def frequencies(self) -> list[int]:
        return list(self._terms)

    def poly(self, k: int) -> Polynomial:
        return self._terms.get(k, Polynomial())

    @property
    def max_frequency(self) -> int:
        return max(self._terms, default=-1)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExpPolynomial):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {[str(c) for c in p.coeffs]}" for k, p in self._terms.items())
        return f"ExpPolynomial({{{inner}}})"

    def __neg__(self) -> "ExpPolynomial":
        return ExpPolynomial._raw({k: -p for k, p in self._terms.items()})

    def __add__(self, other: "ExpPolynomial") -> "ExpPolynomial":
        out = dict(self._terms)
        for k, p in other._terms.items():
            out[k] = out[k] + p if k in out else p
        return ExpPolynomial._raw(out)

    def __sub__(self, other: "ExpPolynomial") -> "ExpPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["ExpPolynomial", Scalar]) -> "ExpPolynomial":
        if not isinstance(other, ExpPolynomial):
            return ExpPolynomial._raw({k: p.scale(other) for k, p in self._terms.items()})
        out: dict[int, Polynomial] = {}
        for ka, pa in self._terms.items():
            for kb, pb in other._terms.items():
                prod = pa * pb
                k = ka + kb
                out[k] = out[k] + prod if k in out else prod
        return ExpPolynomial._raw(out)

    __rmul__ = __mul__

    def __call__(self, x: Scalar) -> Fraction:
        """Exact value at ``x = 0``; other points are rejected since e^{kx} is irrational."""
        if x != 0:
            raise ValueError("exact evaluation is only available at x = 0")
        return sum((p[0] for p in self._terms.values()), Fraction(0))

    def diff(self) -> "ExpPolynomial":
        # (p e^{kx})' = (p' + k p) e^{kx}
        return ExpPolynomial._raw(
            {k: p.derivative() + p.scale(k) for k, p in self._terms.items()}
        )

    def integrate(self) -> "ExpPolynomial":
        """``I(f)``: the antiderivative vanishing at 0."""
        out: dict[int, Polynomial] = {}
        const = Fraction(0)
        for k, p in self._terms.items():
            if k == 0:
                out[0] = p.antiderivative()
            else:
                q = _exp_quadrature(p, Fraction(k))
                out[k] = q
                const -= q[0]
        if const:
            out[0] = out.get(0, Polynomial()) + Polynomial._raw([const])
        return ExpPolynomial._raw(out)


ZERO = ExpPolynomial()


def ep_add(a: ExpPolynomial, b: ExpPolynomial) -> ExpPolynomial:
    return a + b


def ep_mul(a: ExpPolynomial, b: ExpPolynomial) -> ExpPolynomial:
    return a * b


def ep_diff(f: ExpPolynomial) -> ExpPolynomial:
    return f.diff()


def ep_integrate(f: ExpPolynomial) -> ExpPolynomial:
    return f.integrate()


def ep_iter_integrate(f: ExpPolynomial, j: int) -> ExpPolynomial:
    """``I^j(f)``; ``I^0`` is the identity."""
    if j < 0:
        raise ValueError("iteration count must be nonnegative")
    for _ in range(j):
        f = f.integrate()
    return f


def ep_iter_diff(f: ExpPolynomial, j: int) -> ExpPolynomial:
    for _ in range(j):
        f = f.diff()
    return f


def degree_sequence(f: ExpPolynomial) -> tuple:
    """Per-frequency degrees ``(deg p_0, ..., deg p_K)``, ``NEG_INF`` for gaps.

    The zero exp-polynomial has the empty sequence.
    """
    return tuple(f.poly(k).degree for k in range(f.max_frequency + 1))


def coeff_of(f: ExpPolynomial, k: int, d: int) -> Fraction:
    """Coefficient of ``x^d e^{kx}``."""
    return f.poly(k)[d]


def taylor_coeff(f: ExpPolynomial, n: int) -> Fraction:
    """Coefficient of ``x^n`` in the Maclaurin expansion of ``f``."""
    total = Fraction(0)
    for k, p in f.terms.items():
        for d, c in enumerate(p.coeffs[: n + 1]):
            if c:
                total += c * Fraction(k ** (n - d), math.factorial(n - d))
    return total


def solve_linear_ode(r: ExpPolynomial) -> ExpPolynomial:
    """The unique ``y`` with ``y' = y + r`` and ``y(0) = 0``.

    Off resonance the particular part at frequency ``k`` solves
    ``q' + (k-1) q = p_k``; at ``k = 1`` it is ``q = int p_1``.  The free
    multiple of ``e^x`` is then fixed by ``y(0) = 0``.
    """
    out: dict[int, Polynomial] = {}
    for k, p in r.terms.items():
        if k == 1:
            out[1] = p.antiderivative()
        else:
            out[k] = _exp_quadrature(p, Fraction(k - 1))
    particular = ExpPolynomial._raw(out)
    c = particular(0)
    if c:
        out[1] = out.get(1, Polynomial()) - Polynomial._raw([c])
    return ExpPolynomial._raw(out)
