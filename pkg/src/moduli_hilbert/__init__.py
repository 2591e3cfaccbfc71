"""Exact and asymptotic enumeration for the cohomology of M_{0,n}."""
from .exact_series import ExpPolynomial, Polynomial
from .fj_series import compute_fj
from .hilbert_triangle import compute_alpha, compute_sigma_recursive

__all__ = ["ExpPolynomial", "Polynomial", "compute_alpha", "compute_fj", "compute_sigma_recursive"]
