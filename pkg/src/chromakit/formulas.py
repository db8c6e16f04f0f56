"""Closed-form chromatic polynomials, expanded symbolically.

These are the references every engine is compared against, so they are built
only from polynomial ring operations and never from evaluations.
"""

from __future__ import annotations

from .polynomial import LAMBDA, ONE, IntPolynomial, constant, linear, multiply, power


def cycle_closed_form(n: int) -> IntPolynomial:
    """(λ-1)^n + (-1)^n (λ-1)."""
    if n < 1:
        raise ValueError(f"cycle needs n >= 1, got {n}")
    lam_minus_1 = linear(-1)
    return power(lam_minus_1, n) + multiply(constant((-1) ** n), lam_minus_1)


def path_closed_form(n: int) -> IntPolynomial:
    """λ (λ-1)^(n-1)."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return multiply(LAMBDA, power(linear(-1), n - 1))


def complete_closed_form(k: int) -> IntPolynomial:
    """Falling factorial λ(λ-1)...(λ-k+1); the constant 1 when k = 0."""
    if k < 0:
        raise ValueError(f"complete graph needs k >= 0, got {k}")
    out = ONE
    for j in range(k):
        out = multiply(out, linear(-j))
    return out
