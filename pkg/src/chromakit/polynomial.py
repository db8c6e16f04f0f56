"""Dense univariate polynomials in λ with exact integer coefficients.

``IntPolynomial((c0, c1, ..., cd))`` stands for c0 + c1·λ + ... + cd·λ^d.
Trailing zeros are stripped on construction, so the zero polynomial has no
coefficients and equality is plain tuple equality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        return add(self, other)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return subtract(self, other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        return multiply(self, other)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __pow__(self, k: int) -> IntPolynomial:
        return power(self, k)

    def __call__(self, x: int) -> int:
        return evaluate(self, x)

    def __str__(self) -> str:
        return pretty(self)


ZERO = IntPolynomial(())
ONE = IntPolynomial((1,))
LAMBDA = IntPolynomial((0, 1))


def from_coefficients(coeffs: Iterable[int]) -> IntPolynomial:
    return IntPolynomial(tuple(coeffs))


def constant(c: int) -> IntPolynomial:
    return IntPolynomial((c,))


def monomial(k: int, c: int = 1) -> IntPolynomial:
    """c·λ^k."""
    return IntPolynomial((0,) * k + (c,))


def linear(a: int) -> IntPolynomial:
    """λ + a, e.g. ``linear(-1)`` is λ - 1."""
    return IntPolynomial((a, 1))


def add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return IntPolynomial(tuple(out))


def subtract(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return add(p, -q)


def multiply(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    if not p.coeffs or not q.coeffs:
        return ZERO
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return IntPolynomial(tuple(out))


def power(p: IntPolynomial, k: int) -> IntPolynomial:
    if k < 0:
        raise ValueError(f"negative exponent {k}")
    result, base = ONE, p
    while k:
        if k & 1:
            result = multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def evaluate(p: IntPolynomial, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def equals(p: IntPolynomial, q: IntPolynomial) -> bool:
    return p.coeffs == q.coeffs


# -- serialization -----------------------------------------------------------

def to_dict(p: IntPolynomial) -> dict[str, list[str]]:
    return {"coeffs": [str(c) for c in p.coeffs]}


def from_dict(data: Mapping[str, object]) -> IntPolynomial:
    coeffs = data.get("coeffs")
    if not isinstance(coeffs, list):
        raise ValueError("expected a 'coeffs' list")
    return IntPolynomial(tuple(int(c) for c in coeffs))


def to_json(p: IntPolynomial) -> str:
    return json.dumps(to_dict(p))


def from_json(text: str) -> IntPolynomial:
    return from_dict(json.loads(text))


def pretty(p: IntPolynomial, var: str = "λ") -> str:
    """Human form, highest power first: ``λ^3 - 3*λ^2 + 2*λ``."""
    if not p.coeffs:
        return "0"
    terms = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms)
