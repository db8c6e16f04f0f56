"""Chromatic polynomials by inclusion-exclusion over "edge is monochromatic" events.

Two independent routes share no code: the telescoped binomial sum written out
for cycles, and the spanning-subgraph expansion for an arbitrary graph, where
the colorings monochromatic on every edge of S number λ^c(S) with c(S) the
component count of (V, S).
"""

from __future__ import annotations

from math import comb

from .errors import BudgetExceededError
from .graph import Multigraph, count_components, simplify
from .polynomial import ZERO, IntPolynomial

DEFAULT_EDGE_BUDGET = 20


def cycle_inclusion_exclusion(n: int) -> IntPolynomial:
    """λ^n - C(n,1)λ^(n-1) + ... + (-1)^(n-1) C(n,n-1) λ + (-1)^n λ.

    The final term is the intersection of all n events: every vertex shares
    one color, leaving λ choices rather than the λ^0 the binomial pattern
    would suggest.
    """
    if n < 1:
        raise ValueError(f"cycle needs n >= 1, got {n}")
    coeffs = [0] * (n + 1)
    for k in range(n):
        coeffs[n - k] += (-1) ** k * comb(n, k)
    coeffs[1] += (-1) ** n
    return IntPolynomial(tuple(coeffs))


def chromatic_by_subsets(g: Multigraph, *, edge_budget: int = DEFAULT_EDGE_BUDGET) -> IntPolynomial:
    """Sum over edge subsets S of (-1)^|S| λ^c(S), with parallels merged first.

    Enumerates 2^|E| subsets, so refuses more than ``edge_budget`` distinct edges.
    """
    if g.has_loop():
        return ZERO
    edges = simplify(g).edges
    m = len(edges)
    if m > edge_budget:
        raise BudgetExceededError(f"{m} edges means 2^{m} subsets; edge budget is {edge_budget}")
    coeffs = [0] * (g.vertex_count + 1)
    for mask in range(1 << m):
        chosen = [edges[i] for i in range(m) if mask >> i & 1]
        sign = -1 if len(chosen) & 1 else 1
        coeffs[count_components(g.vertex_count, chosen)] += sign
    return IntPolynomial(tuple(coeffs))
