"""Chromatic polynomials by the deletion-contraction recurrence P(G) = P(G-e) - P(G/e).

Worst-case running time is exponential in the edge count. Memoization on the
labeled canonical key removes most repeated work along a fixed labeling (for
example, paths and cycles become polynomial), but no isomorphism-aware
caching is attempted.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .graph import Multigraph, canonical_key, contract_edge, delete_edge, simplify
from .polynomial import LAMBDA, ZERO, IntPolynomial, linear, monomial, multiply


@dataclass
class DcStats:
    nodes: int = 0
    cache_hits: int = 0
    max_depth: int = 0


def chromatic_polynomial_dc(g: Multigraph) -> tuple[IntPolynomial, DcStats]:
    """P(G, λ) for any multigraph, with recursion statistics.

    Rules, in order: a loop gives the zero polynomial; parallel edges collapse
    to one; an edgeless graph on k vertices gives λ^k; otherwise the
    lowest-indexed remaining edge is deleted and contracted.
    """
    stats = DcStats()
    cache: dict[bytes, IntPolynomial] = {}
    # depth is bounded by the edge count plus the graph's own rewrites
    needed = 4 * (g.edge_count + g.vertex_count) + 100
    old_limit = sys.getrecursionlimit()
    if needed > old_limit:
        sys.setrecursionlimit(needed)
    try:
        result = _dc(g, 1, cache, stats)
    finally:
        if needed > old_limit:
            sys.setrecursionlimit(old_limit)
    return result, stats


def _dc(g: Multigraph, depth: int, cache: dict[bytes, IntPolynomial], stats: DcStats) -> IntPolynomial:
    stats.nodes += 1
    stats.max_depth = max(stats.max_depth, depth)
    if g.has_loop():
        return ZERO
    g = simplify(g)
    if not g.edges:
        return monomial(g.vertex_count)
    key = canonical_key(g)
    hit = cache.get(key)
    if hit is not None:
        stats.cache_hits += 1
        return hit
    result = _dc(delete_edge(g, 0), depth + 1, cache, stats) - _dc(contract_edge(g, 0), depth + 1, cache, stats)
    cache[key] = result
    return result


def chromatic_polynomial(g: Multigraph) -> IntPolynomial:
    return chromatic_polynomial_dc(g)[0]


def chromatic_polynomial_path(n: int) -> IntPolynomial:
    """λ(λ-1)^(n-1) for the path on n vertices, by direct multiplication."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    out = LAMBDA
    for _ in range(n - 1):
        out = multiply(out, linear(-1))
    return out
