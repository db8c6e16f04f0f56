"""Proper colorings of C_n counted as closed walks of length n in K_λ.

A coloring (ω_1, ..., ω_n) of C_n is the closed walk ω_1 -> ω_2 -> ... -> ω_n -> ω_1
in the complete graph on the λ colors, so the count is tr(A^n) for A the
adjacency matrix of K_λ. Matrices hold Python ints; numpy's fixed-width
integers would overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Multigraph, complete_graph


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        d = len(rows)
        if any(len(r) != d for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        return matrix_multiply(self, other)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def from_rows(rows: Sequence[Sequence[int]]) -> IntMatrix:
    return IntMatrix(tuple(tuple(r) for r in rows))


def identity(d: int) -> IntMatrix:
    return IntMatrix(tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))


def adjacency_matrix(g: Multigraph) -> IntMatrix:
    """Off-diagonal entries count parallel edges; A[i][i] counts loops at v_i (one walk step each)."""
    d = g.vertex_count
    a = [[0] * d for _ in range(d)]
    for u, v in g.edges:
        if u == v:
            a[u][u] += 1
        else:
            a[u][v] += 1
            a[v][u] += 1
    return from_rows(a)


def matrix_multiply(m: IntMatrix, k: IntMatrix) -> IntMatrix:
    if m.dim != k.dim:
        raise ValueError(f"dimension mismatch {m.dim} vs {k.dim}")
    cols = list(zip(*k.rows))
    return IntMatrix(tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in m.rows))


def matrix_power(m: IntMatrix, n: int) -> IntMatrix:
    if n < 0:
        raise ValueError(f"negative exponent {n}")
    result, base = identity(m.dim), m
    while n:
        if n & 1:
            result = matrix_multiply(result, base)
        n >>= 1
        if n:
            base = matrix_multiply(base, base)
    return result


def trace(m: IntMatrix) -> int:
    return sum(m.rows[i][i] for i in range(m.dim))


def count_closed_walks(g: Multigraph, n: int) -> int:
    return trace(matrix_power(adjacency_matrix(g), n))


def complete_graph_closed_walks(lam: int, n: int) -> int:
    """tr(A^n) for K_λ from its spectrum {λ-1, -1 (λ-1 times)}: (λ-1)^n + (λ-1)(-1)^n."""
    if lam < 1:
        raise ValueError(f"K_λ needs λ >= 1, got {lam}")
    if n < 0:
        raise ValueError(f"walk length must be non-negative, got {n}")
    return (lam - 1) ** n + (lam - 1) * (-1) ** n


def complete_graph_closed_walks_by_matrix(lam: int, n: int) -> int:
    return count_closed_walks(complete_graph(lam), n)


def chromatic_count_via_walks(n: int, lam: int) -> int:
    """Proper λ-colorings of C_n, counted as closed n-walks in K_λ."""
    if n < 1:
        raise ValueError(f"cycle needs n >= 1, got {n}")
    return complete_graph_closed_walks(lam, n)
