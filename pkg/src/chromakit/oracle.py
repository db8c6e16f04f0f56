"""Brute-force ground truth straight from the definitions.

Nothing here is clever on purpose. Colorings are counted by scanning every
assignment in ``{0..λ-1}^V`` (vectorized with numpy in blocks), cycle colorings
are listed by depth-first search, and walks are counted by expanding every
edge choice. Each engine is checked against these.
"""

from __future__ import annotations

import itertools
import os
from typing import Iterator

import numpy as np

from .errors import BudgetExceededError
from .graph import Multigraph

DEFAULT_BUDGET = 10**8
DEFAULT_ENUMERATION_CAP = 10**7
BUDGET_ENV = "CHROMAKIT_BUDGET"

# assignments of the trailing vertices materialized per block
_BLOCK = 1 << 18

Coloring = tuple[int, ...]


def work_budget() -> int:
    """The active work budget; the ``CHROMAKIT_BUDGET`` environment variable overrides the default."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{BUDGET_ENV} must be non-negative, got {value}")
    return value


def _check_budget(work: int, budget: int | None, what: str) -> None:
    limit = work_budget() if budget is None else budget
    if work > limit:
        raise BudgetExceededError(f"{what} needs {work} steps, budget is {limit}")


def count_proper_colorings(g: Multigraph, lam: int, *, budget: int | None = None) -> int:
    """Number of maps V -> {1..λ} giving every edge distinct endpoint colors.

    A loop admits no proper coloring; parallel edges are one constraint.
    The empty graph has exactly one (empty) coloring for every λ.
    """
    if lam < 0:
        raise ValueError(f"λ must be non-negative, got {lam}")
    v = g.vertex_count
    if v == 0:
        return 1
    _check_budget(lam**v, budget, f"counting {lam}-colorings of a {v}-vertex graph")
    if lam == 0 or g.has_loop():
        return 0
    if not g.edges:
        return lam**v

    # split vertices: a prefix enumerated in Python, a suffix scanned as a numpy block
    suffix = 0
    while suffix < v and lam ** (suffix + 1) <= _BLOCK:
        suffix += 1
    suffix = max(suffix, 1)
    prefix = v - suffix

    # rows = every assignment of the suffix vertices (mixed radix λ)
    codes = np.arange(lam**suffix, dtype=np.int64)
    grid = np.empty((codes.size, suffix), dtype=np.int64)
    for col in range(suffix):
        grid[:, col] = codes % lam
        codes //= lam

    inner_ok = np.ones(grid.shape[0], dtype=bool)
    cross: list[tuple[int, int]] = []  # (prefix vertex, suffix column)
    prefix_edges: list[tuple[int, int]] = []
    for a, b in g.edges:
        if a >= prefix and b >= prefix:
            inner_ok &= grid[:, a - prefix] != grid[:, b - prefix]
        elif a < prefix and b < prefix:
            prefix_edges.append((a, b))
        else:
            p, s = (a, b) if a < prefix else (b, a)
            cross.append((p, s - prefix))

    # differs[s][c]: suffix column s is not color c
    used_cols = sorted({s for _, s in cross})
    differs = {s: [grid[:, s] != c for c in range(lam)] for s in used_cols}

    total = 0
    for colors in itertools.product(range(lam), repeat=prefix):
        if any(colors[a] == colors[b] for a, b in prefix_edges):
            continue
        mask = inner_ok
        for p, s in cross:
            mask = mask & differs[s][colors[p]]
        total += int(np.count_nonzero(mask))
    return total


def iter_proper_cycle_colorings(n: int, lam: int) -> Iterator[Coloring]:
    """Proper λ-colorings of C_n in lexicographic order, colors 1..λ."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if lam <= 0:
        return
    word = [0] * n

    def extend(i: int) -> Iterator[Coloring]:
        for c in range(1, lam + 1):
            if i > 0 and word[i - 1] == c:
                continue
            # the last vertex neighbours the first; for n = 1 that is itself
            if i == n - 1 and (word[0] if i else c) == c:
                continue
            word[i] = c
            if i == n - 1:
                yield tuple(word)
            else:
                yield from extend(i + 1)

    yield from extend(0)


def enumerate_proper_cycle_colorings(
    n: int, lam: int, *, budget: int | None = None, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[Coloring]:
    """Materialize X_n, the proper λ-colorings of C_n, in lexicographic order."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if lam < 0:
        raise ValueError(f"λ must be non-negative, got {lam}")
    _check_budget(lam**n, budget, f"enumerating {lam}-colorings of C_{n}")
    out = []
    for w in iter_proper_cycle_colorings(n, lam):
        out.append(w)
        if len(out) > cap:
            raise BudgetExceededError(f"more than {cap} colorings of C_{n} with {lam} colors")
    return out


def _steps(g: Multigraph) -> list[list[int]]:
    """One entry per edge end leaving each vertex; a loop is a single step back to its vertex."""
    steps: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for a, b in g.edges:
        if a == b:
            steps[a].append(a)
        else:
            steps[a].append(b)
            steps[b].append(a)
    return steps


def walk_endpoint_counts(
    g: Multigraph, start: int, length: int, *, budget: int | None = None
) -> list[int]:
    """Walks of the given length from ``start``, tallied by final vertex, by explicit expansion."""
    if not 0 <= start < g.vertex_count:
        raise ValueError(f"vertex {start} not in graph")
    if length < 0:
        raise ValueError(f"length must be non-negative, got {length}")
    steps = _steps(g)
    branching = max((len(s) for s in steps), default=0)
    _check_budget(branching**length, budget, f"expanding walks of length {length}")
    tally = [0] * g.vertex_count

    def expand(v: int, remaining: int) -> None:
        if remaining == 0:
            tally[v] += 1
            return
        for w in steps[v]:
            expand(w, remaining - 1)

    expand(start, length)
    return tally


def count_walks_brute(
    g: Multigraph, source: int, target: int, length: int, *, budget: int | None = None
) -> int:
    """Walks of exactly ``length`` steps from ``source`` to ``target``.

    Parallel edges are distinct steps; traversing a loop is one step.
    """
    if not 0 <= target < g.vertex_count:
        raise ValueError(f"vertex {target} not in graph")
    return walk_endpoint_counts(g, source, length, budget=budget)[target]
