"""Multigraphs with loops and parallel edges, and the rewrites deletion-contraction needs.

Vertices are the integers ``0..vertex_count-1``. Edges are stored as an ordered
tuple of endpoint pairs; an edge's id is its position in that tuple. Pairs are
unordered (``(a, b)`` and ``(b, a)`` describe the same edge), duplicates are
parallel edges and ``(a, a)`` is a loop.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import EdgeListFormatError, GraphError

Edge = tuple[int, int]
EdgeId = int


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise GraphError(f"vertex_count must be non-negative, got {self.vertex_count}")
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        for idx, (a, b) in enumerate(edges):
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise GraphError(
                    f"edge {idx} ({a}, {b}) has an endpoint outside 0..{self.vertex_count - 1}"
                )
        object.__setattr__(self, "edges", edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_loop(self) -> bool:
        return any(a == b for a, b in self.edges)

    def degree(self, v: int) -> int:
        """Edge-endpoint incidences at ``v``; a loop contributes 2."""
        return sum((a == v) + (b == v) for a, b in self.edges)

    def __repr__(self) -> str:
        return f"Multigraph({self.vertex_count}, {list(self.edges)})"


def new_graph(vertex_count: int, edges: Iterable[Sequence[int]] = ()) -> Multigraph:
    return Multigraph(vertex_count, tuple(tuple(e) for e in edges))


def add_edge(g: Multigraph, a: int, b: int) -> Multigraph:
    return Multigraph(g.vertex_count, g.edges + ((a, b),))


def _check_edge_id(g: Multigraph, e: EdgeId) -> None:
    if not isinstance(e, int) or not 0 <= e < len(g.edges):
        raise GraphError(f"invalid edge id {e!r} for a graph with {len(g.edges)} edges")


def delete_edge(g: Multigraph, e: EdgeId) -> Multigraph:
    """Remove exactly one edge occurrence; a parallel twin survives."""
    _check_edge_id(g, e)
    return Multigraph(g.vertex_count, g.edges[:e] + g.edges[e + 1 :])


def contract_edge(g: Multigraph, e: EdgeId) -> Multigraph:
    """Merge the endpoints of non-loop edge ``e``.

    The merged vertex keeps the lower index and every higher index shifts down
    by one. Edges parallel to ``e`` become loops; parallels created by the merge
    are kept.
    """
    _check_edge_id(g, e)
    a, b = g.edges[e]
    if a == b:
        raise GraphError(f"cannot contract loop edge {e} at vertex {a}")
    keep, drop = min(a, b), max(a, b)

    def remap(x: int) -> int:
        if x == drop:
            return keep
        return x - 1 if x > drop else x

    edges = tuple((remap(x), remap(y)) for i, (x, y) in enumerate(g.edges) if i != e)
    return Multigraph(g.vertex_count - 1, edges)


def count_components(vertex_count: int, edges: Iterable[Edge]) -> int:
    """Connected components of the graph on ``vertex_count`` vertices with these edges."""
    parent = list(range(vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = vertex_count
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            components -= 1
    return components


def connected_component_count(g: Multigraph) -> int:
    return count_components(g.vertex_count, g.edges)


def simplify(g: Multigraph) -> Multigraph:
    """Drop parallel duplicates, keeping the first occurrence of each vertex pair."""
    seen: set[Edge] = set()
    edges = []
    for a, b in g.edges:
        key = (a, b) if a <= b else (b, a)
        if key not in seen:
            seen.add(key)
            edges.append((a, b))
    return Multigraph(g.vertex_count, tuple(edges))


def canonical_key(g: Multigraph) -> bytes:
    """Labeled-graph key: sorted endpoint pairs, sorted edge list. Not an isomorphism invariant."""
    pairs = sorted((a, b) if a <= b else (b, a) for a, b in g.edges)
    body = ";".join(f"{a},{b}" for a, b in pairs)
    return f"{g.vertex_count}|{body}".encode("ascii")


def cycle_graph(n: int) -> Multigraph:
    """C_n; C_1 is a single loop and C_2 a doubled edge."""
    if n < 1:
        raise GraphError(f"cycle_graph needs n >= 1, got {n}")
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Multigraph:
    if n < 1:
        raise GraphError(f"path_graph needs n >= 1, got {n}")
    return Multigraph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete_graph(k: int) -> Multigraph:
    if k < 0:
        raise GraphError(f"complete_graph needs k >= 0, got {k}")
    return Multigraph(k, tuple((i, j) for i in range(k) for j in range(i + 1, k)))


def random_multigraph(
    rng: random.Random,
    max_vertices: int,
    max_edges: int,
    *,
    allow_loops: bool = True,
    allow_parallel: bool = True,
    min_vertices: int = 1,
) -> Multigraph:
    """Draw a small random graph; used to build test corpora."""
    n = rng.randint(min_vertices, max_vertices)
    if not allow_parallel:
        pool = [(i, j) for i in range(n) for j in range(i + (0 if allow_loops else 1), n)]
        m = rng.randint(0, min(max_edges, len(pool)))
        return Multigraph(n, tuple(rng.sample(pool, m)))
    m = rng.randint(0, max_edges)
    edges = []
    while len(edges) < m:
        a, b = rng.randrange(n), rng.randrange(n)
        if a == b and not allow_loops:
            if n == 1:
                break
            continue
        edges.append((a, b))
    return Multigraph(n, tuple(edges))


# -- edge-list text format ---------------------------------------------------

def format_edge_list(g: Multigraph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Multigraph:
    """Parse ``v e`` followed by ``e`` lines of ``a b`` (0-based)."""
    try:
        text.encode("ascii")
    except UnicodeEncodeError as exc:
        raise EdgeListFormatError("edge list must be ASCII") from exc
    lines = [line.strip() for line in text.split("\n")]
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise EdgeListFormatError("empty edge list")

    def ints(lineno: int) -> tuple[int, int]:
        parts = lines[lineno].split()
        if len(parts) != 2:
            raise EdgeListFormatError(f"line {lineno + 1}: expected two integers, got {lines[lineno]!r}")
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListFormatError(
                f"line {lineno + 1}: expected two integers, got {lines[lineno]!r}"
            ) from None
        if x < 0 or y < 0:
            raise EdgeListFormatError(f"line {lineno + 1}: negative value")
        return x, y

    v, e = ints(0)
    if len(lines) - 1 != e:
        raise EdgeListFormatError(f"header declares {e} edges but {len(lines) - 1} edge lines follow")
    edges = [ints(i) for i in range(1, e + 1)]
    try:
        return Multigraph(v, tuple(edges))
    except GraphError as exc:
        raise EdgeListFormatError(str(exc)) from None


def read_edge_list(path: str | Path) -> Multigraph:
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError as exc:
        raise EdgeListFormatError(f"{path}: not ASCII") from exc
    return parse_edge_list(text)


def write_edge_list(g: Multigraph, path: str | Path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_edge_list(g))
