import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromakit.errors import EdgeListFormatError, GraphError
from chromakit.fixtures import DC_EXAMPLE, DC_EXAMPLE_EDGE
from chromakit.graph import (
    Multigraph,
    add_edge,
    canonical_key,
    complete_graph,
    connected_component_count,
    contract_edge,
    cycle_graph,
    delete_edge,
    format_edge_list,
    new_graph,
    parse_edge_list,
    path_graph,
    random_multigraph,
    read_edge_list,
    write_edge_list,
)
from chromakit.oracle import count_proper_colorings


@st.composite
def multigraphs(draw, max_vertices=6, max_edges=9):
    n = draw(st.integers(1, max_vertices))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_edges))
    return new_graph(n, edges)


def test_new_graph_empty():
    g = new_graph(0, [])
    assert g.vertex_count == 0 and g.edges == ()


def test_new_graph_keeps_loops_and_parallels():
    assert new_graph(1, [(0, 0)]).edges == ((0, 0),)
    assert new_graph(2, [(0, 1), (0, 1)]).edges == ((0, 1), (0, 1))


def test_new_graph_rejects_out_of_range_endpoint():
    with pytest.raises(GraphError, match=r"edge 1 \(1, 3\)"):
        new_graph(3, [(0, 1), (1, 3)])


def test_delete_edge_keeps_parallel_twin():
    g = delete_edge(cycle_graph(2), 0)
    assert g.edge_count == 1
    assert canonical_key(g) == canonical_key(path_graph(2))


@pytest.mark.parametrize("n", range(3, 9))
def test_cycle_minus_edge_is_path(n):
    g = delete_edge(cycle_graph(n), n - 1)
    assert g == path_graph(n)


def test_delete_invalid_edge():
    with pytest.raises(GraphError):
        delete_edge(path_graph(3), 5)
    with pytest.raises(GraphError):
        delete_edge(path_graph(3), -1)


def test_contract_path2_to_single_vertex():
    assert contract_edge(path_graph(2), 0) == new_graph(1, [])


def test_contract_c2_gives_c1():
    g = contract_edge(cycle_graph(2), 0)
    assert g.vertex_count == 1 and g.edges == ((0, 0),)
    assert count_proper_colorings(g, 5) == 0


def test_contract_loop_is_error():
    with pytest.raises(GraphError, match="loop"):
        contract_edge(cycle_graph(1), 0)


def test_contract_reindexes_and_merges_into_lower():
    g = new_graph(4, [(1, 3), (0, 3), (2, 3), (1, 2)])
    h = contract_edge(g, 0)
    # vertex 3 merges into 1; nothing above 3 to shift
    assert h == new_graph(3, [(0, 1), (2, 1), (1, 2)])


def test_contract_cycle_gives_shorter_cycle():
    for n in range(3, 8):
        h = contract_edge(cycle_graph(n), 0)
        assert canonical_key(h) == canonical_key(cycle_graph(n - 1))


def test_dc_example_rewrites():
    g = DC_EXAMPLE
    assert delete_edge(g, DC_EXAMPLE_EDGE) == new_graph(4, [(0, 1), (1, 2), (2, 0)])
    assert contract_edge(g, DC_EXAMPLE_EDGE) == new_graph(3, [(0, 1), (1, 2), (2, 0)])


def test_component_counts():
    assert connected_component_count(new_graph(3, [])) == 3
    assert connected_component_count(cycle_graph(5)) == 1
    assert connected_component_count(delete_edge(cycle_graph(3), 0)) == 1
    assert connected_component_count(new_graph(0, [])) == 0
    assert connected_component_count(new_graph(2, [(0, 0), (1, 1)])) == 2


def test_constructors():
    c3 = cycle_graph(3)
    assert c3.vertex_count == 3 and c3.edge_count == 3
    assert path_graph(1) == new_graph(1, [])
    k4 = complete_graph(4)
    assert k4.vertex_count == 4 and k4.edge_count == 6
    assert complete_graph(0) == new_graph(0, [])
    assert cycle_graph(1).edges == ((0, 0),)
    assert cycle_graph(2).edge_count == 2 and not cycle_graph(2).has_loop()
    for bad in (cycle_graph, path_graph):
        with pytest.raises(GraphError):
            bad(0)


@pytest.mark.parametrize("n", range(3, 15))
def test_cycle_degrees(n):
    g = cycle_graph(n)
    assert g.vertex_count == n and g.edge_count == n
    assert all(g.degree(v) == 2 for v in range(n))


def test_canonical_key():
    assert canonical_key(cycle_graph(4)) == canonical_key(cycle_graph(4))
    assert canonical_key(cycle_graph(4)) != canonical_key(path_graph(4))
    g = cycle_graph(5)
    again = add_edge(delete_edge(g, 2), *g.edges[2])
    assert again.edges != g.edges
    assert canonical_key(again) == canonical_key(g)
    # orientation within a pair does not matter; multiplicity does
    assert canonical_key(new_graph(2, [(1, 0)])) == canonical_key(new_graph(2, [(0, 1)]))
    assert canonical_key(new_graph(2, [(0, 1)])) != canonical_key(new_graph(2, [(0, 1), (0, 1)]))


@given(multigraphs())
def test_delete_removes_one_occurrence(g):
    for e in range(g.edge_count):
        h = delete_edge(g, e)
        assert h.edge_count == g.edge_count - 1
        c = connected_component_count(g)
        assert connected_component_count(h) in (c, c + 1)


@given(multigraphs())
def test_contract_drops_one_vertex_one_edge(g):
    for e, (a, b) in enumerate(g.edges):
        if a == b:
            continue
        h = contract_edge(g, e)
        assert h.vertex_count == g.vertex_count - 1
        assert h.edge_count == g.edge_count - 1
        twins = sum(1 for x, y in g.edges if {x, y} == {a, b}) - 1
        assert sum(1 for x, y in h.edges if x == y) == sum(1 for x, y in g.edges if x == y) + twins


@given(multigraphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(format_edge_list(g)) == g


def test_edge_list_file_round_trip(tmp_path):
    g = new_graph(3, [(0, 0), (0, 1), (0, 1), (2, 1)])
    path = tmp_path / "g.edges"
    write_edge_list(g, path)
    assert path.read_bytes() == b"3 4\n0 0\n0 1\n0 1\n2 1\n"
    assert read_edge_list(path) == g


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3\n",
        "3 2\n0 1\n",
        "3 1\n0 1 2\n",
        "3 1\n0 x\n",
        "3 1\n0 3\n",
        "2 1\n0 -1\n",
        "2 1\n0 λ\n",
    ],
)
def test_edge_list_rejects_malformed(text):
    with pytest.raises(EdgeListFormatError):
        parse_edge_list(text)


def test_random_simple_graph_is_simple():
    rng = random.Random(1)
    for _ in range(50):
        g = random_multigraph(rng, 7, 12, allow_loops=False, allow_parallel=False)
        assert isinstance(g, Multigraph)
        pairs = [tuple(sorted(e)) for e in g.edges]
        assert len(pairs) == len(set(pairs)) and all(a != b for a, b in pairs)
