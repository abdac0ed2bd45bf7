import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from hyperdelta import (
    DisconnectedError,
    DuplicateEdgeError,
    EmptyGraphError,
    GraphError,
    InvalidVertexError,
    LoopEdgeError,
    build_graph,
    format_edge_list,
    induced_on_edges,
    parse_edge_list,
    read_edge_list,
    relabel,
    subdivide,
    write_edge_list,
)


@st.composite
def connected_graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    edges = {(p, v) for v, p in zip(range(1, n), parents)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=6)) if pairs else []
    edges |= set(extra)
    return build_graph(n, sorted(edges))


def test_edges_are_normalized_and_sorted():
    g = build_graph(3, [(2, 1), (1, 0)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.m == 2 and g.is_tree()
    assert g.edge_id(2, 1) == 1 and g.degree(1) == 2


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (0, [], EmptyGraphError),
        (2, [(0, 0)], LoopEdgeError),
        (2, [(0, 1), (1, 0)], DuplicateEdgeError),
        (3, [(0, 1)], DisconnectedError),
        (2, [(0, 2)], InvalidVertexError),
    ],
)
def test_invalid_graphs(n, edges, exc):
    with pytest.raises(exc):
        build_graph(n, edges)


def test_graph_errors_are_value_errors():
    assert issubclass(GraphError, ValueError)


@given(connected_graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(format_edge_list(g, "note")) == g


def test_parse_errors():
    with pytest.raises(GraphError):
        parse_edge_list("")
    with pytest.raises(GraphError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(GraphError):
        parse_edge_list("2 1\n0 x\n")


def test_file_round_trip(tmp_path):
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    f = tmp_path / "c4.txt"
    write_edge_list(g, f, "square")
    assert f.read_text().startswith("# square\n4 4\n")
    assert read_edge_list(f) == g


@settings(max_examples=40)
@given(connected_graphs(max_n=6), st.integers(1, 4))
def test_subdivision_counts_and_distances(g, r):
    s = subdivide(g, r)
    assert s.n == g.n + g.m * (r - 1) and s.m == r * g.m
    G, S = nx.Graph(g.edges), nx.Graph(s.edges)
    G.add_nodes_from(range(g.n))
    if g.n > 1:
        dg, ds = dict(nx.all_pairs_shortest_path_length(G)), dict(nx.all_pairs_shortest_path_length(S))
        assert all(ds[u][v] == r * dg[u][v] for u in range(g.n) for v in range(g.n))
    with pytest.raises(ValueError):
        subdivide(g, 0)


def test_relabel_and_induced():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert relabel(g, [2, 0, 1]).edges == ((0, 1), (0, 2))
    sub, local = induced_on_edges([(4, 7), (7, 9)])
    assert sub.n == 3 and local == (4, 7, 9) and sub.edges == ((0, 1), (1, 2))
