import networkx as nx
import numpy as np
import pytest

from _oracle import connected_atlas
from hyperdelta import GraphPoint, GridMetric, build_graph, complete, cycle, diameters, q, subdivide, theta, ThetaSpec
from hyperdelta import vertex_edge_within_one


def _atlas(max_n):
    out = []
    for G in connected_atlas(max_n):
        G = nx.convert_node_labels_to_integers(G)
        out.append(build_graph(G.number_of_nodes(), list(G.edges)))
    return out


@pytest.mark.parametrize("scale", [2, 4, 8])
def test_grid_distances_equal_subdivision_distances(scale):
    for g in _atlas(5)[::3]:
        gm = GridMetric(g, scale)
        s = subdivide(g, scale)
        ref = dict(nx.all_pairs_shortest_path_length(nx.Graph(s.edges))) if s.m else {0: {0: 0}}
        want = np.array([[ref[u][v] for v in range(s.n)] for u in range(s.n)])
        assert np.array_equal(gm.dist, want)


def test_point_round_trip_and_names():
    g = cycle(4)
    gm = GridMetric(g, 4)
    for node in range(gm.size):
        assert gm.node_id(gm.point(node)) == node
    mid = GraphPoint.midpoint(g, 0, 1)
    assert mid.in_j and str(mid) == "e0+2/4"
    assert GraphPoint.on_edge(g, 0, 4) == GraphPoint.at_vertex(1)
    assert gm.distance(GraphPoint.at_vertex(0), GraphPoint.at_vertex(2)) == q(2)
    with pytest.raises(ValueError):
        GraphPoint(vertex=1, edge=0)
    with pytest.raises(ValueError):
        GridMetric(g, 3)


@pytest.mark.parametrize(
    "g, dv, dm, de",
    [
        (cycle(5), 2, "5/2", "5/2"),
        (cycle(6), 3, 3, 3),
        (complete(4), 1, 2, 2),
        (build_graph(3, [(0, 1), (1, 2)]), 2, 2, 1),
        (theta(ThetaSpec(1, 3, 4)), 3, "7/2", "7/2"),
    ],
)
def test_diameters(g, dv, dm, de):
    rep = diameters(g)
    assert (rep.diam_vertices, rep.diam_metric, rep.diam_effective) == (q(dv), q(dm), q(de))


def test_vertex_edge_predicate_brute_force():
    for g in _atlas(6):
        gm = GridMetric(g, 2)
        want = all(
            min(gm.dist[v, u], gm.dist[v, w]) <= 2
            for v in range(g.n)
            for u, w in g.edges
        )
        assert vertex_edge_within_one(g) == want
