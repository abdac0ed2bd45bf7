import random

import networkx as nx
import pytest

from _oracle import connected_atlas, nx_circumference, nx_girth, to_nx
from hyperdelta import (
    BudgetExceeded,
    build_graph,
    circumference,
    complete,
    cycle,
    cycle_lengths,
    girth,
    longest_cycle,
    path,
    q,
    shortest_cycle_at_least,
    t_decomposition,
)
from hyperdelta.structure import circumference_edges, girth_edges


def _from_nx(G):
    G = nx.convert_node_labels_to_integers(G)
    return build_graph(G.number_of_nodes(), list(G.edges))


ATLAS = [_from_nx(G) for G in connected_atlas(6)]


def test_named_girth_and_circumference():
    assert girth(cycle(7)) == q(7) and circumference(cycle(7)) == q(7)
    assert girth(complete(5)) == q(3) and circumference(complete(5)) == q(5)
    assert girth(path(4)) is None and circumference(path(4)) is None


@pytest.mark.parametrize("g", ATLAS, ids=lambda g: f"n{g.n}m{g.m}")
def test_cycles_match_networkx(g):
    assert girth_edges(g) == nx_girth(g)
    assert circumference_edges(g) == nx_circumference(g)
    counts = {}
    for c in nx.simple_cycles(to_nx(g)):
        counts[len(c)] = counts.get(len(c), 0) + 1
    assert cycle_lengths(g) == counts


@pytest.mark.parametrize("g", ATLAS, ids=lambda g: f"n{g.n}m{g.m}")
def test_blocks_match_networkx(g):
    td = t_decomposition(g)
    ours = sorted(tuple(sorted(c)) for c in td.components)
    theirs = sorted(
        tuple(sorted((min(u, v), max(u, v)) for u, v in comp))
        for comp in nx.biconnected_component_edges(to_nx(g))
    )
    assert ours == theirs
    assert sorted(td.cut_vertices) == sorted(nx.articulation_points(to_nx(g)))
    assert len(td.effective_diameters) == len(td)


def test_cycle_witnesses_are_cycles():
    rng = random.Random(7)
    for g in rng.sample(ATLAS, 40):
        cyc = longest_cycle(g)
        if cyc is None:
            assert g.is_tree()
            continue
        assert set(cyc.edges) <= set(g.edges) and len(cyc.vertices) == circumference_edges(g)
        short = shortest_cycle_at_least(g, 4)
        lengths = [L for L in cycle_lengths(g) if L >= 4]
        assert (short is None) == (not lengths)
        if short is not None:
            assert len(short.vertices) == min(lengths) and set(short.edges) <= set(g.edges)


def test_cycle_search_budget():
    with pytest.raises(BudgetExceeded):
        cycle_lengths(complete(7), budget=10)
