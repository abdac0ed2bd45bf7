import random
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from _oracle import connected_atlas, nx_circumference, nx_girth
from hyperdelta import (
    CapExceeded,
    EnumerationQuery,
    are_isomorphic,
    build_graph,
    canonical_form,
    canonical_key,
    count_graphs,
    cycle,
    enumerate_graphs,
    path,
    relabel,
)


def _from_nx(G):
    G = nx.convert_node_labels_to_integers(G)
    return build_graph(G.number_of_nodes(), list(G.edges))


ATLAS = [_from_nx(G) for G in connected_atlas(7)]


@pytest.mark.parametrize("n, want", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112), (7, 853)])
def test_counts(n, want):
    assert count_graphs(EnumerationQuery(vertex_count=n)) == want


def test_classes_match_the_atlas():
    ours = Counter(canonical_key(g) for g in enumerate_graphs(EnumerationQuery(max_vertices=7)))
    theirs = Counter(canonical_key(g) for g in ATLAS)
    assert ours == theirs and max(ours.values()) == 1


def test_canonical_key_separates_atlas_graphs():
    keys = [canonical_key(g) for g in ATLAS]
    assert len(set(keys)) == len(ATLAS)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**9))
def test_canonical_form_is_invariant(seed):
    rng = random.Random(seed)
    g = rng.choice(ATLAS)
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = relabel(g, perm)
    assert canonical_form(h) == canonical_form(g) and are_isomorphic(g, h)


def test_labelled_mode_counts():
    # connected labelled graphs on n vertices: 1, 1, 4, 38, 728
    assert count_graphs(EnumerationQuery(vertex_count=4, dedup=False)) == 38
    assert count_graphs(EnumerationQuery(vertex_count=5, dedup=False)) == 728


def test_filters_match_atlas():
    for g_, c_ in [(3, 5), (4, 6), (3, 3), (5, 7)]:
        q = EnumerationQuery(max_vertices=7, girth=g_, circumference=c_)
        want = sum(1 for g in ATLAS if (nx_girth(g), nx_circumference(g)) == (g_, c_))
        assert count_graphs(q) == want
    assert count_graphs(EnumerationQuery(max_vertices=6, girth=0)) == sum(1 for g in ATLAS if g.n <= 6 and g.is_tree())


def test_edge_queries():
    by_m = Counter(g.m for g in ATLAS)
    got = list(enumerate_graphs(EnumerationQuery(edge_count=6)))
    assert all(g.m == 6 for g in got)
    # a connected graph with 6 edges has at most 7 vertices, so the atlas has all of them
    assert len(got) == by_m[6]


def test_order_is_deterministic():
    a = list(enumerate_graphs(EnumerationQuery(max_vertices=5)))
    b = list(enumerate_graphs(EnumerationQuery(max_vertices=5)))
    assert a == b
    keys = [canonical_key(g) for g in a]
    assert keys == sorted(keys)


def test_caps():
    with pytest.raises(CapExceeded):
        list(enumerate_graphs(EnumerationQuery(vertex_count=8)))
    with pytest.raises(CapExceeded):
        list(enumerate_graphs(EnumerationQuery(edge_count=10)))
    with pytest.raises(CapExceeded):
        list(enumerate_graphs(EnumerationQuery(vertex_count=7, dedup=False)))
    with pytest.raises(ValueError):
        list(enumerate_graphs(EnumerationQuery()))


def test_small_named_graphs():
    three = list(enumerate_graphs(EnumerationQuery(vertex_count=3)))
    assert {canonical_key(g) for g in three} == {canonical_key(path(3)), canonical_key(cycle(3))}
