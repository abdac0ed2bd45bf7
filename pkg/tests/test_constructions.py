import random

import pytest
from hypothesis import given, settings, strategies as st

from hyperdelta import (
    ChainSpec,
    ConstraintViolationError,
    ConstructionError,
    InvalidSizeError,
    MultiEdgeError,
    NotAdmissibleError,
    OddSizeError,
    OrderViolationError,
    SizeTooSmallError,
    ThetaSpec,
    are_isomorphic,
    attach_pendants,
    basic,
    build_chain,
    chain,
    complete,
    cycle,
    delta_exact,
    enumerate_geodesics,
    gamma,
    lambda_,
    path,
    q,
    theta,
    witness_e,
    witness_v,
)
from hyperdelta.metric import GraphPoint
from hyperdelta.structure import circumference_edges, girth_edges


def gc(g):
    return girth_edges(g), circumference_edges(g)


def test_basic_graphs():
    assert gc(cycle(5)) == (5, 5)
    assert complete(4).m == 6
    assert path(3).is_tree() and girth_edges(path(3)) is None
    assert basic("cycle", 6) == cycle(6)
    with pytest.raises(SizeTooSmallError):
        cycle(2)
    with pytest.raises(ValueError):
        basic("star", 4)


def test_theta_examples():
    t = theta(ThetaSpec(1, 2, 3))
    assert t.n == 5 and gc(t) == (3, 5)
    t = theta(ThetaSpec(2, 2, 2))
    assert t.n == 5 and gc(t) == (4, 4)
    with pytest.raises(MultiEdgeError):
        ThetaSpec(1, 1, 3)
    with pytest.raises(OrderViolationError):
        ThetaSpec(3, 2, 4)
    with pytest.raises(SizeTooSmallError):
        ThetaSpec(0, 2, 3)


@given(st.integers(1, 5), st.integers(1, 5), st.integers(1, 5))
def test_theta_shape(a, b, c):
    a1, a2, a3 = sorted((a, b, c))
    if a1 == a2 == 1:
        return
    spec = ThetaSpec(a1, a2, a3)
    t = theta(spec)
    assert t.n == spec.vertex_count == a1 + a2 + a3 - 1 and t.m == a1 + a2 + a3
    assert gc(t) == (a1 + a2, a2 + a3) == (spec.girth, spec.circumference)


def test_chain_examples():
    g = chain(ChainSpec(1, [1], [4, 3]))
    assert are_isomorphic(g, theta(ThetaSpec(1, 3, 4)))
    spec = ChainSpec(2, [1, 1], [5, 2, 5], [2])
    g = chain(spec)
    assert (g.n, *gc(g)) == (14, 6, 14)
    assert sum(spec.beta) + sum(spec.betap) == 14
    with pytest.raises(ConstraintViolationError):
        ChainSpec(1, [3], [1, 1])
    with pytest.raises(ConstructionError):
        ChainSpec(2, [1], [1, 1])


def test_chain_layout_records_cycles():
    spec = ChainSpec(2, [1, 2], [3, 2, 4], [1])
    lay = build_chain(spec)
    assert [len(e) for e in lay.cycle_edges] == list(spec.cycle_lengths)
    assert all(len(v) == L for v, L in zip(lay.cycles, spec.cycle_lengths))
    assert lay.graph.m == spec.total_length
    assert len(lay.hubs) == len(lay.hubs_prime) == 2


def test_chain_zero_rungs_identify_hubs():
    spec = ChainSpec(1, [0], [3, 4])
    g = chain(spec)
    assert (g.n, g.m) == (6, 7)  # two cycles sharing one vertex
    assert gc(g) == (3, 4)


def test_chain_geodesics_stay_in_their_cycle():
    spec = ChainSpec(2, [1, 2], [3, 2, 4], [1])
    lay = build_chain(spec)
    G = lay.graph
    for verts, edges in zip(lay.cycles, lay.cycle_edges):
        pts = [GraphPoint.at_vertex(v) for v in sorted(verts)] + [GraphPoint.midpoint(G, *e) for e in sorted(edges)]
        for x in pts:
            for y in pts:
                for geo in enumerate_geodesics(G, x, y):
                    for p in geo.points:
                        assert (p.vertex in verts) if p.is_vertex else (G.edges[p.edge] in edges)


def test_chain_bound_helpers():
    spec = ChainSpec(2, [1, 1], [5, 2, 5], [2])
    assert spec.unit_rung_bound() is not None
    assert spec.unit_rung_bound() <= spec.general_bound()
    assert ChainSpec(1, [2], [3, 3]).unit_rung_bound() is None
    assert delta_exact(chain(spec)).value <= spec.unit_rung_bound()


def test_gamma_and_lambda():
    assert are_isomorphic(gamma(4), cycle(4))
    g6 = gamma(6)
    assert g6.m == 9 and girth_edges(g6) == 4
    with pytest.raises(OddSizeError):
        gamma(5)
    l7 = lambda_(7)
    assert l7.n == 7 and gc(l7) == (4, 7)
    assert lambda_(9).n == 9 and gc(lambda_(9)) == (4, 9)
    for bad in (5, 8):
        with pytest.raises(InvalidSizeError):
            lambda_(bad)


@pytest.mark.parametrize("c", [4, 6, 8, 10])
def test_gamma_class(c):
    assert gc(gamma(c)) == (4, c) and gamma(c).n == c


def test_pendants():
    g = attach_pendants(complete(4), 0, [2])
    assert g.n == 6 and delta_exact(g).value == q(1)
    g = attach_pendants(cycle(3), 1, [1])
    assert g.n == 4 and gc(g) == (3, 3)
    assert attach_pendants(cycle(5), 2, []) == cycle(5)
    with pytest.raises(ConstructionError):
        attach_pendants(cycle(3), 7, [1])


def test_witness_examples():
    assert are_isomorphic(witness_v(5, 8, 8), theta(ThetaSpec(1, 4, 4)))
    w = witness_v(3, 3, 5)  # triangle plus two pendant edges
    assert (w.n, w.m, *gc(w)) == (5, 5, 3, 3)
    with pytest.raises(NotAdmissibleError):
        witness_v(5, 9, 7)
    assert are_isomorphic(witness_e(3, 5, 6), theta(ThetaSpec(1, 2, 3)))
    w = witness_e(4, 4, 7)
    assert w.m == 7 and gc(w) == (4, 4)
    with pytest.raises(NotAdmissibleError):
        witness_e(5, 9, 9)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 9), st.integers(0, 8), st.integers(0, 10))
def test_witnesses_land_in_their_class(g, dc, extra):
    from hyperdelta import v_admissible, e_admissible

    c, n = g + dc, g + dc + extra - 3
    if v_admissible(g, c, n):
        w = witness_v(g, c, n)
        assert (w.n, *gc(w)) == (n, g, c)
    m = n + 2
    if e_admissible(g, c, m):
        w = witness_e(g, c, m)
        assert (w.m, *gc(w)) == (m, g, c)


def _unchecked_chain(k, alpha, beta, betap):
    spec = object.__new__(ChainSpec)  # skip validation on purpose
    for name, val in (("k", k), ("alpha", tuple(alpha)), ("beta", tuple(beta)), ("betap", tuple(betap))):
        object.__setattr__(spec, name, val)
    return spec


def _escapes(layout):
    G = layout.graph
    for verts, edges in zip(layout.cycles, layout.cycle_edges):
        pts = [GraphPoint.at_vertex(v) for v in sorted(verts)] + [GraphPoint.midpoint(G, *e) for e in sorted(edges)]
        for i, x in enumerate(pts):
            for y in pts[i + 1:]:
                for geo in enumerate_geodesics(G, x, y):
                    for p in geo.points:
                        if not ((p.vertex in verts) if p.is_vertex else (G.edges[p.edge] in edges)):
                            return True
    return False


def test_second_chain_inequality_variants():
    """The inequality as validated is exactly what keeps geodesics inside cycles; the mirrored one is not."""
    import itertools

    tally = {}
    for k in (1, 2):
        for a in itertools.product(range(4), repeat=k):
            for b in itertools.product(range(1, 4), repeat=k + 1):
                for bp in itertools.product(range(3), repeat=k - 1):
                    s = _unchecked_chain(k, a, b, bp)
                    if not all(s.a(j) < s.b(j) + s.a(j + 1) + s.bp(j) for j in range(1, k + 1)):
                        continue
                    printed = all(s.a(j) < s.b(j - 1) + s.a(j - 1) + s.bp(j - 1) for j in range(1, k + 1))
                    try:
                        lay = build_chain(s)
                    except ConstructionError:
                        continue
                    key = (printed, s.mirrored_second_condition())
                    tally.setdefault(key, set()).add(_escapes(lay))
    assert tally[True, True] == {False} and tally[True, False] == {False}
    assert tally[False, True] == {True} and tally[False, False] == {True}
