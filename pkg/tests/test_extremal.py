from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from hyperdelta import (
    EDGE,
    VERTEX,
    NotAdmissibleError,
    Triplet,
    ValueInterval,
    a_bounds,
    alpha_bounds,
    b_value,
    beta_value,
    boundary_triple,
    e_admissible,
    extremal_interval,
    q,
    refine,
    v_admissible,
)
from hyperdelta.extremal import admissible

triplets = st.tuples(st.integers(3, 14), st.integers(0, 12), st.integers(0, 30))


def test_admissibility_examples():
    assert admissible(Triplet(VERTEX, 3, 3, 3))
    assert admissible(Triplet(VERTEX, 4, 7, 8))
    assert not v_admissible(5, 9, 7)
    assert not e_admissible(5, 9, 9) and e_admissible(5, 9, 10)
    assert not e_admissible(3, 6, 6)  # a longer cycle plus a shorter one needs a further edge
    assert not v_admissible(3, 2, 5)


def test_boundary_triples():
    def abc(bt):
        return bt.a1, bt.a2, bt.a3

    assert abc(boundary_triple(Triplet(VERTEX, 5, 8, 8))) == (1, 4, 4)
    assert abc(boundary_triple(Triplet(EDGE, 5, 9, 10))) == (1, 4, 5)
    bt = boundary_triple(Triplet(VERTEX, 3, 5, 6))
    assert abc(bt) == (2, 1, 4) and not bt.a1_le_a2


@pytest.mark.parametrize(
    "fn, args, want",
    [
        (b_value, (5, 8, 10), "2"),
        (b_value, (5, 8, 8), "7/4"),
        (b_value, (4, 4, 9), "1"),
        (beta_value, (3, 4, 6), "1"),
        (beta_value, (5, 9, 10), "2"),
        (beta_value, (6, 6, 11), "3/2"),
    ],
)
def test_maximum_formulas(fn, args, want):
    assert fn(*args) == q(Fraction(want))


@pytest.mark.parametrize(
    "fn, args, lo, hi",
    [
        (a_bounds, (3, 7, 9), "1", "1"),
        (a_bounds, (4, 9, 9), "5/4", "5/4"),
        (a_bounds, (4, 9, 12), "5/4", "5/4"),
        (a_bounds, (8, 12, 15), "2", "2"),
        (a_bounds, (5, 8, 8), "5/4", "7/4"),
        (alpha_bounds, (5, 5, 12), "5/4", "5/4"),
        (alpha_bounds, (5, 9, 10), "2", "2"),
        (alpha_bounds, (3, 6, 15), "1", "1"),
        (alpha_bounds, (3, 10, 12), "1", "9/4"),
    ],
)
def test_minimum_bounds(fn, args, lo, hi):
    iv = fn(*args)
    assert (iv.lower, iv.upper) == (q(Fraction(lo)), q(Fraction(hi)))
    assert iv.provenance


def test_not_admissible_raises():
    for fn in (a_bounds, b_value):
        with pytest.raises(NotAdmissibleError):
            fn(5, 9, 7)
    for fn in (alpha_bounds, beta_value):
        with pytest.raises(NotAdmissibleError):
            fn(5, 9, 9)
    with pytest.raises(ValueError):
        extremal_interval("gamma", 3, 3, 3)


@given(triplets)
def test_vertex_sandwich(t):
    g, dc, dn = t
    c, n = g + dc, g + dc + dn
    assume(v_admissible(g, c, n))
    A, B = a_bounds(g, c, n), b_value(g, c, n)
    assert q(0) < A.lower and A.lower.quarters >= g and A.upper <= B and B.quarters <= c
    if n > c:
        assert b_value(g, c, n - 1) <= B if v_admissible(g, c, n - 1) else True


@given(triplets)
def test_edge_sandwich(t):
    g, dc, dm = t
    c, m = g + dc, g + dc + dm
    assume(e_admissible(g, c, m))
    al, be = alpha_bounds(g, c, m), beta_value(g, c, m)
    assert al.lower.quarters >= g and al.upper <= be and be.quarters <= c
    if e_admissible(g, c, m + 1):
        assert beta_value(g, c, m + 1) >= be


def test_refine_subdivision_closes_interval():
    small = Triplet(VERTEX, 4, 6, 6)
    big = Triplet(VERTEX, 8, 12, 15)
    out = refine([
        ("A", small, ValueInterval.exact_value(q(1), "known", upper_witness_edges=9)),
        ("A", big, ValueInterval(q(2), q(3), ("girth",))),
    ])
    assert out["A", big].exact and out["A", big].lower == q(2)


def test_refine_monotonicity_and_scaling():
    out = refine([
        ("B", Triplet(VERTEX, 3, 5, 6), ValueInterval.exact_value(q("5/4"))),
        ("B", Triplet(VERTEX, 3, 5, 7), ValueInterval(q("3/4"), q("5/4"))),
    ])
    assert out["B", Triplet(VERTEX, 3, 5, 7)].lower == q("5/4")
    out = refine([
        ("beta", Triplet(EDGE, 5, 9, 10), ValueInterval.exact_value(q(2))),
        ("beta", Triplet(EDGE, 10, 18, 20), ValueInterval(q("5/2"), q("9/2"))),
    ])
    assert out["beta", Triplet(EDGE, 10, 18, 20)].lower == q(4)


def test_refine_rejects_inconsistent_tables():
    t = Triplet(VERTEX, 5, 8, 8)
    with pytest.raises(ValueError):
        refine([("A", t, ValueInterval.exact_value(q(2))), ("B", t, ValueInterval.exact_value(q(1)))])
    with pytest.raises(ValueError):
        refine([("alpha", t, ValueInterval.exact_value(q(1)))])


def test_refine_only_shrinks():
    entries = []
    for g, c, n in [(5, 8, 8), (5, 8, 9), (5, 8, 10), (4, 6, 6), (8, 12, 15)]:
        t = Triplet(VERTEX, g, c, n)
        entries.append(("A", t, a_bounds(g, c, n)))
        entries.append(("B", t, ValueInterval.exact_value(b_value(g, c, n))))
    out = refine(entries)
    for name, t, iv in entries:
        assert out[name, t].is_subset_of(iv)
