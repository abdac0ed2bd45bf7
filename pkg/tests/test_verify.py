import pytest

from hyperdelta import (
    CapExceeded,
    EnumerationQuery,
    NotAdmissibleError,
    ThetaSpec,
    are_isomorphic,
    build_graph,
    complete,
    empirical_extremal,
    q,
    sweep,
    theorem_suite,
    theta,
)
from hyperdelta.verify import CONSISTENT, INVARIANTS, admissible_triplets, check_graph, class_table, csv_row


def test_vertex_report_example():
    rep = empirical_extremal("vertex", 3, 4, 4)
    assert rep.verdict == CONSISTENT and rep.empirical_max == q(1)
    assert "consistent" in rep.summary()


def test_minimum_matches_closed_form():
    rep = empirical_extremal("vertex", 4, 5, 6)
    assert rep.empirical_min == q("5/4") and rep.consistent


def test_single_member_edge_class():
    rep = empirical_extremal("edge", 3, 5, 6)
    assert rep.class_size == 1 and rep.empirical_min == rep.empirical_max == q("5/4")
    members = [x.graph for x in class_table("edge", 6) if (x.girth, x.circumference) == (3, 5)]
    assert are_isomorphic(members[0], theta(ThetaSpec(1, 2, 3)))


def test_report_errors():
    with pytest.raises(NotAdmissibleError):
        empirical_extremal("vertex", 5, 9, 7)
    with pytest.raises(CapExceeded):
        empirical_extremal("vertex", 3, 3, 8)


def test_small_sweeps_are_consistent():
    reports = sweep("vertex", 5) + sweep("edge", 6)
    assert reports and all(r.consistent for r in reports)
    assert [r.triplet.count for r in sweep("vertex", 5)] == sorted(r.triplet.count for r in sweep("vertex", 5))


def test_admissible_triplet_listing():
    assert admissible_triplets("vertex", 4) == [(3, 3, 3), (3, 3, 4), (3, 4, 4), (4, 4, 4)]
    assert (3, 6, 6) not in admissible_triplets("edge", 6)


def test_csv_row_shape():
    row = csv_row(empirical_extremal("vertex", 5, 5, 5))
    assert row == ("vertex", "5", "5", "5", "5/4", "5/4", "5/4", "5/4", "consistent")


def test_invariant_suite_small():
    rep = theorem_suite(EnumerationQuery(max_vertices=5))
    assert rep.graphs_checked == 1 + 1 + 2 + 6 + 21
    assert rep.ok and set(rep.counts()) == set(INVARIANTS)


def test_named_graphs_pass_every_invariant():
    assert check_graph(complete(4)) == []
    assert check_graph(theta(ThetaSpec(1, 2, 3))) == []
    assert check_graph(build_graph(1, [])) == []


def test_suite_needs_input():
    with pytest.raises(ValueError):
        theorem_suite()
