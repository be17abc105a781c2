import itertools

from hypothesis import given, strategies as st

from conftest import graphs
from drawn import TWO_TRIANGLES_SUBCOLORABLE
from graphpart import SearchStats, brute_subcoloring, build_graph, recognize_subcoloring_total, solve_twosat, verify_certificate
from graphpart.total import TotalConstraint, apply_total_rules, build_twosat, materialize

K3 = build_graph(3, [(0, 1), (1, 2), (0, 2)])
C4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
C5 = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


def opened(graph, clusters):
    c = TotalConstraint(graph)
    for side, u in clusters:
        c.open(u, side)
    return c


def test_cluster_budget_exceeded():
    c = opened(build_graph(3, []), [("A", 0), ("B", 1)])
    outcome = apply_total_rules(c, 1)
    assert (outcome.kind, outcome.rule) == ("rejected", "too_many_clusters")


def test_forced_into_whole_b_cluster():
    g = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    c = opened(g, [("A", 1), ("A", 2), ("B", 3)])
    outcome = apply_total_rules(c, 5)
    assert (outcome.kind, outcome.rule) == ("reduced", "force_side")
    child = outcome.constraints[0]
    assert 0 not in child.remainder and child.label[0] == child.label[3]


def test_isolated_remainder_vertex_opens_either_side():
    outcome = apply_total_rules(TotalConstraint(build_graph(2, [])), 3)
    assert (outcome.kind, outcome.rule, len(outcome.constraints)) == ("branch", "open_isolated", 2)
    assert [child.cluster_side for child in outcome.constraints] == [["A"], ["B"]]


def test_empty_remainder_formula():
    c = opened(build_graph(1, []), [("A", 0)])
    f = build_twosat(c)
    assert f.var_count == 0 and f.clauses == [] and solve_twosat(f) == []


def test_adjacent_pair_different_a_same_b():
    g = build_graph(5, [(0, 1), (0, 2), (1, 3), (0, 4), (1, 4)])
    f = build_twosat(opened(g, [("A", 2), ("A", 3), ("B", 4)]))
    assert f.clauses == [((0, False), (1, False))]


def test_nonadjacent_pair_same_clusters_split():
    g = build_graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    f = build_twosat(opened(g, [("A", 2), ("B", 3)]))
    assert sorted(f.clauses) == [((0, False), (1, False)), ((0, True), (1, True))]
    good = [bits for bits in itertools.product((False, True), repeat=2) if f.satisfied_by(bits)]
    assert good == [(False, True), (True, False)]
    cert = materialize(opened(g, [("A", 2), ("B", 3)]), [True, False])
    assert verify_certificate(g, cert, "subcoloring", 2, "total")


def test_examples():
    assert verify_certificate(C4, recognize_subcoloring_total(C4, 2), "subcoloring", 2, "total")
    # the two edge clusters of C5 must sit on opposite sides, leaving the fifth vertex alone
    assert verify_certificate(C5, recognize_subcoloring_total(C5, 4), "subcoloring", 4, "total")
    assert recognize_subcoloring_total(C5, 3) is None
    assert recognize_subcoloring_total(K3, 1).A == {0, 1, 2}
    assert recognize_subcoloring_total(K3, 0) is None
    assert recognize_subcoloring_total(build_graph(0, []), 0) is not None


def test_two_triangles_total():
    graph, _ = TWO_TRIANGLES_SUBCOLORABLE
    assert verify_certificate(graph, recognize_subcoloring_total(graph, 4), "subcoloring", 4, "total")
    assert recognize_subcoloring_total(graph, 3) is None


@given(graphs(max_n=10), st.integers(0, 6))
def test_matches_oracle(g, k):
    stats = SearchStats()
    found = recognize_subcoloring_total(g, k, stats)
    assert (found is not None) == (brute_subcoloring(g, k, "total") is not None)
    if found is not None:
        assert verify_certificate(g, found, "subcoloring", k, "total")
    assert stats.path_max["dummy_rounds"] <= 1
