import pytest
from hypothesis import given

from conftest import graphs
from graphpart import Bipartition, build_graph
from graphpart.errors import InvariantViolation
from graphpart.graph import degree_sorted_order
from graphpart.inductive import DriverTrace, InductiveRecognizer, PrefixGraph, recognize_inductively
from graphpart.monopolar import monopolar_recognizer

K3 = build_graph(3, [(0, 1), (1, 2), (0, 2)])
C4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def test_empty_graph_accepts_with_empty_certificate():
    never = InductiveRecognizer(step=lambda *args: None)
    assert recognize_inductively(build_graph(0, []), never, 1) == Bipartition.empty()


def test_clique_accepted_degree_sorted():
    assert recognize_inductively(K3, monopolar_recognizer(), 1, "degree_sorted") is not None


def test_c4_fails_by_last_vertex():
    trace = DriverTrace()
    assert recognize_inductively(C4, monopolar_recognizer(), 1, "input", trace=trace) is None
    assert trace.failed_at is not None and trace.failed_at <= 3


def test_step_sees_prefix_only():
    seen = []

    def step(prefix, v, cert, k):
        seen.append((v, sorted(prefix.vertices())))
        return cert

    recognize_inductively(C4, InductiveRecognizer(step), None, "input")
    assert seen == [(0, [0]), (1, [0, 1]), (2, [0, 1, 2]), (3, [0, 1, 2, 3])]


def test_restricted_vertex_run():
    order = []
    recognize_inductively(C4, InductiveRecognizer(lambda p, v, c, k: order.append(v) or c), None, "input", [3, 1])
    assert order == [1, 3]


def test_unknown_order_mode():
    with pytest.raises(ValueError):
        recognize_inductively(K3, monopolar_recognizer(), 1, "random")


@given(graphs(max_n=9))
def test_prefix_degrees_bounded_in_degree_order(g):
    prefix = PrefixGraph(g)
    for v in degree_sorted_order(g):
        prefix.add_vertex(v)
        assert prefix.max_degree <= g.degree(v)
        for u in prefix.vertices():
            assert prefix.neighbors(u) == {w for w in g.neighbors(u) if w in set(prefix.vertices())}


def test_driver_degree_guard_fires_on_bad_degree_table():
    class Lying:
        def __init__(self, g):
            self._g = g
            self.n = g.n
            self.degrees = [0] * g.n

        def __getattr__(self, name):
            return getattr(self._g, name)

    with pytest.raises(InvariantViolation):
        recognize_inductively(Lying(K3), InductiveRecognizer(lambda p, v, c, k: c), None, "degree_sorted")
