"""Vertex-by-vertex recognition of hereditary graph classes.

The driver fixes a vertex order, then grows the induced prefix graph one
vertex at a time, asking a pluggable step function to turn a certificate for
the previous prefix into one for the current prefix. Because the class is
hereditary, the first failing prefix settles the answer.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any, Generic, Literal, Optional, TypeVar

from .errors import InvariantViolation
from .graph import Bipartition, Graph, degree_sorted_order

Cert = TypeVar("Cert")
OrderMode = Literal["input", "degree_sorted"]


class PrefixGraph:
    """Induced subgraph on the vertices added so far, keeping the host's vertex ids.

    Adding a vertex costs its degree in the host graph, so growing the whole
    graph costs O(n + m). ``neighbors`` returns the live internal set; callers
    must not mutate it.
    """

    __slots__ = ("host", "_present", "_nbrs", "_order", "max_degree")

    def __init__(self, host: Graph):
        self.host = host
        self._present = [False] * host.n
        self._nbrs: list[Optional[set[int]]] = [None] * host.n
        self._order: list[int] = []
        self.max_degree = 0

    def add_vertex(self, v: int) -> None:
        if self._present[v]:
            raise ValueError(f"vertex {v} already present")
        mine = set()
        present = self._present
        nbrs = self._nbrs
        top = self.max_degree
        for w in self.host.adjacency[v]:
            if present[w]:
                mine.add(w)
                other = nbrs[w]
                other.add(v)
                if len(other) > top:
                    top = len(other)
        present[v] = True
        nbrs[v] = mine
        self._order.append(v)
        self.max_degree = max(top, len(mine))

    @property
    def n(self) -> int:
        return len(self._order)

    def vertices(self) -> list[int]:
        return self._order

    def __contains__(self, u: object) -> bool:
        return isinstance(u, int) and 0 <= u < len(self._present) and self._present[u]

    def neighbors(self, u: int) -> set[int]:
        return self._nbrs[u]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._nbrs[u]

    def degree(self, u: int) -> int:
        return len(self._nbrs[u])

    def edges(self):
        for u in self._order:
            for w in self._nbrs[u]:
                if u < w:
                    yield u, w


@dataclass
class InductiveRecognizer(Generic[Cert]):
    """A step function plus the certificate plumbing around it.

    ``step(prefix, v, certificate, k)`` receives the prefix graph that already
    contains ``v`` and a certificate for the prefix without ``v``. It returns a
    certificate for the prefix with ``v`` or ``None``. ``initial`` builds the
    certificate of the empty graph and ``finish`` converts the last
    certificate into the value handed back to the caller.
    """

    step: Callable[[PrefixGraph, int, Cert, Any], Optional[Cert]]
    initial: Callable[[Graph], Cert] = field(default=lambda graph: Bipartition.empty())
    finish: Callable[[Graph, Cert], Any] = field(default=lambda graph, cert: cert)


@dataclass
class DriverTrace:
    """What the driver saw: the order used and where it stopped."""

    order: list[int] = field(default_factory=list)
    failed_at: Optional[int] = None
    steps: int = 0


def recognize_inductively(
    graph: Graph,
    recognizer: InductiveRecognizer,
    k: Any,
    order_mode: OrderMode = "input",
    vertices: Optional[Iterable[int]] = None,
    trace: Optional[DriverTrace] = None,
):
    """Run ``recognizer`` over growing prefixes of ``graph``.

    Args:
        vertices: restrict the run to these vertices (their induced subgraph);
            defaults to all of ``graph``.
        trace: optional record of the order and the index of the failing step.

    Returns:
        ``recognizer.finish`` applied to the last certificate, or ``None`` at
        the first prefix the step rejects.
    """
    order = _vertex_order(graph, order_mode, vertices)
    if trace is not None:
        trace.order = list(order)
    prefix = PrefixGraph(graph)
    certificate = recognizer.initial(graph)
    check_degrees = order_mode == "degree_sorted"
    for i, v in enumerate(order):
        prefix.add_vertex(v)
        if check_degrees and prefix.max_degree > graph.degrees[v]:
            raise InvariantViolation(
                f"prefix max degree {prefix.max_degree} exceeds degree {graph.degrees[v]} of vertex {v}"
            )
        certificate = recognizer.step(prefix, v, certificate, k)
        if trace is not None:
            trace.steps = i + 1
        if certificate is None:
            if trace is not None:
                trace.failed_at = i
            return None
    return recognizer.finish(graph, certificate)


def _vertex_order(graph: Graph, order_mode: str, vertices: Optional[Iterable[int]]) -> Sequence[int]:
    if order_mode not in ("input", "degree_sorted"):
        raise ValueError(f"unknown order mode {order_mode!r}")
    if vertices is None:
        return degree_sorted_order(graph) if order_mode == "degree_sorted" else list(range(graph.n))
    chosen = set(vertices)
    if order_mode == "input":
        return sorted(chosen)
    return [u for u in degree_sorted_order(graph) if u in chosen]
