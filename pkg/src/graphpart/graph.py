"""Graph representation, cluster-graph machinery and certificate checking.

Every recognizer in the package reads graphs through the small interface
implemented by :class:`Graph` (and by the growing prefix graph of the
inductive driver): ``vertices()``, ``neighbors(u)``, ``adjacent(u, v)`` and
``degree(u)``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Literal, Optional

from .errors import CoverageError, InvalidEdge, OutOfRange

Side = Literal["A", "B"]
Problem = Literal["monopolar", "subcoloring"]
BoundMode = Literal["a_side", "total"]


class Graph:
    """Immutable simple undirected graph on vertices ``0 .. n-1``."""

    __slots__ = ("n", "m", "adjacency", "degrees", "max_degree", "_nbrs", "_masks")

    def __init__(self, adjacency: Sequence[Sequence[int]]):
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adjacency)
        self.n = len(self.adjacency)
        self.degrees: tuple[int, ...] = tuple(len(a) for a in self.adjacency)
        self.m = sum(self.degrees) // 2
        self.max_degree = max(self.degrees, default=0)
        self._nbrs = tuple(frozenset(a) for a in self.adjacency)
        self._masks: Optional[tuple[int, ...]] = None

    def vertices(self) -> range:
        return range(self.n)

    def __contains__(self, u: object) -> bool:
        return isinstance(u, int) and 0 <= u < self.n

    def neighbors(self, u: int) -> frozenset[int]:
        return self._nbrs[u]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._nbrs[u]

    def degree(self, u: int) -> int:
        return self.degrees[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.adjacency):
            for v in row:
                if u < v:
                    yield u, v

    @property
    def adj_masks(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitmasks (bit ``v`` set iff ``v`` is a neighbor)."""
        if self._masks is None:
            self._masks = tuple(sum(1 << v for v in row) for row in self.adjacency)
        return self._masks

    def induced(self, subset: Iterable[int]) -> "Graph":
        return induced_subgraph(self, subset)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash(self.adjacency)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a :class:`Graph`, collapsing duplicate edges.

    Raises:
        InvalidEdge: for a self-loop.
        OutOfRange: for a vertex id outside ``0 .. n-1``.
    """
    if n < 0:
        raise OutOfRange(f"negative vertex count {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise InvalidEdge(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(adj)


def induced_subgraph(graph, subset: Iterable[int]) -> Graph:
    """Return ``graph[subset]`` relabeled to ``0 .. |subset|-1`` in increasing id order."""
    order = sorted(set(subset))
    index = {u: i for i, u in enumerate(order)}
    return Graph([[index[w] for w in graph.neighbors(u) if w in index] for u in order])


@dataclass(frozen=True)
class PatternGraph:
    """A small graph (at most 8 vertices) stored as adjacency-row bitmasks."""

    order: int
    rows: tuple[int, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not 0 <= self.order <= 8 or len(self.rows) != self.order:
            raise ValueError("pattern graphs have at most 8 vertices")
        for i, row in enumerate(self.rows):
            if row >> i & 1:
                raise InvalidEdge(f"pattern self-loop at {i}")
            for j in range(self.order):
                if (row >> j & 1) != (self.rows[j] >> i & 1):
                    raise ValueError("pattern adjacency is not symmetric")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]], name: str = "") -> "PatternGraph":
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise InvalidEdge(f"pattern self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows), name)

    @classmethod
    def complete(cls, r: int) -> "PatternGraph":
        return cls.from_edges(r, [(i, j) for i in range(r) for j in range(i + 1, r)], f"K{r}")

    @classmethod
    def edgeless(cls, r: int) -> "PatternGraph":
        return cls(r, (0,) * r, f"co-K{r}")

    @classmethod
    def path(cls, r: int) -> "PatternGraph":
        return cls.from_edges(r, [(i, i + 1) for i in range(r - 1)], f"P{r}")

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def complement(self) -> "PatternGraph":
        full = (1 << self.order) - 1
        rows = tuple(full & ~row & ~(1 << i) for i, row in enumerate(self.rows))
        return PatternGraph(self.order, rows, f"co-{self.name}" if self.name else "")

    def to_graph(self) -> Graph:
        return Graph([[j for j in range(self.order) if row >> j & 1] for row in self.rows])


P3 = PatternGraph.path(3)


@dataclass(frozen=True)
class Bipartition:
    """A two-sided vertex partition with a cluster labeling of each side."""

    side_of: Mapping[int, Side]
    a_clusters: tuple[frozenset[int], ...]
    b_clusters: tuple[frozenset[int], ...]

    @classmethod
    def from_clusters(cls, a_clusters: Iterable[Iterable[int]], b_clusters: Iterable[Iterable[int]]) -> "Bipartition":
        """Assemble a certificate from cluster lists; empty clusters are dropped."""
        side_of: dict[int, Side] = {}
        a = tuple(frozenset(c) for c in a_clusters if c)
        b = tuple(frozenset(c) for c in b_clusters if c)
        for label, clusters in (("A", a), ("B", b)):
            for cluster in clusters:
                for u in cluster:
                    if u in side_of:
                        raise CoverageError(f"vertex {u} assigned twice")
                    side_of[u] = label
        return cls(dict(sorted(side_of.items())), a, b)

    @classmethod
    def from_sides(cls, graph, a_side: Iterable[int], b_side: Iterable[int]) -> "Bipartition":
        """Label each side by its connected components (the clusters when the side is P3-free)."""
        return cls.from_clusters(connected_components(graph, a_side), connected_components(graph, b_side))

    @classmethod
    def empty(cls) -> "Bipartition":
        return cls({}, (), ())

    @property
    def A(self) -> frozenset[int]:
        return frozenset().union(*self.a_clusters)

    @property
    def B(self) -> frozenset[int]:
        return frozenset().union(*self.b_clusters)

    def restricted(self, keep: Iterable[int]) -> "Bipartition":
        keep = set(keep)
        return Bipartition.from_clusters(
            [c & keep for c in self.a_clusters], [c & keep for c in self.b_clusters]
        )

    def canonical(self) -> "Bipartition":
        """Same partition with clusters ordered by their smallest vertex."""
        return Bipartition.from_clusters(
            sorted(self.a_clusters, key=min), sorted(self.b_clusters, key=min)
        )

    def cluster_count(self, bound_mode: BoundMode = "a_side") -> int:
        if bound_mode == "a_side":
            return len(self.a_clusters)
        return len(self.a_clusters) + len(self.b_clusters)


def connected_components(graph, subset: Iterable[int]) -> list[frozenset[int]]:
    """Components of ``graph[subset]``, ordered by smallest vertex."""
    inside = set(subset)
    seen: set[int] = set()
    components = []
    for s in sorted(inside):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in graph.neighbors(u):
                if w in inside and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        components.append(frozenset(comp))
    return components


def cluster_decomposition(
    graph, subset: Iterable[int]
) -> tuple[Optional[list[frozenset[int]]], Optional[tuple[int, int, int]]]:
    """Split ``graph[subset]`` into clusters.

    Returns ``(clusters, None)`` when the induced subgraph is a cluster graph and
    ``(None, (mid, a, b))`` otherwise, where ``a - mid - b`` is an induced P3 with
    ``a < b``. The witness is the one with the smallest midpoint, then the
    smallest endpoints.
    """
    inside = set(subset)
    components = connected_components(graph, inside)
    bad: list[int] = []
    for comp in components:
        size = len(comp) - 1
        for u in comp:
            if sum(1 for w in graph.neighbors(u) if w in inside) != size:
                bad.extend(comp)
                break
    if not bad:
        return components, None
    for mid in sorted(bad):
        nbrs = sorted(w for w in graph.neighbors(mid) if w in inside)
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                if not graph.adjacent(a, b):
                    return None, (mid, a, b)
    raise AssertionError("non-clique component without an induced P3")


def is_cluster_graph(graph, subset: Iterable[int], max_clusters: Optional[int] = None) -> bool:
    clusters, _ = cluster_decomposition(graph, subset)
    return clusters is not None and (max_clusters is None or len(clusters) <= max_clusters)


def is_edgeless(graph, subset: Iterable[int]) -> bool:
    inside = set(subset)
    return not any(w in inside for u in inside for w in graph.neighbors(u))


def verify_certificate(
    graph: Graph,
    partition: Bipartition,
    problem: Problem,
    k: Optional[int],
    bound_mode: BoundMode = "a_side",
) -> bool:
    """Check a certificate in O(n + m).

    ``problem`` selects the structure required of the B side (edgeless for
    ``"monopolar"``, cluster graph for ``"subcoloring"``). ``k`` bounds the
    nonempty clusters of the A side (``bound_mode="a_side"``) or of both sides
    together (``"total"``); ``None`` means unbounded.
    """
    if problem not in ("monopolar", "subcoloring") or bound_mode not in ("a_side", "total"):
        return False
    n = graph.n
    if len(partition.side_of) != n or any(u not in partition.side_of for u in range(n)):
        return False
    cluster_id = [-1] * n
    cluster_size: list[int] = []
    for label, clusters in (("A", partition.a_clusters), ("B", partition.b_clusters)):
        for cluster in clusters:
            cid = len(cluster_size)
            cluster_size.append(len(cluster))
            for u in cluster:
                if not 0 <= u < n or cluster_id[u] != -1 or partition.side_of[u] != label:
                    return False
                cluster_id[u] = cid
    if -1 in cluster_id:
        return False
    side = partition.side_of
    for u in range(n):
        inner = 0
        for w in graph.neighbors(u):
            if side[w] != side[u]:
                continue
            if cluster_id[w] != cluster_id[u]:
                return False
            if problem == "monopolar" and side[u] == "B":
                return False
            inner += 1
        if inner != cluster_size[cluster_id[u]] - 1:
            return False
    if k is None:
        return True
    a_count = sum(1 for c in partition.a_clusters if c)
    b_count = sum(1 for c in partition.b_clusters if c)
    return (a_count if bound_mode == "a_side" else a_count + b_count) <= k


def find_induced_occurrence(
    graph, pattern: PatternGraph, restrict: Optional[Iterable[int]] = None
) -> Optional[tuple[int, ...]]:
    """Find distinct vertices ``t`` with ``adjacent(t[i], t[j]) == pattern.adjacent(i, j)``.

    The search extends partial tuples in pattern order with candidates in
    increasing id, so the returned tuple is the lexicographically least one.
    """
    pool = sorted(graph.vertices() if restrict is None else set(restrict))
    inside = set(pool)
    h = pattern.order
    if h == 0:
        return ()
    # anchor[i]: an earlier pattern vertex adjacent to i, used to narrow candidates
    anchor = [next((j for j in range(i) if pattern.adjacent(i, j)), -1) for i in range(h)]
    chosen: list[int] = []

    def candidates(i: int) -> Iterable[int]:
        if anchor[i] < 0:
            return pool
        return sorted(w for w in graph.neighbors(chosen[anchor[i]]) if w in inside)

    def extend(i: int) -> bool:
        if i == h:
            return True
        for u in candidates(i):
            if u in chosen:
                continue
            if all(graph.adjacent(u, chosen[j]) == pattern.adjacent(i, j) for j in range(i)):
                chosen.append(u)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if extend(0) else None


def degree_sorted_order(graph) -> list[int]:
    """Vertices by nondecreasing degree, ties by id, via bucket sort."""
    vertices = list(graph.vertices())
    if not vertices:
        return []
    degrees = {u: graph.degree(u) for u in vertices}
    buckets: list[list[int]] = [[] for _ in range(max(degrees.values()) + 1)]
    for u in vertices:
        buckets[degrees[u]].append(u)
    return [u for bucket in buckets for u in bucket]
