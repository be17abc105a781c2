"""Monopolar recognition with at most ``k`` clusters on the clique side.

The inductive step starts from a valid partition of the previous prefix,
places the new vertex permanently on one side, and repairs the partition by
moving a bounded number of vertices across, each of which becomes permanent.
Only permanent vertices are stored per search node; everything else is read
from the previous partition, so one step costs time proportional to ``k``
powers times the maximum degree rather than to the graph size.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Literal, Optional

from .errors import BadCertificate, InvariantViolation
from .graph import Bipartition, Graph, cluster_decomposition, is_edgeless
from .inductive import InductiveRecognizer, PrefixGraph, recognize_inductively
from .stats import SearchStats

OutcomeKind = Literal["rejected", "reduced", "branch", "exhausted"]


@dataclass
class MonoState:
    """Monopolar partition of the current prefix, updated in place between steps.

    ``side[u]`` is ``"A"``, ``"B"`` or ``None`` for vertices not yet added;
    ``cid[u]`` names the A-side cluster of ``u``; ``clusters`` maps each cluster
    id to its vertices.
    """

    side: list
    cid: list
    clusters: dict[int, set[int]]
    next_cid: int = 0

    @classmethod
    def empty(cls, n: int) -> "MonoState":
        return cls([None] * n, [-1] * n, {})

    def to_bipartition(self) -> Bipartition:
        a_clusters = sorted((frozenset(c) for c in self.clusters.values()), key=min)
        b_side = [u for u, s in enumerate(self.side) if s == "B"]
        return Bipartition.from_clusters(a_clusters, [[u] for u in b_side])


class MonoFrame:
    """Read-only view of the starting partition ``(A', B')`` for one step."""

    __slots__ = ("graph", "v", "k", "side", "cid", "clusters", "singletons", "accepted_leaf")

    def __init__(self, graph, v: int, k: int, side, cid, clusters: dict[int, set[int]]):
        self.graph = graph
        self.v = v
        self.k = k
        self.side = side
        self.cid = cid
        self.clusters = clusters
        self.singletons = sorted(next(iter(c)) for c in clusters.values() if len(c) == 1)
        self.accepted_leaf: Optional[tuple["MonoConstraint", "MonoLeaf"]] = None


class MonoConstraint:
    """Permanent sets layered over a frame; movable sets are whatever is left of ``A'`` and ``B'``."""

    __slots__ = ("frame", "a_perm", "b_perm")

    def __init__(self, frame: MonoFrame, a_perm: frozenset[int], b_perm: frozenset[int]):
        self.frame = frame
        self.a_perm = a_perm
        self.b_perm = b_perm

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonoConstraint):
            return NotImplemented
        return (self.a_perm, self.b_perm) == (other.a_perm, other.b_perm)

    def __hash__(self) -> int:
        return hash((self.a_perm, self.b_perm))

    def __repr__(self) -> str:
        return f"MonoConstraint(a_perm={sorted(self.a_perm)}, b_perm={sorted(self.b_perm)})"

    def movable_in_a(self, u: int) -> bool:
        return self.frame.side[u] == "A" and u not in self.a_perm and u not in self.b_perm

    def movable_in_b(self, u: int) -> bool:
        return self.frame.side[u] == "B" and u not in self.a_perm

    @property
    def a_movable(self) -> frozenset[int]:
        return frozenset(u for c in self.frame.clusters.values() for u in c if self.movable_in_a(u))

    @property
    def b_movable(self) -> frozenset[int]:
        """Computed by a full scan; meant for inspection, not for the search."""
        return frozenset(u for u in self.frame.graph.vertices() if self.movable_in_b(u))

    def with_a(self, u: int) -> "MonoConstraint":
        return MonoConstraint(self.frame, self.a_perm | {u}, self.b_perm)

    def with_b(self, u: int) -> "MonoConstraint":
        return MonoConstraint(self.frame, self.a_perm, self.b_perm | {u})


class RuleOutcome:
    __slots__ = ("kind", "constraints", "rule")

    def __init__(self, kind: OutcomeKind, constraints: tuple = (), rule: Optional[str] = None):
        self.kind = kind
        self.constraints = constraints
        self.rule = rule

    def __repr__(self) -> str:
        return f"RuleOutcome({self.kind!r}, rule={self.rule!r}, constraints={len(self.constraints)})"


_REJECTED = RuleOutcome("rejected", rule="reject")


def frame_from_sets(graph, v: int, a_prime: Iterable[int], b_prime: Iterable[int], k: int) -> MonoFrame:
    """Validate ``(A', B')`` as a monopolar partition of ``graph - v`` and wrap it."""
    a_set, b_set = set(a_prime), set(b_prime)
    others = set(graph.vertices()) - {v}
    if a_set & b_set or a_set | b_set != others:
        raise BadCertificate("A' and B' must partition the graph minus v")
    clusters, _ = cluster_decomposition(graph, a_set)
    if clusters is None or len(clusters) > k:
        raise BadCertificate("A' does not induce a cluster graph with at most k clusters")
    if not is_edgeless(graph, b_set):
        raise BadCertificate("B' is not independent")
    side = {u: ("A" if u in a_set else "B") for u in others}
    side[v] = None
    cid = {}
    table = {}
    for i, cluster in enumerate(clusters):
        table[i] = set(cluster)
        for u in cluster:
            cid[u] = i
    return MonoFrame(graph, v, k, side, cid, table)


def initial_mono_constraints(graph, v: int, a_prime, b_prime, k: Optional[int] = None) -> tuple[MonoConstraint, MonoConstraint]:
    """The two starting constraints: ``v`` permanent in A, then ``v`` permanent in B."""
    if k is None:
        k = len(cluster_decomposition(graph, a_prime)[0] or ())
    frame = frame_from_sets(graph, v, a_prime, b_prime, k)
    return _initial(frame)


def _initial(frame: MonoFrame) -> tuple[MonoConstraint, MonoConstraint]:
    v = frame.v
    return (
        MonoConstraint(frame, frozenset((v,)), frozenset()),
        MonoConstraint(frame, frozenset(), frozenset((v,))),
    )


def apply_mono_rules(c: MonoConstraint, k: int) -> RuleOutcome:
    """Apply the first applicable rule, in the order reject, pull-up, push-down, pair branch, singleton branch."""
    frame = c.frame
    graph = frame.graph
    nbrs = graph.neighbors
    a_perm, b_perm = c.a_perm, c.b_perm

    side = frame.side

    count = _small_cluster_count(graph, a_perm)
    if count is None or count > k:
        return _REJECTED
    for b in b_perm:
        if not nbrs(b).isdisjoint(b_perm):
            return _REJECTED

    # a movable B vertex next to a permanent B vertex must go to A
    pulled = [w for b in b_perm for w in nbrs(b) if side[w] == "B" and w not in a_perm]
    if pulled:
        return RuleOutcome("reduced", (c.with_a(min(pulled)),), "pull_up")

    touched = {w for x in a_perm for w in nbrs(x) if side[w] == "A" and w not in a_perm and w not in b_perm}
    for u in sorted(touched):
        if _forms_p3_with_two_permanent(graph, u, a_perm):
            return RuleOutcome("reduced", (c.with_b(u),), "push_down")

    for x in sorted(a_perm) if touched else ():
        pair = _pair_branch(c, x)
        if pair is not None:
            u, w = pair
            return RuleOutcome("branch", (c.with_b(u), c.with_b(w)), "pair_branch")

    for u in frame.singletons:
        if c.movable_in_a(u):
            return RuleOutcome("branch", (c.with_a(u), c.with_b(u)), "singleton_branch")

    return RuleOutcome("exhausted")


def _small_cluster_count(graph, vertices: frozenset[int]) -> Optional[int]:
    """Clusters of ``graph[vertices]`` by pairwise tests, or ``None`` if it has an induced P3."""
    if len(vertices) < 3:
        if len(vertices) < 2:
            return len(vertices)
        u, w = vertices
        return 1 if graph.adjacent(u, w) else 2
    nbrs = graph.neighbors
    for u in vertices:
        if not nbrs(u).isdisjoint(vertices):
            break
    else:
        return len(vertices)
    left = sorted(vertices)
    count = 0
    while left:
        head = left[0]
        mates = [u for u in left[1:] if graph.adjacent(head, u)]
        rest = [u for u in left[1:] if not graph.adjacent(head, u)]
        for i, u in enumerate(mates):
            if any(graph.adjacent(u, w) for w in rest) or not all(graph.adjacent(u, w) for w in mates[i + 1:]):
                return None
        count += 1
        left = rest
    return count


def _forms_p3_with_two_permanent(graph, u: int, a_perm: frozenset[int]) -> bool:
    # the permanent set is small (O(k)), so test against it rather than scan u's neighborhood
    mine = [p for p in a_perm if graph.adjacent(u, p)]
    for i, p in enumerate(mine):
        for q in mine[i + 1:]:
            if not graph.adjacent(p, q):
                return True
    return any(q not in mine and graph.adjacent(p, q) for p in mine for q in a_perm)


def _pair_branch(c: MonoConstraint, x: int) -> Optional[tuple[int, int]]:
    """Least pair of movable A vertices forming an induced P3 with permanent ``x``."""
    frame = c.frame
    near = {w for w in frame.graph.neighbors(x) if c.movable_in_a(w)}
    if not near:
        return None
    by_cluster: dict[int, list[int]] = {}
    for w in near:
        by_cluster.setdefault(frame.cid[w], []).append(w)
    far_by_cluster = {
        cid: [w for w in frame.clusters[cid] if w not in near and c.movable_in_a(w)] for cid in by_cluster
    }
    if len(by_cluster) == 1 and not next(iter(far_by_cluster.values())):
        return None
    candidates = near.union(*far_by_cluster.values())
    a = min(candidates)
    own = frame.cid[a]
    if a in near:
        partners = [w for w in near if frame.cid[w] != own] + far_by_cluster[own]
    else:
        partners = by_cluster[own]
    return a, min(partners)


@dataclass
class MonoLeaf:
    """The partition read off an exhausted constraint, as changes to the frame."""

    count: int
    to_b: list[int]
    to_a: list[int]
    join: dict[int, object]


def evaluate_leaf(c: MonoConstraint) -> MonoLeaf:
    """Count the clusters of the final A side and record how to apply the result.

    Only vertices entering A from outside ``A'`` need looking at: adjacent
    newcomers share a cluster, and a group of them either attaches to the one
    surviving cluster of ``A'`` it touches or forms a new cluster.
    """
    frame = c.frame
    side, cid, nbrs = frame.side, frame.cid, frame.graph.neighbors
    a_perm, b_perm = c.a_perm, c.b_perm
    removed: dict[int, int] = {}
    for u in b_perm:
        if side[u] == "A":
            removed[cid[u]] = removed.get(cid[u], 0) + 1
    count = sum(1 for i, members in frame.clusters.items() if len(members) > removed.get(i, 0))
    newcomers = sorted(u for u in a_perm if side[u] != "A")
    join: dict[int, object] = {}
    for start in newcomers:
        if start in join:
            continue
        group = [start]
        join[start] = start
        targets = set()
        for u in group:
            for w in nbrs(u):
                if side[w] == "A":
                    if w not in b_perm:
                        targets.add(cid[w])
                elif w in a_perm and w not in join:
                    join[w] = start
                    group.append(w)
        if len(targets) > 1:
            raise InvariantViolation(f"exhausted constraint merges clusters {sorted(targets)}")
        if targets:
            root = ("c", targets.pop())
            for u in group:
                join[u] = root
        else:
            count += 1
    return MonoLeaf(count, list(b_perm), newcomers, join)


def search_monopolar(frame: MonoFrame, stats: Optional[SearchStats] = None) -> Optional[MonoConstraint]:
    """Depth-first search from both initial constraints; returns the first accepted constraint."""
    k = frame.k
    stats = stats if stats is not None else SearchStats()
    stats.steps += 1
    stack = [(c, 1, 0, 0) for c in reversed(_initial(frame))]
    stats.initial_constraints_max = max(stats.initial_constraints_max, 2)
    tree_leaves = 0
    try:
        while stack:
            c, depth, ups, downs = stack.pop()
            stats.nodes += 1
            stats.note_depth(depth, k + 2)
            while True:
                outcome = apply_mono_rules(c, k)
                kind = outcome.kind
                if kind == "reduced":
                    stats.rule_counts[outcome.rule] += 1
                    if outcome.rule == "pull_up":
                        ups += 1
                        stats.note_path("pull_up", ups, k + 1)
                    else:
                        downs += 1
                        stats.note_path("push_down_or_branch", downs, k + 1)
                    c = outcome.constraints[0]
                    continue
                break
            if kind == "branch":
                stats.rule_counts[outcome.rule] += 1
                downs += 1
                stats.note_path("push_down_or_branch", downs, k + 1)
                stats.note_width(outcome.rule, len(outcome.constraints), 2)
                for child in reversed(outcome.constraints):
                    stack.append((child, depth + 1, ups, downs))
                continue
            stats.leaves += 1
            tree_leaves += 1
            if kind == "rejected":
                stats.rule_counts["reject"] += 1
                continue
            stats.exhausted_leaves += 1
            leaf = evaluate_leaf(c)
            if leaf.count <= k:
                frame.accepted_leaf = (c, leaf)
                return c
        return None
    finally:
        stats.max_leaves_per_tree = max(stats.max_leaves_per_tree, tree_leaves)


def apply_leaf(state: MonoState, c: MonoConstraint) -> None:
    """Write the partition of an accepted constraint into ``state``."""
    cached = c.frame.accepted_leaf
    leaf = cached[1] if cached is not None and cached[0] is c else evaluate_leaf(c)
    side, cid, clusters = state.side, state.cid, state.clusters
    for u in leaf.to_b:
        if side[u] == "A":
            members = clusters[cid[u]]
            members.discard(u)
            if not members:
                del clusters[cid[u]]
        side[u] = "B"
        cid[u] = -1
    fresh: dict[object, int] = {}
    for u in sorted(leaf.to_a):
        root = leaf.join[u]
        if isinstance(root, tuple):
            target = root[1]
        else:
            if root not in fresh:
                fresh[root] = state.next_cid
                clusters[state.next_cid] = set()
                state.next_cid += 1
            target = fresh[root]
        side[u] = "A"
        cid[u] = target
        clusters[target].add(u)


def inductive_monopolar_step(graph, v: int, a_prime, b_prime, k: int, stats: Optional[SearchStats] = None) -> Optional[Bipartition]:
    """One inductive step on explicit sets ``A'`` and ``B'`` of ``graph - v``.

    Raises:
        BadCertificate: if ``(A', B')`` is not a monopolar partition of
            ``graph - v`` with at most ``k`` clusters.
    """
    frame = frame_from_sets(graph, v, a_prime, b_prime, k)
    accepted = search_monopolar(frame, stats)
    if accepted is None:
        return None
    side = dict(frame.side)
    cid = dict(frame.cid)
    cid[v] = -1
    clusters = {i: set(members) for i, members in frame.clusters.items()}
    state = MonoState(side, cid, clusters, max(clusters, default=-1) + 1)
    apply_leaf(state, accepted)
    a_clusters = sorted((frozenset(m) for m in clusters.values()), key=min)
    b_side = sorted(u for u, s in side.items() if s == "B")
    return Bipartition.from_clusters(a_clusters, [[u] for u in b_side])


def monopolar_recognizer(stats: Optional[SearchStats] = None) -> InductiveRecognizer:
    """Step function over an in-place :class:`MonoState` certificate."""
    if stats is None:
        stats = SearchStats()

    def step(prefix: PrefixGraph, v: int, state: MonoState, k: int) -> Optional[MonoState]:
        frame = MonoFrame(prefix, v, k, state.side, state.cid, state.clusters)
        accepted = search_monopolar(frame, stats)
        if accepted is None:
            return None
        apply_leaf(state, accepted)
        return state

    return InductiveRecognizer(
        step=step,
        initial=lambda graph: MonoState.empty(graph.n),
        finish=lambda graph, state: state.to_bipartition(),
    )


def recognize_monopolar(
    graph: Graph, k: int, stats: Optional[SearchStats] = None, order_mode: str = "degree_sorted"
) -> Optional[Bipartition]:
    """Monopolar partition with at most ``k`` clusters on the A side, or ``None``."""
    if k < 0:
        return None
    return recognize_inductively(graph, monopolar_recognizer(stats), k, order_mode)
