"""2-subcoloring with at most ``k`` clusters on side A.

Both sides of a 2-subcoloring are cluster graphs. The inductive step keeps
the previous prefix's clusters as numbered groups (``k`` groups on side A,
as many as needed on side B), places the new vertex permanently into one
group, and then repairs the grouping. A vertex that must change sides is
moved exactly once and becomes permanent; groups are only ever read as the
final clusters once no rule applies.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Literal, Optional

from .errors import BadCertificate, InvariantViolation
from .graph import Bipartition, Graph, cluster_decomposition
from .inductive import InductiveRecognizer, recognize_inductively
from .stats import SearchStats

Side = Literal["A", "B"]
Placement = tuple  # (side, group index)


class GroupFrame:
    """The starting grouping for one step: clusters of ``A'`` and ``B'`` with fixed indices."""

    __slots__ = ("graph", "v", "k", "place", "a_groups", "b_groups", "fresh_b", "empty_b")

    def __init__(self, graph, v: int, k: int, a_groups: list[frozenset[int]], b_groups: list[frozenset[int]]):
        self.graph = graph
        self.v = v
        self.k = k
        self.a_groups = a_groups
        self.b_groups = b_groups
        # indices at or beyond this one have never held a vertex of B'
        self.fresh_b = len(b_groups)
        self.empty_b = [j for j, group in enumerate(b_groups) if not group]
        place: dict[int, Placement] = {}
        for i, group in enumerate(a_groups):
            for u in group:
                place[u] = ("A", i)
        for j, group in enumerate(b_groups):
            for u in group:
                place[u] = ("B", j)
        self.place = place

    def base_members(self, side: str, idx: int) -> frozenset[int]:
        groups = self.a_groups if side == "A" else self.b_groups
        return groups[idx] if idx < len(groups) else frozenset()


@dataclass(frozen=True)
class GroupConstraint:
    """Group assignment for every vertex plus the permanent sets.

    Only vertices placed away from their starting group are stored in
    ``moved``; the others keep the frame's placement.
    """

    frame: GroupFrame = field(compare=False, repr=False)
    moved: tuple[tuple[int, Placement], ...]
    a_perm: frozenset[int]
    b_perm: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "_moved", dict(self.moved))
        incoming: dict[Placement, set[int]] = {}
        for u, where in self.moved:
            incoming.setdefault(where, set()).add(u)
        object.__setattr__(self, "_incoming", incoming)
        perm_groups: dict[Placement, set[int]] = {}
        for u in self.a_perm | self.b_perm:
            perm_groups.setdefault(self.placement(u), set()).add(u)
        object.__setattr__(self, "_perm_groups", perm_groups)

    def placement(self, u: int) -> Placement:
        where = self._moved.get(u)
        return where if where is not None else self.frame.place[u]

    def is_permanent(self, u: int) -> bool:
        return u in self.a_perm or u in self.b_perm

    def members(self, side: str, idx: int) -> set[int]:
        base = {u for u in self.frame.base_members(side, idx) if u not in self._moved}
        return base | self._incoming.get((side, idx), set())

    def permanent_members(self, side: str, idx: int) -> set[int]:
        return self._perm_groups.get((side, idx), set())

    def groups_with_permanent(self) -> list[Placement]:
        return sorted(self._perm_groups)

    def moved_into(self, side: str) -> set[int]:
        return {u for u, (s, _) in self.moved if s == side}

    @property
    def a_groups(self) -> list[set[int]]:
        return [self.members("A", i) for i in range(self.frame.k)]

    @property
    def b_groups(self) -> dict[int, set[int]]:
        """Nonempty B groups by index."""
        indices = set(range(len(self.frame.b_groups))) | {j for (s, j) in self._incoming if s == "B"}
        out = {}
        for j in sorted(indices):
            members = self.members("B", j)
            if members:
                out[j] = members
        return out

    def lowest_empty_b(self) -> int:
        candidates = set(self.frame.empty_b)
        for u, _ in self.moved:
            start = self.frame.place.get(u)
            if start is not None and start[0] == "B":
                candidates.add(start[1])
        for j in sorted(candidates):
            if not self.members("B", j):
                return j
        j = self.frame.fresh_b
        while self._incoming.get(("B", j)):
            j += 1
        return j

    def moving(self, u: int, side: str, idx: int) -> "GroupConstraint":
        """Place ``u`` into group ``idx`` of ``side`` and make it permanent there."""
        moved = {w: p for w, p in self.moved if w != u}
        if self.frame.place.get(u) != (side, idx):
            moved[u] = (side, idx)
        a_perm = self.a_perm | {u} if side == "A" else self.a_perm
        b_perm = self.b_perm | {u} if side == "B" else self.b_perm
        return GroupConstraint(self.frame, tuple(sorted(moved.items())), a_perm, b_perm)

    def pinning(self, u: int) -> "GroupConstraint":
        """Make ``u`` permanent on side A without moving it."""
        return GroupConstraint(self.frame, self.moved, self.a_perm | {u}, self.b_perm)

    def to_bipartition(self) -> Bipartition:
        b = self.b_groups
        return Bipartition.from_clusters(self.a_groups, [b[j] for j in sorted(b)])


@dataclass(frozen=True)
class SubOutcome:
    kind: Literal["rejected", "reduced", "branch", "exhausted"]
    constraints: tuple = ()
    rule: Optional[str] = None


def _check_certificate(graph, v: int, a_clusters, b_clusters, k: int) -> None:
    seen: dict[int, tuple[str, int]] = {}
    for label, clusters in (("A", a_clusters), ("B", b_clusters)):
        for i, cluster in enumerate(clusters):
            for u in cluster:
                if u in seen or u == v or u not in graph:
                    raise BadCertificate(f"vertex {u} placed twice or not in the graph minus v")
                seen[u] = (label, i)
    if len(seen) != graph.n - 1:
        raise BadCertificate("certificate does not cover the graph minus v")
    if sum(1 for c in a_clusters if c) > k:
        raise BadCertificate("more than k clusters on side A")
    sizes = {}
    for where in seen.values():
        sizes[where] = sizes.get(where, 0) + 1
    for u, where in seen.items():
        inner = 0
        for w in graph.neighbors(u):
            if w == v:
                continue
            other = seen[w]
            if other[0] == where[0]:
                if other != where:
                    raise BadCertificate(f"edge {u}-{w} joins two clusters of side {where[0]}")
                inner += 1
        if inner != sizes[where] - 1:
            raise BadCertificate(f"cluster of vertex {u} is not a clique")


def make_frame(graph, v: int, a_clusters: Iterable[Iterable[int]], b_clusters: Iterable[Iterable[int]], k: int) -> GroupFrame:
    """Index the starting clusters: A clusters padded to ``k`` groups, B clusters touching ``v`` first."""
    a_list = sorted((frozenset(c) for c in a_clusters if c), key=min)
    b_list = [frozenset(c) for c in b_clusters if c]
    _check_certificate(graph, v, a_list, b_list, k)
    a_list += [frozenset()] * (k - len(a_list))
    nv = graph.neighbors(v)
    touching = sorted((c for c in b_list if not nv.isdisjoint(c)), key=min)
    rest = sorted((c for c in b_list if nv.isdisjoint(c)), key=min)
    # the empty group right after the touching ones is the fresh group of the initial placements
    return GroupFrame(graph, v, k, a_list, touching + [frozenset()] + rest)


def initial_group_constraints(graph, v: int, a_clusters, b_clusters, k: int, frame: Optional[GroupFrame] = None) -> list[GroupConstraint]:
    """Starting constraints: ``v`` into each A group, or into each B group it touches or the empty one after them.

    The B placements are dropped when ``v`` touches more than ``k + 1`` B
    clusters, since ``v`` must then lie on side A.
    """
    if frame is None:
        frame = make_frame(graph, v, a_clusters, b_clusters, k)
    nv = graph.neighbors(v)
    touching = sum(1 for g in frame.b_groups if g and not nv.isdisjoint(g))
    base = GroupConstraint(frame, (), frozenset(), frozenset())
    out = [base.moving(v, "A", i) for i in range(k)]
    if touching <= k + 1:
        out += [base.moving(v, "B", j) for j in range(touching + 1)]
    return out


def apply_sub_rules(c: GroupConstraint, k: int) -> SubOutcome:
    """Apply the first applicable rule; switching rules resolve through :func:`switch`."""
    graph = c.frame.graph
    nbrs = graph.neighbors

    for perm in (c.a_perm, c.b_perm):
        clusters, _ = cluster_decomposition(graph, perm)
        if clusters is None:
            return SubOutcome("rejected", rule="reject")
    for p in c.a_perm | c.b_perm:
        where = c.placement(p)
        for q in nbrs(p):
            if c.is_permanent(q):
                other = c.placement(q)
                if other[0] == where[0] and other != where:
                    return SubOutcome("rejected", rule="reject")
    # permanent vertices sharing a group must end in one cluster; pinning can break this
    for side, idx in c.groups_with_permanent():
        perms = c.permanent_members(side, idx)
        for p in perms:
            if len(perms - nbrs(p)) > 1:
                return SubOutcome("rejected", rule="reject")

    for u in sorted(_movable_a(c)):
        if len({c.placement(w)[1] for w in nbrs(u) if c.placement(w)[0] == "B"}) > k + 1:
            return SubOutcome("reduced", (c.pinning(u),), "pin_to_a")

    target = _first_nonedge_within(c)
    rule = "switch_nonedge"
    if target is None:
        target = _first_edge_between(c)
        rule = "switch_edge"
    if target is None:
        return SubOutcome("exhausted")
    return switch(c, target, rule)


def _movable_a(c: GroupConstraint) -> set[int]:
    return {u for group in c.frame.a_groups for u in group if c.placement(u)[0] == "A" and not c.is_permanent(u)}


def _first_nonedge_within(c: GroupConstraint) -> Optional[int]:
    graph = c.frame.graph
    best = None
    for side, idx in c.groups_with_permanent():
        perms = c.permanent_members(side, idx)
        for u in c.members(side, idx):
            if c.is_permanent(u) or (best is not None and u >= best):
                continue
            if not perms <= graph.neighbors(u):
                best = u
    return best


def _first_edge_between(c: GroupConstraint) -> Optional[int]:
    best = None
    for p in c.a_perm | c.b_perm:
        where = c.placement(p)
        for u in c.frame.graph.neighbors(p):
            if c.is_permanent(u) or (best is not None and u >= best):
                continue
            other = c.placement(u)
            if other[0] == where[0] and other != where:
                best = u
    return best


def switch(c: GroupConstraint, u: int, rule: str = "switch") -> SubOutcome:
    """Move nonpermanent ``u`` to the other side: forced next to a permanent neighbor, else branch."""
    graph = c.frame.graph
    side, _ = c.placement(u)
    other = "B" if side == "A" else "A"
    anchored = sorted(w for w in graph.neighbors(u) if c.is_permanent(w) and c.placement(w)[0] == other)
    if anchored:
        _, idx = c.placement(anchored[0])
        return SubOutcome("reduced", (c.moving(u, other, idx),), f"{rule}_forced")
    if side == "A":
        targets = sorted(
            {
                c.placement(w)[1]
                for w in graph.neighbors(u)
                if c.placement(w)[0] == "B" and not c.permanent_members("B", c.placement(w)[1])
            }
        )
        targets.append(c.lowest_empty_b())
        return SubOutcome("branch", tuple(c.moving(u, "B", j) for j in targets), "switch_to_b")
    targets = [i for i in range(c.frame.k) if not c.permanent_members("A", i)]
    if not targets:
        return SubOutcome("rejected", rule="switch_no_group")
    return SubOutcome("branch", tuple(c.moving(u, "A", i) for i in targets), "switch_to_a")


def search_subcoloring(frame: GroupFrame, stats: Optional[SearchStats] = None) -> Optional[GroupConstraint]:
    """Depth-first search over the initial constraints; the first exhausted node is the answer."""
    k = frame.k
    stats = stats if stats is not None else SearchStats()
    stats.steps += 1
    initial = initial_group_constraints(frame.graph, frame.v, None, None, k, frame=frame)
    stats.initial_constraints_max = max(stats.initial_constraints_max, len(initial))
    if len(initial) > 2 * k + 2:
        raise InvariantViolation(f"{len(initial)} initial constraints exceed 2k+2")
    perm_cap = k * (frame.graph.max_degree + 1) + 1
    stack = [(c, 1, 0, 0) for c in reversed(initial)]
    tree_leaves = 0
    try:
        while stack:
            c, depth, to_b, to_a = stack.pop()
            stats.nodes += 1
            stats.note_depth(depth)
            while True:
                outcome = apply_sub_rules(c, k)
                if outcome.kind != "reduced":
                    break
                stats.rule_counts[outcome.rule] += 1
                c = outcome.constraints[0]
            if outcome.kind == "branch":
                stats.rule_counts[outcome.rule] += 1
                width = len(outcome.constraints)
                if outcome.rule == "switch_to_b":
                    to_b += 1
                    stats.note_path("switch_to_b", to_b, k)
                    stats.note_width("switch_to_b", width, k + 2)
                else:
                    to_a += 1
                    stats.note_path("switch_to_a", to_a, k)
                    stats.note_width("switch_to_a", width, k)
                for child in reversed(outcome.constraints):
                    stack.append((child, depth + 1, to_b, to_a))
                continue
            stats.leaves += 1
            tree_leaves += 1
            if outcome.kind == "rejected":
                stats.rule_counts[outcome.rule] += 1
                continue
            stats.exhausted_leaves += 1
            if max(len(c.a_perm), len(c.b_perm)) > perm_cap:
                stats.soft(f"permanent set of size {max(len(c.a_perm), len(c.b_perm))} above {perm_cap}")
            return c
        return None
    finally:
        stats.max_leaves_per_tree = max(stats.max_leaves_per_tree, tree_leaves)


def inductive_subcoloring_step(
    graph, v: int, a_clusters, b_clusters, k: int, stats: Optional[SearchStats] = None
) -> Optional[Bipartition]:
    """Extend a 2-subcoloring of ``graph - v`` (given by its clusters) to ``graph``.

    Raises:
        BadCertificate: if the clusters are not a 2-subcoloring of ``graph - v``
            with at most ``k`` clusters on side A.
    """
    frame = make_frame(graph, v, a_clusters, b_clusters, k)
    found = search_subcoloring(frame, stats)
    return None if found is None else found.to_bipartition()


def subcoloring_recognizer(stats: Optional[SearchStats] = None) -> InductiveRecognizer:
    def step(prefix, v: int, cert: Bipartition, k: int) -> Optional[Bipartition]:
        return inductive_subcoloring_step(prefix, v, cert.a_clusters, cert.b_clusters, k, stats)

    return InductiveRecognizer(step=step)


def recognize_subcoloring_ka(
    graph: Graph, k: int, stats: Optional[SearchStats] = None, order_mode: str = "degree_sorted"
) -> Optional[Bipartition]:
    """2-subcoloring with at most ``k`` clusters on side A, or ``None``.

    Isolated vertices are set aside first and returned as singleton B clusters.
    """
    if k < 0:
        return None
    isolated = [u for u in graph.vertices() if graph.degree(u) == 0]
    rest = [u for u in graph.vertices() if graph.degree(u) > 0]
    found = recognize_inductively(graph, subcoloring_recognizer(stats), k, order_mode, vertices=rest)
    if found is None:
        return None
    return Bipartition.from_clusters(found.a_clusters, list(found.b_clusters) + [[u] for u in isolated])
