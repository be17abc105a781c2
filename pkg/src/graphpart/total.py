"""2-subcoloring with a bound on the number of clusters over both sides.

Unlike the inductive solvers, this one branches on the whole graph. A
constraint fixes some clusters on each side and leaves a remainder ``R``.
Rules place remainder vertices until every one of them can only join one
specific A cluster or one specific B cluster; the remaining binary choices are
then settled by a 2-SAT formula.

Synthetic "dummy" vertices with ids ``>= n`` may be created to stand in for a
cluster that is certain to exist but has no known member yet. They are removed
from the certificate at the end.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .errors import InvariantViolation, UnclassifiedRemainder
from .graph import Bipartition, Graph
from .stats import SearchStats
from .twosat import TwoSatFormula, solve_twosat


class TotalConstraint:
    """Mutable search state: opened clusters, the remainder and adjacency counters.

    ``counts[v]`` maps a cluster id to the number of neighbors ``v`` has in it
    and is kept current for every remainder vertex. ``touch[c]`` holds the
    remainder vertices adjacent to cluster ``c``. ``pending`` is a min-heap
    containing (at least) every remainder vertex whose cluster adjacency may
    have become inconsistent; stale entries are skipped when popped.
    """

    def __init__(self, graph: Graph):
        n = graph.n
        self.graph = graph
        self.label: list[int] = [-1] * n
        self.cluster_side: list[str] = []
        self.members: list[list[int]] = []
        self.touch: list[set[int]] = []
        self.remainder: set[int] = set(range(n))
        self.counts: list[dict[int, int]] = [{} for _ in range(n)]
        self.pending: list[int] = []
        self.extra: dict[int, tuple[int, ...]] = {}
        self.dummy_adj: dict[int, tuple[int, ...]] = {}
        self.dummy_rounds = 0

    def copy(self) -> "TotalConstraint":
        other = TotalConstraint.__new__(TotalConstraint)
        other.graph = self.graph
        other.label = self.label.copy()
        other.cluster_side = self.cluster_side.copy()
        other.members = [m.copy() for m in self.members]
        other.touch = [t.copy() for t in self.touch]
        other.remainder = self.remainder.copy()
        other.counts = [self.counts[v].copy() if v in self.remainder else {} for v in range(len(self.counts))]
        other.pending = self.pending.copy()
        other.extra = dict(self.extra)
        other.dummy_adj = dict(self.dummy_adj)
        other.dummy_rounds = self.dummy_rounds
        return other

    def neighbors(self, u: int):
        if u < self.graph.n:
            more = self.extra.get(u)
            return self.graph.adjacency[u] + more if more else self.graph.adjacency[u]
        return self.dummy_adj[u]

    def adjacent(self, u: int, v: int) -> bool:
        if u < self.graph.n and v < self.graph.n:
            return self.graph.adjacent(u, v)
        return v in self.neighbors(u)

    @property
    def a_clusters(self) -> list[list[int]]:
        return [m for m, s in zip(self.members, self.cluster_side) if s == "A"]

    @property
    def b_clusters(self) -> list[list[int]]:
        return [m for m, s in zip(self.members, self.cluster_side) if s == "B"]

    def cluster_total(self) -> int:
        return len(self.members)

    def place(self, u: int, cid: int) -> None:
        """Move ``u`` out of the remainder (if there) into cluster ``cid``."""
        self.remainder.discard(u)
        while len(self.label) <= u:
            self.label.append(-1)
            self.counts.append({})
        self.label[u] = cid
        self.members[cid].append(u)
        touching = self.touch[cid]
        touching.discard(u)
        rem = self.remainder
        for w in self.neighbors(u):
            if w in rem:
                cnt = self.counts[w]
                cnt[cid] = cnt.get(cid, 0) + 1
                touching.add(w)
        # every vertex touching the grown cluster may now see only part of it
        for w in touching:
            heapq.heappush(self.pending, w)

    def open(self, u: int, side: str) -> int:
        cid = len(self.members)
        self.cluster_side.append(side)
        self.members.append([])
        self.touch.append(set())
        self.place(u, cid)
        return cid

    def add_dummy(self, attach: list[int]) -> int:
        d = self.graph.n + len(self.dummy_adj)
        self.dummy_adj[d] = tuple(attach)
        for w in attach:
            self.extra[w] = self.extra.get(w, ()) + (d,)
        return d

    def status(self, v: int, side: str) -> tuple[str, int]:
        """``("none", -1)``, ``("full", cid)`` or ``("bad", cid)`` for ``v`` against one side."""
        found = -1
        for cid, cnt in self.counts[v].items():
            if self.cluster_side[cid] != side:
                continue
            if found != -1:
                return "bad", found
            found = cid
            if cnt != len(self.members[cid]):
                return "bad", cid
        return ("none", -1) if found == -1 else ("full", found)


@dataclass
class TotalOutcome:
    kind: str  # "rejected" | "reduced" | "branch" | "exhausted"
    constraints: list[TotalConstraint] = field(default_factory=list)
    rule: str = ""


@dataclass
class RemainderClasses:
    """Where each remainder vertex may go: one-sided classes and two-sided pairs."""

    only_a: dict[int, int]
    only_b: dict[int, int]
    both: dict[int, tuple[int, int]]


def classify_remainder(c: TotalConstraint) -> RemainderClasses:
    only_a: dict[int, int] = {}
    only_b: dict[int, int] = {}
    both: dict[int, tuple[int, int]] = {}
    for v in c.remainder:
        sa, ia = c.status(v, "A")
        sb, jb = c.status(v, "B")
        if sa == "bad" or sb == "bad":
            raise InvariantViolation(f"vertex {v} still has an inconsistent cluster adjacency")
        if sa == "full" and sb == "full":
            both[v] = (ia, jb)
        elif sa == "full":
            only_a[v] = ia
        elif sb == "full":
            only_b[v] = jb
    return RemainderClasses(only_a, only_b, both)


def _other(side: str) -> str:
    return "B" if side == "A" else "A"


def _fork(c: TotalConstraint, side: str, first: int, second: int, rule: str) -> TotalOutcome:
    left, right = c.copy(), c.copy()
    left.open(first, side)
    right.open(second, side)
    return TotalOutcome("branch", [left, right], rule)


def _reduce_pending(c: TotalConstraint) -> Optional[TotalOutcome]:
    rem = c.remainder
    while c.pending:
        v = heapq.heappop(c.pending)
        if v not in rem:
            continue
        sa, ia = c.status(v, "A")
        sb, jb = c.status(v, "B")
        if sa == "bad":
            forced, state, target = "B", sb, jb
        elif sb == "bad":
            forced, state, target = "A", sa, ia
        else:
            continue
        if state == "bad":
            return TotalOutcome("rejected", rule="reject")
        if state == "none":
            c.open(v, forced)
        else:
            c.place(v, target)
        return TotalOutcome("reduced", [c], "force_side")
    return None


def _nonadjacent_pair(c: TotalConstraint, owner: dict[int, int]) -> Optional[tuple[int, int]]:
    groups: dict[int, list[int]] = {}
    for v in sorted(owner):
        groups.setdefault(owner[v], []).append(v)
    for u in sorted(owner):
        for v in groups[owner[u]]:
            if v > u and not c.adjacent(u, v):
                return u, v
    return None


def _crossing_edge(c: TotalConstraint, owner: dict[int, int]) -> Optional[tuple[int, int]]:
    for u in sorted(owner):
        mine = owner[u]
        hits = [w for w in c.neighbors(u) if w > u and owner.get(w, mine) != mine]
        if hits:
            return u, min(hits)
    return None


def apply_total_rules(c: TotalConstraint, k: int) -> TotalOutcome:
    """Apply the first applicable rule; ``"reduced"`` outcomes modify ``c`` in place."""
    if c.cluster_total() > k:
        return TotalOutcome("rejected", rule="too_many_clusters")
    reduced = _reduce_pending(c)
    if reduced is not None:
        return reduced

    lonely = [v for v in c.remainder if not c.counts[v]]
    if lonely:
        v = min(lonely)
        left, right = c.copy(), c.copy()
        left.open(v, "A")
        right.open(v, "B")
        return TotalOutcome("branch", [left, right], "open_isolated")

    classes = classify_remainder(c)
    for owner, side in ((classes.only_a, "A"), (classes.only_b, "B")):
        pair = _nonadjacent_pair(c, owner)
        if pair is not None:
            return _fork(c, _other(side), *pair, rule="split_nonadjacent")
    for owner, side in ((classes.only_a, "A"), (classes.only_b, "B")):
        pair = _crossing_edge(c, owner)
        if pair is not None:
            return _fork(c, _other(side), *pair, rule="split_adjacent")

    if classes.only_a or classes.only_b:
        if c.dummy_rounds:
            raise InvariantViolation("one-sided remainder vertices reappeared after the dummy round")
        return TotalOutcome("branch", _dummy_round(c, k, classes), "dummy_clusters")
    return TotalOutcome("exhausted", [c], "exhausted")


def _dummy_round(c: TotalConstraint, k: int, classes: RemainderClasses) -> list[TotalConstraint]:
    """One child per choice of which one-sided groups get a brand-new cluster on the other side.

    The one-sided vertices attached to a single cluster form a clique; either
    all of them join that cluster, or at least one lies in a fresh cluster on
    the opposite side, which a dummy vertex adjacent to the whole group stands
    in for.
    """
    groups: dict[tuple[str, int], list[int]] = {}
    for owner, side in ((classes.only_a, "A"), (classes.only_b, "B")):
        for v in sorted(owner):
            groups.setdefault((side, owner[v]), []).append(v)
    keys = sorted(groups, key=lambda key: (key[0], key[1]))
    budget = k - c.cluster_total()
    children = []
    for size in range(0, min(budget, len(keys)) + 1):
        for chosen in combinations(keys, size):
            child = c.copy()
            child.dummy_rounds += 1
            picked = set(chosen)
            for key in chosen:
                side, _ = key
                child.open(child.add_dummy(groups[key]), _other(side))
            for key in keys:
                if key not in picked:
                    for v in groups[key]:
                        child.place(v, key[1])
            children.append(child)
    return children


def build_twosat(c: TotalConstraint) -> TwoSatFormula:
    """Formula over the sorted remainder; variable ``p`` true puts the ``p``-th vertex on side A.

    Two vertices get a clause whenever putting both on the same side would
    merge clusters that must stay apart, or split one that must stay whole.
    """
    order = sorted(c.remainder)
    slots = []
    for v in order:
        sa, ia = c.status(v, "A")
        sb, jb = c.status(v, "B")
        if sa != "full" or sb != "full":
            raise UnclassifiedRemainder(f"remainder vertex {v} lacks a cluster on both sides")
        slots.append((ia, jb))
    pos = {v: p for p, v in enumerate(order)}
    masks = []
    for v in order:
        mask = 0
        for w in c.neighbors(v):
            p = pos.get(w)
            if p is not None:
                mask |= 1 << p
        masks.append(mask)
    formula = TwoSatFormula(len(order))
    for p in range(len(order)):
        ip, jp = slots[p]
        row = masks[p]
        for q in range(p + 1, len(order)):
            iq, jq = slots[q]
            adj = row >> q & 1
            if (ip != iq) if adj else (ip == iq):
                formula.add_clause((p, False), (q, False))
            if (jp != jq) if adj else (jp == jq):
                formula.add_clause((p, True), (q, True))
    return formula


def materialize(c: TotalConstraint, assignment: list[bool]) -> Bipartition:
    members = [m.copy() for m in c.members]
    for v, to_a in zip(sorted(c.remainder), assignment):
        _, ia = c.status(v, "A")
        _, jb = c.status(v, "B")
        members[ia if to_a else jb].append(v)
    n = c.graph.n
    real = [[u for u in m if u < n] for m in members]
    return Bipartition.from_clusters(
        [m for m, s in zip(real, c.cluster_side) if s == "A"],
        [m for m, s in zip(real, c.cluster_side) if s == "B"],
    )


def recognize_subcoloring_total(
    graph: Graph, k: int, stats: Optional[SearchStats] = None
) -> Optional[Bipartition]:
    """2-subcoloring with at most ``k`` clusters over both sides, or ``None``."""
    if k < 0:
        return None
    if stats is None:
        stats = SearchStats()
    stats.steps += 1
    stack = [(TotalConstraint(graph), 0)]
    leaves = 0
    try:
        while stack:
            c, depth = stack.pop()
            while True:
                outcome = apply_total_rules(c, k)
                if outcome.kind != "reduced":
                    break
                stats.rule_counts[outcome.rule] += 1
            stats.nodes += 1
            stats.note_depth(depth)
            if outcome.kind == "branch":
                stats.rule_counts[outcome.rule] += 1
                stats.note_width(outcome.rule, len(outcome.constraints))
                stats.note_path("dummy_rounds", max(ch.dummy_rounds for ch in outcome.constraints), 1)
                stats.note_path("opened_clusters", c.cluster_total() + 1)
                for child in reversed(outcome.constraints):
                    stack.append((child, depth + 1))
                continue
            leaves += 1
            stats.leaves += 1
            if outcome.kind == "rejected":
                stats.rule_counts[outcome.rule] += 1
                continue
            stats.exhausted_leaves += 1
            assignment = solve_twosat(build_twosat(c))
            if assignment is not None:
                return materialize(c, assignment)
        return None
    finally:
        stats.max_leaves_per_tree = max(stats.max_leaves_per_tree, leaves)
