"""Recognizers for splitting a graph between two hereditary properties.

A property is described by a :class:`PropertySpec`: a membership predicate,
optionally a finite list of minimal forbidden induced subgraphs, and the
orders of an edgeless graph or clique it is known to exclude. Two properties
are *d-exclusive* when no graph on ``d`` or more vertices has both; that
number bounds how many vertices a certificate can lose to the other side
when one vertex is added, which is what every solver here exploits.
"""

from __future__ import annotations

import math
import re
import sys
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import BadCertificate, BoundTooLarge, BudgetExceeded, SpecMismatch
from .graph import (
    P3,
    Bipartition,
    Graph,
    PatternGraph,
    find_induced_occurrence,
    induced_subgraph,
    is_cluster_graph,
    cluster_decomposition,
)
from .inductive import InductiveRecognizer, recognize_inductively
from .stats import SearchStats

DEFAULT_XP_BUDGET = 200_000
_PATTERN_LIMIT = 8


@dataclass(frozen=True)
class PropertySpec:
    """A hereditary graph property.

    When ``forbidden`` is given it must characterize the same property as
    ``membership``; the predicate is the one the solvers trust for accept
    and reject decisions, the list is only used to locate obstructions.
    """

    name: str
    membership: Callable[[Graph], bool]
    forbidden: Optional[tuple[PatternGraph, ...]] = None
    excluded_edgeless_order: Optional[int] = None
    excluded_clique_order: Optional[int] = None
    cluster_bound: Optional[int] = None

    def holds_on(self, graph, subset: Iterable[int]) -> bool:
        return bool(self.membership(induced_subgraph(graph, subset)))


@dataclass(frozen=True)
class ExclusivityBound:
    d: int


def _complete_pairs(g: Graph) -> int:
    return g.n * (g.n - 1) // 2


def _is_cocluster(g: Graph, parts: int) -> bool:
    co = Graph([[w for w in range(g.n) if w != u and not g.adjacent(u, w)] for u in range(g.n)])
    return is_cluster_graph(co, range(co.n), parts)


def _triangle_free(g: Graph) -> bool:
    for u in range(g.n):
        for w in g.adjacency[u]:
            if w > u and any(x > w and g.adjacent(u, x) for x in g.adjacency[w]):
                return False
    return True


_K2 = PatternGraph.complete(2)
_CO_K2 = PatternGraph.edgeless(2)
_K2_PLUS_K1 = PatternGraph.from_edges(3, [(0, 1)], "K2+K1")


def _fixed_specs() -> dict[str, PropertySpec]:
    return {
        "any": PropertySpec("any", lambda g: True, forbidden=()),
        "edgeless": PropertySpec("edgeless", lambda g: g.m == 0, (_K2,), excluded_clique_order=2),
        "clique": PropertySpec(
            "clique", lambda g: g.m == _complete_pairs(g), (_CO_K2,), excluded_edgeless_order=2
        ),
        "cluster": PropertySpec("cluster", lambda g: is_cluster_graph(g, range(g.n)), (P3,)),
        "triangle-free": PropertySpec(
            "triangle-free", _triangle_free, (PatternGraph.complete(3),), excluded_clique_order=3
        ),
        "at-most-one": PropertySpec(
            "at-most-one", lambda g: g.n <= 1, (_K2, _CO_K2),
            excluded_edgeless_order=2, excluded_clique_order=2,
        ),
    }


def cluster_spec(k: int) -> PropertySpec:
    """Cluster graphs with at most ``k`` clusters."""
    if k < 0:
        raise SpecMismatch("cluster bound must be nonnegative")
    forbidden = (P3, PatternGraph.edgeless(k + 1)) if k + 1 <= _PATTERN_LIMIT else None
    return PropertySpec(
        f"cluster:k={k}",
        lambda g: is_cluster_graph(g, range(g.n), k),
        forbidden,
        excluded_edgeless_order=k + 1,
        cluster_bound=k,
    )


def cocluster_spec(k: int) -> PropertySpec:
    """Complete multipartite graphs with at most ``k`` parts (complements of :func:`cluster_spec`)."""
    if k < 0:
        raise SpecMismatch("part bound must be nonnegative")
    forbidden = (_K2_PLUS_K1, PatternGraph.complete(k + 1)) if k + 1 <= _PATTERN_LIMIT else None
    return PropertySpec(
        f"cocluster:k={k}", lambda g: _is_cocluster(g, k), forbidden, excluded_clique_order=k + 1
    )


SPEC_NAMES = ("any", "edgeless", "clique", "cluster", "cluster:k=N", "cocluster:k=N", "triangle-free", "at-most-one")


def parse_spec(text: str) -> PropertySpec:
    """Look up a library property by name, e.g. ``"edgeless"`` or ``"cluster:k=3"``."""
    fixed = _fixed_specs()
    if text in fixed:
        return fixed[text]
    match = re.fullmatch(r"(cluster|cocluster):k=(\d+)", text)
    if match:
        k = int(match.group(2))
        return cluster_spec(k) if match.group(1) == "cluster" else cocluster_spec(k)
    raise SpecMismatch(f"unknown property {text!r}; known: {', '.join(SPEC_NAMES)}")


def ramsey_upper_bound(r: int, s: int) -> int:
    """Binomial upper bound ``C(r+s-2, r-1)`` on the Ramsey number ``R(r, s)``."""
    if r < 1 or s < 1:
        raise ValueError("Ramsey arguments must be positive")
    value = math.comb(r + s - 2, r - 1)
    if value > sys.maxsize:
        raise BoundTooLarge(f"R({r},{s}) bound {value} does not fit a machine integer")
    return value


def exclusivity_bound(spec_a: PropertySpec, spec_b: PropertySpec) -> ExclusivityBound:
    """``d`` from excluded orders: one side excludes an edgeless graph, the other a clique."""
    options = []
    if spec_a.excluded_edgeless_order and spec_b.excluded_clique_order:
        options.append(ramsey_upper_bound(spec_a.excluded_edgeless_order, spec_b.excluded_clique_order))
    if spec_a.excluded_clique_order and spec_b.excluded_edgeless_order:
        options.append(ramsey_upper_bound(spec_b.excluded_edgeless_order, spec_a.excluded_clique_order))
    if not options:
        raise SpecMismatch(f"{spec_a.name} and {spec_b.name} are not known to be mutually exclusive")
    return ExclusivityBound(min(options))


def _small_subsets(items: list[int], below: int) -> Iterator[tuple[int, ...]]:
    for size in range(0, min(below - 1, len(items)) + 1):
        yield from combinations(items, size)


def _subset_count(size: int, below: int) -> int:
    return sum(math.comb(size, i) for i in range(0, min(below - 1, size) + 1))


def xp_inductive_step(
    graph,
    v: int,
    a_prime: Iterable[int],
    b_prime: Iterable[int],
    spec_a: PropertySpec,
    spec_b: PropertySpec,
    d: ExclusivityBound,
    budget: int = DEFAULT_XP_BUDGET,
) -> Optional[Bipartition]:
    """Extend a partition of ``graph - v`` to ``graph`` by trying every small exchange.

    For every pair of subsets, one of ``a_prime`` and one of ``b_prime``, each
    with fewer than ``d`` vertices, the two subsets trade sides and ``v`` is
    tried on side A and then on side B.
    """
    a_prime = sorted(set(a_prime))
    b_prime = sorted(set(b_prime))
    others = set(graph.vertices()) - {v}
    if set(a_prime) & set(b_prime) or set(a_prime) | set(b_prime) != others:
        raise BadCertificate("previous partition does not cover the graph without the new vertex")
    if not (spec_a.holds_on(graph, a_prime) and spec_b.holds_on(graph, b_prime)):
        raise BadCertificate("previous partition violates a side property")
    work = _subset_count(len(a_prime), d.d) * _subset_count(len(b_prime), d.d)
    if work > budget:
        raise BudgetExceeded(f"{work} exchanges to try, budget is {budget}")
    base_a, base_b = set(a_prime), set(b_prime)
    for a_out in _small_subsets(a_prime, d.d):
        for b_out in _small_subsets(b_prime, d.d):
            kept_a = (base_a - set(a_out)) | set(b_out)
            kept_b = (base_b - set(b_out)) | set(a_out)
            for side_a, side_b in ((kept_a | {v}, kept_b), (kept_a, kept_b | {v})):
                if spec_a.holds_on(graph, side_a) and spec_b.holds_on(graph, side_b):
                    return Bipartition.from_sides(graph, side_a, side_b)
    return None


def recognize_exclusive(
    graph: Graph,
    spec_a: PropertySpec,
    spec_b: PropertySpec,
    d: Optional[ExclusivityBound] = None,
    budget: int = DEFAULT_XP_BUDGET,
) -> Optional[Bipartition]:
    """Partition into ``spec_a`` and ``spec_b`` sides, or ``None``; polynomial for fixed ``d``."""
    if d is None:
        d = exclusivity_bound(spec_a, spec_b)

    def step(prefix, v, cert: Bipartition, _k):
        return xp_inductive_step(prefix, v, cert.A, cert.B, spec_a, spec_b, d, budget)

    return recognize_inductively(graph, InductiveRecognizer(step), None, "input")


@dataclass(frozen=True)
class SplitConstraint:
    """Movable and permanent vertices of each side during one inductive step."""

    a_movable: frozenset[int]
    a_perm: frozenset[int]
    b_movable: frozenset[int]
    b_perm: frozenset[int]

    def to_b(self, u: int) -> "SplitConstraint":
        return SplitConstraint(self.a_movable - {u}, self.a_perm, self.b_movable, self.b_perm | {u})

    def to_a(self, u: int) -> "SplitConstraint":
        return SplitConstraint(self.a_movable, self.a_perm | {u}, self.b_movable - {u}, self.b_perm)

    def pin_a(self, u: int) -> "SplitConstraint":
        return SplitConstraint(self.a_movable - {u}, self.a_perm | {u}, self.b_movable, self.b_perm)

    @property
    def A(self) -> frozenset[int]:
        return self.a_movable | self.a_perm

    @property
    def B(self) -> frozenset[int]:
        return self.b_movable | self.b_perm


def _first_obstruction(graph, spec: PropertySpec, within: frozenset[int]) -> Optional[tuple[int, ...]]:
    for pattern in spec.forbidden or ():
        hit = find_induced_occurrence(graph, pattern, within)
        if hit is not None:
            return hit
    return None


def _is_p3(graph, x: int, y: int, z: int) -> bool:
    return graph.adjacent(x, y) + graph.adjacent(y, z) + graph.adjacent(x, z) == 2


def _p3_one_movable(graph, c: SplitConstraint) -> Optional[int]:
    """Lowest movable A vertex forming a P3 with two permanent A vertices."""
    perms = sorted(c.a_perm)
    for u in sorted(c.a_movable):
        for w, x in combinations(perms, 2):
            if _is_p3(graph, u, w, x):
                return u
    return None


def _p3_two_movable(graph, c: SplitConstraint) -> Optional[tuple[int, int]]:
    """Two movable A vertices completing a P3 with the lowest possible permanent one."""
    star = c.a_movable
    for x in sorted(c.a_perm):
        near = [u for u in graph.neighbors(x) if u in star]
        pairs = []
        for u, w in combinations(sorted(near), 2):
            if not graph.adjacent(u, w):
                pairs.append((u, w))
        for u in near:
            for w in graph.neighbors(u):
                if w in star and w != x and not graph.adjacent(x, w):
                    pairs.append((min(u, w), max(u, w)))
        if pairs:
            return min(pairs)
    return None


def _unpinned_cluster_vertex(graph, c: SplitConstraint, k: int) -> Optional[int]:
    clusters, _ = cluster_decomposition(graph, c.A)
    if clusters is None or len(clusters) <= k:
        return None
    free = [min(cl) for cl in clusters if not cl & c.a_perm]
    return min(free) if free else None


def _search(
    graph,
    roots: list[SplitConstraint],
    expand: Callable[[object, SplitConstraint, dict], Optional[list]],
    stats: SearchStats,
) -> Optional[SplitConstraint]:
    """DFS over constraints; ``expand`` returns ``None`` at an accepting leaf, ``[]`` to reject."""
    stats.steps += 1
    stats.initial_constraints_max = max(stats.initial_constraints_max, len(roots))
    stack = [(c, {}) for c in reversed(roots)]
    leaves = 0
    try:
        while stack:
            c, path = stack.pop()
            stats.nodes += 1
            children = expand(graph, c, path)
            if children is None:
                stats.leaves += 1
                stats.exhausted_leaves += 1
                leaves += 1
                return c
            if not children:
                stats.leaves += 1
                leaves += 1
            for child, child_path in reversed(children):
                stack.append((child, child_path))
        return None
    finally:
        stats.max_leaves_per_tree = max(stats.max_leaves_per_tree, leaves)


def _bump(path: dict, name: str, stats: SearchStats, cap: int) -> dict:
    updated = dict(path)
    updated[name] = path.get(name, 0) + 1
    stats.note_path(name, updated[name], cap)
    return updated


def _initial(a_prime, b_prime, v: int) -> list[SplitConstraint]:
    a0, b0 = frozenset(a_prime), frozenset(b_prime)
    return [
        SplitConstraint(a0, frozenset({v}), b0, frozenset()),
        SplitConstraint(a0, frozenset(), b0, frozenset({v})),
    ]


def _forbidden_clique_order(spec: PropertySpec) -> int:
    orders = [
        p.order for p in spec.forbidden or ()
        if p.order >= 1 and all(p.adjacent(i, j) for i in range(p.order) for j in range(i + 1, p.order))
    ]
    if spec.forbidden is None or not orders:
        raise SpecMismatch(f"{spec.name} has no forbidden clique in its obstruction list")
    return min(orders)


def recognize_cluster_vs_fsg(
    graph: Graph, k: int, spec_b: PropertySpec, stats: Optional[SearchStats] = None
) -> Optional[Bipartition]:
    """Side A a cluster graph with at most ``k`` clusters, side B in ``spec_b``, or ``None``.

    ``spec_b`` must list its obstructions, one of them a clique ``K_s``.
    """
    s = _forbidden_clique_order(spec_b)
    if k < 0:
        return None
    stats = stats if stats is not None else SearchStats()
    b_cap = (s - 1) * k + 1
    a_cap = k + (s - 1) * k + 2

    def expand(g, c: SplitConstraint, path: dict):
        if not is_cluster_graph(g, c.a_perm, k) or not spec_b.holds_on(g, c.b_perm):
            stats.rule_counts["reject"] += 1
            return []
        u = _p3_one_movable(g, c)
        if u is not None:
            stats.rule_counts["pull_up"] += 1
            return [(c.to_b(u), _bump(path, "a_side_rules", stats, a_cap))]
        pair = _p3_two_movable(g, c)
        if pair is not None:
            stats.rule_counts["pair_branch"] += 1
            nxt = _bump(path, "a_side_rules", stats, a_cap)
            return [(c.to_b(pair[0]), nxt), (c.to_b(pair[1]), nxt)]
        hit = _first_obstruction(g, spec_b, c.B)
        if hit is not None:
            stats.rule_counts["b_obstruction"] += 1
            nxt = _bump(path, "b_obstruction", stats, b_cap)
            movable = sorted(u for u in hit if u not in c.b_perm)
            stats.note_width("b_obstruction", len(movable))
            return [(c.to_a(u), nxt) for u in movable]
        u = _unpinned_cluster_vertex(g, c, k)
        if u is not None:
            stats.rule_counts["too_many_clusters"] += 1
            nxt = _bump(path, "a_side_rules", stats, a_cap)
            return [(c.pin_a(u), nxt), (c.to_b(u), nxt)]
        return None

    def step(prefix, v, cert: Bipartition, _k):
        found = _search(prefix, _initial(cert.A, cert.B, v), expand, stats)
        if found is None:
            return None
        return Bipartition.from_sides(prefix, found.A, found.B)

    return recognize_inductively(graph, InductiveRecognizer(step), k, "input")


def recognize_small_fsg(
    graph: Graph, spec_a: PropertySpec, spec_b: PropertySpec, stats: Optional[SearchStats] = None
) -> Optional[Bipartition]:
    """Partition when both sides have finite obstruction lists and ``spec_a`` excludes an
    edgeless graph while ``spec_b`` excludes a clique."""
    if spec_a.forbidden is None or spec_b.forbidden is None:
        raise SpecMismatch("both properties need a finite obstruction list")
    if not spec_a.excluded_edgeless_order or not spec_b.excluded_clique_order:
        raise SpecMismatch(f"{spec_a.name} must exclude an edgeless graph and {spec_b.name} a clique")
    stats = stats if stats is not None else SearchStats()
    cap = ramsey_upper_bound(spec_a.excluded_edgeless_order, spec_b.excluded_clique_order)

    def expand(g, c: SplitConstraint, path: dict):
        if not spec_a.holds_on(g, c.a_perm) or not spec_b.holds_on(g, c.b_perm):
            stats.rule_counts["reject"] += 1
            return []
        for spec, within, perm, rule, move in (
            (spec_a, c.A, c.a_perm, "a_obstruction", c.to_b),
            (spec_b, c.B, c.b_perm, "b_obstruction", c.to_a),
        ):
            hit = _first_obstruction(g, spec, within)
            if hit is not None:
                stats.rule_counts[rule] += 1
                nxt = _bump(path, rule, stats, cap)
                movable = sorted(u for u in hit if u not in perm)
                stats.note_width(rule, len(movable))
                return [(move(u), nxt) for u in movable]
        return None

    def step(prefix, v, cert: Bipartition, _k):
        found = _search(prefix, _initial(cert.A, cert.B, v), expand, stats)
        if found is None:
            return None
        return Bipartition.from_sides(prefix, found.A, found.B)

    return recognize_inductively(graph, InductiveRecognizer(step), None, "input")


def recognize_bounded_a(
    graph: Graph, k: int, spec_a: PropertySpec, spec_b: PropertySpec, stats: Optional[SearchStats] = None
) -> Optional[Bipartition]:
    """Partition with at most ``k`` vertices on side A, by branching on obstructions in B."""
    if spec_b.forbidden is None:
        raise SpecMismatch(f"{spec_b.name} needs a finite obstruction list")
    stats = stats if stats is not None else SearchStats()
    everything = frozenset(graph.vertices())
    stack: list[frozenset[int]] = [frozenset()]
    while stack:
        a_side = stack.pop()
        stats.nodes += 1
        stats.note_depth(len(a_side))
        if len(a_side) > k or not spec_a.holds_on(graph, a_side):
            stats.leaves += 1
            continue
        b_side = everything - a_side
        hit = _first_obstruction(graph, spec_b, b_side)
        if hit is None:
            stats.leaves += 1
            stats.exhausted_leaves += 1
            return Bipartition.from_sides(graph, a_side, b_side)
        stats.rule_counts["b_obstruction"] += 1
        stats.note_width("b_obstruction", len(hit))
        for w in sorted(hit, reverse=True):
            stack.append(a_side | {w})
    return None
