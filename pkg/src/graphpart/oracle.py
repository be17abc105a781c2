"""Exhaustive ground-truth recognizers for small graphs.

Every side assignment is a bitmask ``m`` over the vertices: bit ``i`` set means
vertex ``i`` is on side B, clear means side A. Assignments are scanned in
increasing ``m`` so the answer for a given graph is reproducible exactly.

The monopolar and subcoloring oracles share one dynamic program over vertex
subsets. Adding the highest vertex ``t`` of ``S`` to ``S' = S - {t}`` keeps a
cluster graph a cluster graph iff ``t`` sees nothing in ``S'`` or exactly one
whole cluster of ``S'``; the cluster count grows by one in the first case.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import OracleSizeExceeded
from .graph import Bipartition, Graph, induced_subgraph

SUBSET_ORACLE_LIMIT = 24
PREDICATE_ORACLE_LIMIT = 20
_NUMPY_THRESHOLD = 11


def _limit(default: int) -> int:
    override = os.environ.get("GRAPHPART_ORACLE_LIMIT")
    return int(override) if override else default


def _guard(graph: Graph, default: int) -> None:
    limit = _limit(default)
    if graph.n > limit:
        raise OracleSizeExceeded(f"oracle refuses n={graph.n} (limit {limit})")


@dataclass(frozen=True)
class SubsetTables:
    """Per-subset facts, indexed by the subset's bitmask."""

    n: int
    cluster: "np.ndarray | list[bool]"
    count: "np.ndarray | list[int]"
    edgeless: "np.ndarray | list[bool]"


def subset_tables(graph: Graph) -> SubsetTables:
    """Cluster-graph flag, cluster count and edgeless flag for every vertex subset."""
    n = graph.n
    masks = graph.adj_masks
    closed = [masks[v] | (1 << v) for v in range(n)]
    if n < _NUMPY_THRESHOLD:
        size = 1 << n
        cluster = [True] * size
        count = [0] * size
        edgeless = [True] * size
        for t in range(n):
            base = 1 << t
            row = masks[t]
            for rest in range(base):
                s = base | rest
                x = row & rest
                if x == 0:
                    cluster[s] = cluster[rest]
                    count[s] = count[rest] + 1
                    edgeless[s] = edgeless[rest]
                else:
                    low = (x & -x).bit_length() - 1
                    cluster[s] = cluster[rest] and x == closed[low] & rest
                    count[s] = count[rest]
                    edgeless[s] = False
        return SubsetTables(n, cluster, count, edgeless)

    size = 1 << n
    cluster = np.ones(size, dtype=bool)
    count = np.zeros(size, dtype=np.int8)
    edgeless = np.ones(size, dtype=bool)
    for t in range(n):
        base = 1 << t
        rest = np.arange(base, dtype=np.int64)
        x = rest & masks[t]
        empty = x == 0
        low = x & -x
        target = np.zeros(base, dtype=np.int64)
        for j in range(t):
            target[low == (1 << j)] = closed[j]
        whole = (x == (target & rest)) | empty
        cluster[base:2 * base] = cluster[:base] & whole
        count[base:2 * base] = count[:base] + empty
        edgeless[base:2 * base] = edgeless[:base] & empty
    return SubsetTables(n, cluster, count, edgeless)


def _bipartition_from_mask(graph: Graph, mask: int) -> Bipartition:
    a_side = [u for u in range(graph.n) if not mask >> u & 1]
    b_side = [u for u in range(graph.n) if mask >> u & 1]
    return Bipartition.from_sides(graph, a_side, b_side)


def _feasible_masks(tables: SubsetTables, problem: str, k: Optional[int], bound_mode: str):
    """Boolean vector over B-side masks for the requested problem (numpy path)."""
    full = (1 << tables.n) - 1
    b_mask = np.arange(full + 1, dtype=np.int64)
    a_mask = full ^ b_mask
    cluster = np.asarray(tables.cluster)
    count = np.asarray(tables.count).astype(np.int64)
    ok = cluster[a_mask]
    if problem == "monopolar":
        ok &= np.asarray(tables.edgeless)[b_mask]
    else:
        ok &= cluster[b_mask]
    if k is not None:
        used = count[a_mask] if bound_mode == "a_side" else count[a_mask] + count[b_mask]
        ok &= used <= k
    return ok


def _first_mask(tables: SubsetTables, problem: str, k: Optional[int], bound_mode: str) -> Optional[int]:
    n = tables.n
    full = (1 << n) - 1
    if n >= _NUMPY_THRESHOLD:
        ok = _feasible_masks(tables, problem, k, bound_mode)
        hits = np.flatnonzero(ok)
        return int(hits[0]) if hits.size else None
    cluster, count, edgeless = tables.cluster, tables.count, tables.edgeless
    b_ok = edgeless if problem == "monopolar" else cluster
    for m in range(full + 1):
        a = full ^ m
        if not (cluster[a] and b_ok[m]):
            continue
        if k is not None:
            used = count[a] if bound_mode == "a_side" else count[a] + count[m]
            if used > k:
                continue
        return m
    return None


def brute_monopolar(graph: Graph, k: Optional[int]) -> Optional[Bipartition]:
    """First assignment with ``G[A]`` a cluster graph of at most ``k`` clusters and ``G[B]`` edgeless."""
    _guard(graph, SUBSET_ORACLE_LIMIT)
    mask = _first_mask(subset_tables(graph), "monopolar", k, "a_side")
    return None if mask is None else _bipartition_from_mask(graph, mask)


def brute_subcoloring(graph: Graph, k: Optional[int], bound_mode: str = "a_side") -> Optional[Bipartition]:
    """First 2-subcoloring whose cluster count (A side, or both sides for ``"total"``) is at most ``k``."""
    if bound_mode not in ("a_side", "total"):
        raise ValueError(f"unknown bound mode {bound_mode!r}")
    _guard(graph, SUBSET_ORACLE_LIMIT)
    mask = _first_mask(subset_tables(graph), "subcoloring", k, bound_mode)
    return None if mask is None else _bipartition_from_mask(graph, mask)


@dataclass(frozen=True)
class OracleProfile:
    """Smallest feasible cluster bound per problem; ``None`` when no partition exists at any bound."""

    monopolar: Optional[int]
    subcoloring_a_side: Optional[int]
    subcoloring_total: Optional[int]


def oracle_profile(graph: Graph) -> OracleProfile:
    """All three minimum bounds from a single table pass.

    A problem is a YES instance at bound ``k`` iff its entry is not ``None``
    and is at most ``k``.
    """
    _guard(graph, SUBSET_ORACLE_LIMIT)
    tables = subset_tables(graph)
    n = graph.n
    full = (1 << n) - 1
    if n >= _NUMPY_THRESHOLD:
        b_mask = np.arange(full + 1, dtype=np.int64)
        a_mask = full ^ b_mask
        cluster = np.asarray(tables.cluster)
        count = np.asarray(tables.count).astype(np.int64)
        edgeless = np.asarray(tables.edgeless)

        def best(ok, used):
            return int(used[ok].min()) if ok.any() else None

        a_ok = cluster[a_mask]
        sub_ok = a_ok & cluster[b_mask]
        return OracleProfile(
            best(a_ok & edgeless[b_mask], count[a_mask]),
            best(sub_ok, count[a_mask]),
            best(sub_ok, count[a_mask] + count[b_mask]),
        )
    cluster, count, edgeless = tables.cluster, tables.count, tables.edgeless
    mono = sub_a = sub_t = None
    for m in range(full + 1):
        a = full ^ m
        if not cluster[a]:
            continue
        ca = count[a]
        if edgeless[m] and (mono is None or ca < mono):
            mono = ca
        if cluster[m]:
            if sub_a is None or ca < sub_a:
                sub_a = ca
            ct = ca + count[m]
            if sub_t is None or ct < sub_t:
                sub_t = ct
    return OracleProfile(mono, sub_a, sub_t)


def brute_pi_partition(graph: Graph, spec_a, spec_b) -> Optional[Bipartition]:
    """First assignment whose sides satisfy the two properties' membership predicates."""
    _guard(graph, PREDICATE_ORACLE_LIMIT)
    n = graph.n
    full = (1 << n) - 1
    memo_a: dict[int, bool] = {}
    memo_b: dict[int, bool] = {}

    def holds(memo, spec, mask):
        if mask not in memo:
            memo[mask] = bool(spec.membership(induced_subgraph(graph, _members(mask))))
        return memo[mask]

    for m in range(full + 1):
        if holds(memo_a, spec_a, full ^ m) and holds(memo_b, spec_b, m):
            a_side = _members(full ^ m)
            b_side = _members(m)
            return Bipartition.from_sides(graph, a_side, b_side)
    return None


def _members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out
