"""Seeded random graphs, some with a planted partition to recover.

Edge sampling skips ahead geometrically between successes, so generation
costs O(n + m) even when the candidate pair space is quadratic.
"""

from __future__ import annotations

import math
import random
from collections.abc import Iterator
from typing import Optional

from .errors import ConfigError
from .graph import Bipartition, Graph, build_graph

KINDS = ("planted-monopolar", "planted-subcoloring", "gnp")


def _bernoulli_indices(total: int, p: float, rng: random.Random) -> Iterator[int]:
    """Increasing indices in ``range(total)``, each kept independently with probability ``p``."""
    if p <= 0 or total <= 0:
        return
    if p >= 1:
        yield from range(total)
        return
    log_q = math.log1p(-p)
    i = -1
    while True:
        # tiny p can make the skip overflow an int, so compare it as a float first
        skip = math.log(1.0 - rng.random()) / log_q
        if i + 1 + skip >= total:
            return
        i += 1 + int(skip)
        yield i


def _split_sizes(total: int, parts: int, rng: random.Random) -> list[int]:
    """``parts`` positive sizes summing to ``total``, uniformly over compositions."""
    if parts == 0:
        return []
    cuts = sorted(rng.sample(range(1, total), parts - 1))
    bounds = [0] + cuts + [total]
    return [bounds[i + 1] - bounds[i] for i in range(parts)]


def _check(n: int, p: float) -> None:
    if n < 0:
        raise ConfigError(f"vertex count {n} is negative")
    if not 0.0 <= p <= 1.0:
        raise ConfigError(f"edge probability {p} outside [0, 1]")


def gnp(n: int, p: float, seed: Optional[int] = None) -> Graph:
    _check(n, p)
    rng = random.Random(seed)
    edges = []
    for idx in _bernoulli_indices(n * (n - 1) // 2, p, rng):
        # row v holds the v pairs (u, v) with u < v, starting at v(v-1)/2
        v = int((1 + math.isqrt(1 + 8 * idx)) // 2)
        while v * (v - 1) // 2 > idx:
            v -= 1
        while (v + 1) * v // 2 <= idx:
            v += 1
        edges.append((idx - v * (v - 1) // 2, v))
    return build_graph(n, edges)


def _planted(
    n: int, a_size: int, a_parts: int, b_parts: Optional[int], p: float, rng: random.Random
) -> tuple[Graph, Bipartition]:
    labels = list(range(n))
    rng.shuffle(labels)
    a_ids, b_ids = labels[:a_size], labels[a_size:]
    edges: list[tuple[int, int]] = []

    def cliques(ids: list[int], parts: int) -> list[list[int]]:
        out, start = [], 0
        for size in _split_sizes(len(ids), parts, rng):
            block = ids[start:start + size]
            start += size
            edges.extend((block[i], block[j]) for i in range(size) for j in range(i + 1, size))
            out.append(block)
        return out

    a_clusters = cliques(a_ids, a_parts)
    b_clusters = [[u] for u in b_ids] if b_parts is None else cliques(b_ids, b_parts)
    width = len(b_ids)
    for idx in _bernoulli_indices(len(a_ids) * width, p, rng):
        edges.append((a_ids[idx // width], b_ids[idx % width]))
    return build_graph(n, edges), Bipartition.from_clusters(a_clusters, b_clusters)


def generate_planted(
    kind: str,
    n: int,
    k: int,
    p: float,
    seed: Optional[int] = None,
    a_fraction: float = 0.5,
    b_clusters: Optional[int] = None,
) -> tuple[Graph, Optional[Bipartition]]:
    """Random graph of the given kind and, for planted kinds, the partition hidden in it.

    ``planted-monopolar`` splits ``round(a_fraction * n)`` vertices into ``k``
    cliques and leaves the rest independent; ``planted-subcoloring`` also
    groups the rest into ``b_clusters`` cliques (default ``k``). Edges
    between the sides appear independently with probability ``p``.
    """
    _check(n, p)
    if kind == "gnp":
        return gnp(n, p, seed), None
    if kind not in KINDS:
        raise ConfigError(f"unknown generator {kind!r}; choose from {', '.join(KINDS)}")
    if not 0.0 <= a_fraction <= 1.0:
        raise ConfigError(f"A fraction {a_fraction} outside [0, 1]")
    rng = random.Random(seed)
    a_size = round(a_fraction * n)
    if k < 0 or (a_size > 0) != (k > 0) or k > a_size:
        raise ConfigError(f"cannot split {a_size} vertices into {k} nonempty clusters")
    if kind == "planted-monopolar":
        return _planted(n, a_size, k, None, p, rng)
    b_parts = k if b_clusters is None else b_clusters
    b_size = n - a_size
    if b_parts < 0 or (b_size > 0) != (b_parts > 0) or b_parts > b_size:
        raise ConfigError(f"cannot split {b_size} vertices into {b_parts} nonempty clusters")
    return _planted(n, a_size, k, b_parts, p, rng)
