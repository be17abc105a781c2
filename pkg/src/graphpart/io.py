"""Graph files and certificate files.

Two graph formats are read, told apart by the first token that is not a
comment:

* DIMACS-like: ``p edge <n> <m>`` then ``m`` lines ``e <u> <v>``, 1-based.
* Edge list: a line holding ``<n>``, then ``<u> <v>`` lines, 0-based.

Lines starting with ``c`` are comments in both. Certificates are one line per
vertex, ``side A <cluster-index> <vertex>``, sorted by vertex.
"""

from __future__ import annotations

import os
from collections.abc import Iterator
from typing import Optional

from .errors import CoverageError, ParseError
from .graph import Bipartition, Graph, build_graph


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        yield number, tokens


def _int(token: str, line: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"{what} {token!r} is not an integer", line) from None
    if value < 0:
        raise ParseError(f"{what} {value} is negative", line)
    return value


def parse_graph_text(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("no graph header found", 1)
    if lines[0][1][0] == "p":
        return _parse_dimacs(lines)
    return _parse_edge_list(lines)


def _parse_dimacs(lines: list[tuple[int, list[str]]]) -> Graph:
    header_line, header = lines[0]
    if len(header) != 4 or header[1] != "edge":
        raise ParseError("header must read 'p edge <n> <m>'", header_line)
    n = _int(header[2], header_line, "vertex count")
    m = _int(header[3], header_line, "edge count")
    edges = []
    for number, tokens in lines[1:]:
        if tokens[0] == "p":
            raise ParseError("second header line", number)
        if tokens[0] != "e" or len(tokens) != 3:
            raise ParseError("edge lines must read 'e <u> <v>'", number)
        u = _int(tokens[1], number, "vertex")
        v = _int(tokens[2], number, "vertex")
        for x in (u, v):
            if not 1 <= x <= n:
                raise ParseError(f"vertex {x} outside 1..{n}", number)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", number)
        edges.append((u - 1, v - 1))
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}", header_line)
    return build_graph(n, edges)


def _parse_edge_list(lines: list[tuple[int, list[str]]]) -> Graph:
    first_line, first = lines[0]
    if len(first) != 1:
        raise ParseError("edge-list files start with a line holding only the vertex count", first_line)
    n = _int(first[0], first_line, "vertex count")
    edges = []
    for number, tokens in lines[1:]:
        if len(tokens) != 2:
            raise ParseError("edge lines must read '<u> <v>'", number)
        u = _int(tokens[0], number, "vertex")
        v = _int(tokens[1], number, "vertex")
        for x in (u, v):
            if x >= n:
                raise ParseError(f"vertex {x} outside 0..{n - 1}", number)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", number)
        edges.append((u, v))
    return build_graph(n, edges)


def parse_graph_file(path: str | os.PathLike) -> Graph:
    with open(path, encoding="utf-8") as handle:
        return parse_graph_text(handle.read())


def format_graph(graph: Graph, fmt: str = "dimacs") -> str:
    if fmt == "dimacs":
        rows = [f"p edge {graph.n} {graph.m}"] + [f"e {u + 1} {v + 1}" for u, v in graph.edges()]
    elif fmt == "edges":
        rows = [str(graph.n)] + [f"{u} {v}" for u, v in graph.edges()]
    else:
        raise ValueError(f"unknown graph format {fmt!r}")
    return "\n".join(rows) + "\n"


def write_graph_file(graph: Graph, path: str | os.PathLike, fmt: str = "dimacs") -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_graph(graph, fmt))


def format_certificate(partition: Bipartition) -> str:
    rows = []
    for label, clusters in (("A", partition.a_clusters), ("B", partition.b_clusters)):
        for index, cluster in enumerate(clusters):
            rows.extend((u, f"side {label} {index} {u}") for u in cluster)
    rows.sort()
    return "".join(line + "\n" for _, line in rows)


def write_certificate(partition: Bipartition, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_certificate(partition))


def parse_certificate_text(text: str, n: Optional[int] = None) -> Bipartition:
    """Read a certificate; with ``n`` given, every vertex ``0 .. n-1`` must appear."""
    groups: dict[str, dict[int, list[int]]] = {"A": {}, "B": {}}
    seen: set[int] = set()
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        if len(tokens) != 4 or tokens[0] != "side" or tokens[1] not in groups:
            raise ParseError("certificate lines must read 'side A|B <cluster> <vertex>'", number)
        index = _int(tokens[2], number, "cluster index")
        u = _int(tokens[3], number, "vertex")
        if u in seen:
            raise CoverageError(f"vertex {u} assigned twice (line {number})")
        seen.add(u)
        groups[tokens[1]].setdefault(index, []).append(u)
    if n is not None:
        missing = sorted(set(range(n)) - seen)
        extra = sorted(u for u in seen if u >= n)
        if missing or extra:
            raise CoverageError(f"certificate misses vertices {missing[:5]} or names unknown ones {extra[:5]}")
    return Bipartition.from_clusters(
        [groups["A"][i] for i in sorted(groups["A"])], [groups["B"][i] for i in sorted(groups["B"])]
    )


def parse_certificate(path: str | os.PathLike, n: Optional[int] = None) -> Bipartition:
    with open(path, encoding="utf-8") as handle:
        return parse_certificate_text(handle.read(), n)


__all__ = [
    "format_certificate",
    "format_graph",
    "parse_certificate",
    "parse_certificate_text",
    "parse_graph_file",
    "parse_graph_text",
    "write_certificate",
    "write_graph_file",
]
