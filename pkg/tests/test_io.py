from pathlib import Path

import pytest
from hypothesis import given

from conftest import FIXTURES, graphs
from graphpart import Bipartition, brute_subcoloring, build_graph
from graphpart.errors import CoverageError, ParseError
from graphpart.io import (
    format_certificate,
    format_graph,
    parse_certificate,
    parse_certificate_text,
    parse_graph_file,
    parse_graph_text,
    write_certificate,
)

K3 = build_graph(3, [(0, 1), (1, 2), (0, 2)])
C4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])

# expected line of the reported error, per malformed fixture
MALFORMED = {
    "vertex_past_n.gr": 2,
    "edge_count_short.gr": 1,
    "short_header.gr": 1,
    "wrong_header_kind.gr": 1,
    "self_loop.gr": 2,
    "non_integer.gr": 2,
    "two_headers.gr": 2,
    "unknown_line.gr": 2,
    "empty.gr": 1,
    "edge_list_three_tokens.txt": 2,
    "edge_list_out_of_range.txt": 2,
    "edge_list_bad_count.txt": 1,
    "edge_list_negative.txt": 2,
}


def test_dimacs_triangle():
    assert parse_graph_file(FIXTURES / "k3.gr") == K3


def test_edge_list_cycle():
    assert parse_graph_file(FIXTURES / "c4.txt") == C4


def test_corpus_is_complete():
    assert sorted(p.name for p in (FIXTURES / "malformed").iterdir()) == sorted(MALFORMED)


@pytest.mark.parametrize("name", sorted(MALFORMED))
def test_malformed_files_report_line(name):
    with pytest.raises(ParseError) as info:
        parse_graph_file(FIXTURES / "malformed" / name)
    assert info.value.line == MALFORMED[name]
    assert f"line {MALFORMED[name]}" in str(info.value)


def test_missing_file():
    with pytest.raises(OSError):
        parse_graph_file(FIXTURES / "nope.gr")


@given(graphs(max_n=9))
def test_graph_roundtrip_both_formats(g):
    assert parse_graph_text(format_graph(g, "dimacs")) == g
    assert parse_graph_text(format_graph(g, "edges")) == g


def test_clique_certificate_rows(tmp_path):
    cert = Bipartition.from_clusters([[0, 1, 2]], [])
    assert format_certificate(cert) == "side A 0 0\nside A 0 1\nside A 0 2\n"
    write_certificate(cert, tmp_path / "c.txt")
    assert parse_certificate(tmp_path / "c.txt", 3) == cert


def test_empty_certificate(tmp_path):
    write_certificate(Bipartition.empty(), tmp_path / "e.txt")
    assert (tmp_path / "e.txt").read_text() == ""
    assert parse_certificate(tmp_path / "e.txt", 0) == Bipartition.empty()


def test_duplicate_vertex_in_certificate():
    with pytest.raises(CoverageError):
        parse_certificate_text("side A 0 5\nside B 0 5\n")


def test_certificate_coverage_against_n():
    with pytest.raises(CoverageError):
        parse_certificate_text("side A 0 0\n", 2)
    with pytest.raises(CoverageError):
        parse_certificate_text("side A 0 0\nside B 0 3\n", 1)


def test_malformed_certificate_line():
    with pytest.raises(ParseError) as info:
        parse_certificate_text("side A 0 0\nside C 0 1\n")
    assert info.value.line == 2


@given(graphs(max_n=9))
def test_certificate_roundtrip(g):
    cert = brute_subcoloring(g, None)
    if cert is not None:
        assert parse_certificate_text(format_certificate(cert), g.n).canonical() == cert.canonical()
