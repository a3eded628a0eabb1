import pytest
from hypothesis import given
from hypothesis import strategies as st

from dommedian.domgraph import build_dominating_graph
from dommedian.errors import (
    BadHeader,
    BadLength,
    InvalidEdge,
    NonPrintableByte,
    NonzeroPadding,
    ParseError,
)
from dommedian.graph import cycle_graph, new_graph, path_graph
from dommedian.graph_io import (
    parse_edgelist,
    parse_graph6,
    split_edgelist_blocks,
    write_dot,
    write_edgelist,
    write_graph6,
)


def _reference_graph6(n, edges):
    # straight transcription of the format: header, then bits x(i,j) i<j in column order
    bits = [int((i, j) in edges) for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6))
    return chr(63 + n) + body


@st.composite
def graphs(draw, max_n=16):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return new_graph(n, chosen)


def test_known_encodings(p2, c4):
    assert write_graph6(p2) == "A_"
    assert write_graph6(c4) == "Cl"
    assert write_graph6(new_graph(1, [])) == "@"
    assert parse_graph6("Cr").edges() == [(0, 1), (0, 2), (1, 3), (2, 3)]


def test_header_prefix_and_whitespace():
    assert parse_graph6(">>graph6<<A_\n") == path_graph(2)


@given(graphs())
def test_writer_matches_reference(g):
    assert write_graph6(g) == _reference_graph6(g.n, set(g.edges()))


@given(graphs())
def test_graph6_roundtrip(g):
    text = write_graph6(g)
    assert parse_graph6(text) == g
    assert write_graph6(parse_graph6(text)) == text


@given(graphs())
def test_edgelist_roundtrip(g):
    assert parse_edgelist(write_edgelist(g)) == g


@pytest.mark.parametrize(
    "line, exc",
    [
        ("", BadHeader),
        ("?", BadHeader),
        ("~~??", BadHeader),
        ("C", BadLength),
        ("Cll", BadLength),
        ("C\x10", NonPrintableByte),
        ("A`", NonzeroPadding),
    ],
)
def test_graph6_errors(line, exc):
    with pytest.raises(exc):
        parse_graph6(line)


def test_graph6_lenient_padding():
    assert parse_graph6("A`", lenient=True) == path_graph(2)


def test_edgelist_comments_and_blank_lines():
    g = parse_edgelist("# a path\nn 3\n\n0 1  # first\n1 2\n")
    assert g == path_graph(3)


@pytest.mark.parametrize(
    "text, exc, line",
    [
        ("n 3\n0 0\n", InvalidEdge, 2),
        ("n 3\n0 1\n1 5\n", InvalidEdge, 3),
        ("n 3\n0 x\n", ParseError, 2),
        ("n 3\n0 1 2\n", ParseError, 2),
        ("3\n", ParseError, 1),
    ],
)
def test_edgelist_errors_carry_line(text, exc, line):
    with pytest.raises(exc) as info:
        parse_edgelist(text)
    assert info.value.line == line


def test_edgelist_missing_header():
    with pytest.raises(ParseError):
        parse_edgelist("# nothing\n")


def test_split_blocks():
    text = write_edgelist(path_graph(2)) + write_edgelist(cycle_graph(3))
    blocks = split_edgelist_blocks(text)
    assert [parse_edgelist(b) for b in blocks] == [path_graph(2), cycle_graph(3)]


def test_dot_host(p2):
    dot = write_dot(p2)
    assert dot.startswith("graph G {")
    assert "0 -- 1;" in dot


def test_dot_domgraph(p2):
    dot = write_dot(build_dominating_graph(p2), name="D")
    assert dot.startswith("graph D {")
    assert '[label="{0,1}"]' in dot
    assert dot.count("--") == 2
