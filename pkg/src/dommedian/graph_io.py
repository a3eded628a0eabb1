"""graph6, edge-list and DOT serialisation.

Only the short graph6 form is supported (one header byte, ``n <= 62``).
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterator

from .errors import (
    BadHeader,
    BadLength,
    GraphError,
    InvalidEdge,
    NonPrintableByte,
    NonzeroPadding,
    OrderOutOfRange,
    ParseError,
)
from .graph import Graph, format_set, new_graph

if TYPE_CHECKING:
    from .domgraph import DomGraph

GRAPH6_MAX_ORDER = 62


def _pairs(n: int) -> Iterator[tuple[int, int]]:
    # column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(line: str, *, lenient: bool = False) -> Graph:
    """Decode one graph6 line.

    With ``lenient=True`` nonzero padding bits are ignored instead of raising
    :class:`NonzeroPadding`.
    """
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise BadHeader("empty graph6 line")
    for pos, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise NonPrintableByte(f"byte {ord(ch)} at offset {pos} outside 63..126")
    n = ord(text[0]) - 63
    if n > GRAPH6_MAX_ORDER:
        raise BadHeader("long-form graph6 headers (n > 62) are not supported")
    if n == 0:
        raise BadHeader("graph6 header encodes an empty graph")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = text[1:]
    if len(body) != nbytes:
        raise BadLength(f"expected {nbytes} data bytes for n={n}, got {len(body)}")
    bits = 0
    for ch in body:
        bits = bits << 6 | (ord(ch) - 63)
    pad = nbytes * 6 - nbits
    if bits & ((1 << pad) - 1) and not lenient:
        raise NonzeroPadding("graph6 padding bits must be zero")
    bits >>= pad
    edges = []
    for k, (i, j) in enumerate(_pairs(n)):
        if bits >> (nbits - 1 - k) & 1:
            edges.append((i, j))
    return new_graph(n, edges)


def write_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_ORDER:
        raise OrderOutOfRange(f"graph6 short form holds at most {GRAPH6_MAX_ORDER} vertices")
    out = [chr(g.n + 63)]
    acc = 0
    nacc = 0
    for i, j in _pairs(g.n):
        acc = acc << 1 | (g.adj[i] >> j & 1)
        nacc += 1
        if nacc == 6:
            out.append(chr(acc + 63))
            acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


def parse_edgelist(text: str) -> Graph:
    """Parse ``n <count>`` followed by ``u v`` lines (0-based).

    Blank lines and ``#`` comments are skipped.
    """
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if n is None:
            if len(toks) != 2 or toks[0] != "n":
                raise ParseError(f"expected 'n <count>', got {raw!r}", lineno)
            try:
                n = int(toks[1])
            except ValueError:
                raise ParseError(f"bad vertex count {toks[1]!r}", lineno) from None
            if not 1 <= n <= 64:
                raise OrderOutOfRange(f"line {lineno}: order {n} outside 1..64")
            continue
        if len(toks) != 2:
            raise ParseError(f"expected 'u v', got {raw!r}", lineno)
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {raw!r}", lineno) from None
        if u == v:
            raise InvalidEdge(f"loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}", lineno)
        pairs.append((u, v))
    if n is None:
        raise ParseError("missing 'n <count>' header")
    return new_graph(n, pairs)


def write_edgelist(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def split_edgelist_blocks(text: str) -> list[str]:
    """Split a stream of edge-list graphs at each ``n <count>`` header."""
    blocks: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line.startswith("n ") or line == "n":
            blocks.append([raw])
        elif blocks:
            blocks[-1].append(raw)
        elif line:
            raise ParseError(f"edge line before any 'n <count>' header: {raw!r}")
    return ["\n".join(b) for b in blocks]


def write_dot(graph: Graph | DomGraph, *, name: str = "G") -> str:
    """DOT text for a host graph or a dominating graph.

    Dominating-graph vertices are labelled by their dominating set.
    """
    from .domgraph import DomGraph

    lines = [f"graph {name} {{"]
    if isinstance(graph, DomGraph):
        for i, lab in enumerate(graph.labels):
            lines.append(f'  {i} [label="{format_set(lab)}"];')
        edges = graph.edges()
    elif isinstance(graph, Graph):
        for v in range(graph.n):
            lines.append(f"  {v};")
        edges = graph.edges()
    else:
        raise GraphError(f"cannot render {type(graph).__name__} as DOT")
    for u, v in edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
