"""Host graphs as per-vertex adjacency bitmasks.

A vertex set is a plain ``int`` used as a bitmask: bit ``v`` is set iff vertex
``v`` belongs to the set.  Graphs carry at most :data:`CAPACITY` vertices so
every vertex set fits in one 64-bit word.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapacityExceeded, InvalidEdge, OrderOutOfRange, VertexOutOfRange

CAPACITY = 64

VertexSet = int


def bit(v: int) -> VertexSet:
    return 1 << v


def full_set(n: int) -> VertexSet:
    return (1 << n) - 1


def popcount(s: VertexSet) -> int:
    return s.bit_count()


def members(s: VertexSet) -> list[int]:
    """Vertices of ``s`` in ascending order."""
    out = []
    while s:
        low = s & -s
        out.append(low.bit_length() - 1)
        s ^= low
    return out


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    s = 0
    for v in vertices:
        s |= 1 << v
    return s


def format_set(s: VertexSet) -> str:
    """Render as a sorted brace list, e.g. ``{0,2}``."""
    return "{" + ",".join(str(v) for v in members(s)) + "}"


def parse_set(text: str) -> VertexSet:
    """Inverse of :func:`format_set`; braces are optional."""
    body = text.strip().strip("{}").strip()
    if not body:
        return 0
    return vertex_set(int(tok) for tok in body.split(","))


def star(a: VertexSet, b: VertexSet, c: VertexSet) -> VertexSet:
    """Majority of three sets: vertices lying in at least two of them."""
    return (a & b) | (a & c) | (b & c)


class LeafStatus(enum.Enum):
    ISOLATED = "isolated"
    LEAF = "leaf"
    ADJACENT_TO_LEAF = "adjacent_to_leaf"
    NEITHER = "neither"


@dataclass(frozen=True)
class ComponentPartition:
    labels: tuple[int, ...]
    count: int

    def members(self, index: int) -> VertexSet:
        return vertex_set(v for v, c in enumerate(self.labels) if c == index)

    def vertex_sets(self) -> list[VertexSet]:
        return [self.members(i) for i in range(self.count)]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the open neighbourhood of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= CAPACITY:
            raise OrderOutOfRange(f"order must be in 1..{CAPACITY}, got {self.n}")
        if len(self.adj) != self.n:
            raise InvalidEdge(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        mask = full_set(self.n)
        for v, row in enumerate(self.adj):
            if row & ~mask:
                raise InvalidEdge(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise InvalidEdge(f"loop at vertex {v}")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise InvalidEdge(f"asymmetric adjacency between {u} and {v}")

    @property
    def order(self) -> int:
        return self.n

    @property
    def vertices(self) -> VertexSet:
        return full_set(self.n)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{self.n - 1}")

    def degree(self, v: int) -> int:
        self._check(v)
        return popcount(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return members(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.adj[u]) if u < v]

    @property
    def size(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def induced_subgraph(self, vertices: VertexSet) -> tuple[Graph, list[int]]:
        """Subgraph induced on ``vertices``, relabelled 0..k-1.

        Returns the subgraph together with the list mapping new indices to old.
        """
        keep = members(vertices & self.vertices)
        if not keep:
            raise OrderOutOfRange("induced subgraph on an empty vertex set")
        pos = {v: i for i, v in enumerate(keep)}
        adj = tuple(vertex_set(pos[u] for u in members(self.adj[v] & vertices)) for v in keep)
        return Graph(len(keep), adj), keep

    def add_pendants(self, w: int, count: int = 1) -> Graph:
        """Append ``count`` new vertices, each adjacent only to ``w``."""
        self._check(w)
        if self.n + count > CAPACITY:
            raise CapacityExceeded(f"{self.n} + {count} vertices exceeds {CAPACITY}")
        adj = list(self.adj)
        for i in range(count):
            z = self.n + i
            adj[w] |= 1 << z
            adj.append(1 << w)
        return Graph(self.n + count, tuple(adj))

    def delete_vertex(self, v: int) -> Graph:
        self._check(v)
        sub, _ = self.induced_subgraph(self.vertices & ~(1 << v))
        return sub

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            adj[perm[v]] = vertex_set(perm[u] for u in members(self.adj[v]))
        return Graph(self.n, tuple(adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 1 <= n <= CAPACITY:
        raise OrderOutOfRange(f"order must be in 1..{CAPACITY}, got {n}")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise InvalidEdge(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return new_graph(n, [])


def path_graph(n: int) -> Graph:
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return new_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return new_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return new_graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return new_graph(g.n + h.n, g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()])


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    g._check(v)
    return g.adj[v] | (1 << v)


def leaves(g: Graph) -> VertexSet:
    return vertex_set(v for v in range(g.n) if popcount(g.adj[v]) == 1)


def leaf_status(g: Graph) -> list[LeafStatus]:
    leafset = leaves(g)
    out = []
    for v in range(g.n):
        if g.adj[v] == 0:
            out.append(LeafStatus.ISOLATED)
        elif leafset >> v & 1:
            out.append(LeafStatus.LEAF)
        elif g.adj[v] & leafset:
            out.append(LeafStatus.ADJACENT_TO_LEAF)
        else:
            out.append(LeafStatus.NEITHER)
    return out


def isolated_vertices(g: Graph) -> VertexSet:
    return vertex_set(v for v in range(g.n) if g.adj[v] == 0)


def has_isolated_vertex(g: Graph) -> bool:
    return any(row == 0 for row in g.adj)


def satisfies_leaf_condition(g: Graph) -> bool:
    """Every vertex is a leaf or adjacent to a leaf (isolated vertices fail)."""
    return all(
        s in (LeafStatus.LEAF, LeafStatus.ADJACENT_TO_LEAF) for s in leaf_status(g)
    )


def connected_components(g: Graph) -> ComponentPartition:
    labels = [-1] * g.n
    count = 0
    for root in range(g.n):
        if labels[root] != -1:
            continue
        labels[root] = count
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in members(g.adj[v]):
                if labels[u] == -1:
                    labels[u] = count
                    queue.append(u)
        count += 1
    return ComponentPartition(tuple(labels), count)


def is_connected_graph(g: Graph) -> bool:
    return connected_components(g).count == 1


def corona_k1(g: Graph) -> Graph:
    """Attach one pendant vertex ``n + i`` to every vertex ``i``."""
    if 2 * g.n > CAPACITY:
        raise CapacityExceeded(f"corona of a {g.n}-vertex graph exceeds {CAPACITY} vertices")
    return new_graph(2 * g.n, g.edges() + [(i, g.n + i) for i in range(g.n)])


def leaf_completion(g: Graph) -> Graph:
    """Pend a new leaf at every isolated vertex and every NEITHER vertex.

    The result has no isolated vertices and satisfies the leaf condition, and
    contains ``g`` as the induced subgraph on indices ``0..n-1``.
    """
    needy = [
        v for v, s in enumerate(leaf_status(g))
        if s in (LeafStatus.NEITHER, LeafStatus.ISOLATED)
    ]
    if g.n + len(needy) > CAPACITY:
        raise CapacityExceeded(f"leaf completion needs {g.n + len(needy)} vertices")
    return new_graph(g.n + len(needy), g.edges() + [(v, g.n + i) for i, v in enumerate(needy)])


def is_c4(g: Graph) -> bool:
    # a 2-regular graph on 4 vertices can only be the 4-cycle
    return g.n == 4 and all(popcount(row) == 2 for row in g.adj)


def iter_subsets(s: VertexSet) -> Iterator[VertexSet]:
    """All subsets of ``s``, including ``0`` and ``s`` itself."""
    sub = s
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & s
