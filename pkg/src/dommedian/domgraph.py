"""The k-dominating graph D_k(G) and its shortest-path structure."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .domination import DEFAULT_BUDGET, dominating_table
from .errors import BudgetExceeded, EmptyGraph, GraphError, NotFullDominatingGraph
from .graph import Graph, VertexSet, members, star

DEFAULT_VERTEX_BUDGET = 1 << 16


@dataclass(frozen=True, eq=False)
class DomGraph:
    """Vertices are dominating sets of ``host`` of size at most ``k``.

    Two vertices are adjacent iff their labels differ in exactly one element.
    ``labels`` are in canonical order and ``adjacency[i]`` is sorted.
    """

    host: Graph
    k: int
    labels: tuple[VertexSet, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def size(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    @property
    def is_full(self) -> bool:
        return self.k >= self.host.n

    def neighbors(self, i: int) -> list[int]:
        return list(self.adjacency[i])

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.adjacency) for j in row if i < j]

    @cached_property
    def index(self) -> dict[VertexSet, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index_of(self, label: VertexSet) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise GraphError(f"{label:#x} is not a vertex of this dominating graph") from None


def build_dominating_graph(
    g: Graph,
    k: int | None = None,
    *,
    budget: int | None = None,
    vertex_budget: int = DEFAULT_VERTEX_BUDGET,
) -> DomGraph:
    """Build D_k(G); ``k=None`` gives the full dominating graph D(G)."""
    k = g.n if k is None else k
    if k < 0:
        raise GraphError(f"size cap must be non-negative, got {k}")
    _, masks, _ = dominating_table(g, DEFAULT_BUDGET if budget is None else budget)
    masks = masks[np.bitwise_count(masks) <= k]
    if len(masks) > vertex_budget:
        raise BudgetExceeded(f"{len(masks)} dominating sets exceeds the vertex budget of {vertex_budget}")

    # each edge joins X to X + {v}; look the larger label up in a dense index
    where = np.full(1 << g.n, -1, dtype=np.int64)
    where[masks] = np.arange(len(masks))
    src, dst = [], []
    for v in range(g.n):
        bit = np.int64(1 << v)
        lacking = np.flatnonzero((masks & bit) == 0)
        target = where[masks[lacking] | bit]
        hit = target >= 0
        src.append(lacking[hit])
        dst.append(target[hit])
    src_a = np.concatenate(src) if src else np.zeros(0, dtype=np.int64)
    dst_a = np.concatenate(dst) if dst else np.zeros(0, dtype=np.int64)
    rows: list[list[int]] = [[] for _ in range(len(masks))]
    for a, b in zip(src_a.tolist(), dst_a.tolist()):
        rows[a].append(b)
        rows[b].append(a)
    return DomGraph(
        host=g,
        k=k,
        labels=tuple(int(m) for m in masks),
        adjacency=tuple(tuple(sorted(r)) for r in rows),
    )


def _require_full(h: DomGraph) -> None:
    if not h.is_full:
        raise NotFullDominatingGraph(f"k={h.k} is below the host order {h.host.n}")


def geodesic(h: DomGraph, i: int, j: int) -> list[int]:
    """Shortest path from vertex ``i`` to ``j`` through the union of their labels.

    Elements of ``label(j) - label(i)`` are added in ascending order, then
    elements of ``label(i) - label(j)`` are removed in ascending order.  Every
    intermediate set contains one endpoint, so it dominates.
    """
    _require_full(h)
    d1, d2 = h.labels[i], h.labels[j]
    path = [i]
    cur = d1
    for v in members(d2 & ~d1):
        cur |= 1 << v
        path.append(h.index_of(cur))
    for v in members(d1 & ~d2):
        cur &= ~(1 << v)
        path.append(h.index_of(cur))
    return path


def median_candidate(h: DomGraph, i: int, j: int, l: int) -> VertexSet:
    return star(h.labels[i], h.labels[j], h.labels[l])


def is_connected(h: DomGraph) -> bool:
    if h.order == 0:
        raise EmptyGraph("the dominating graph has no vertices")
    seen = [False] * h.order
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        v = queue.popleft()
        for u in h.adjacency[v]:
            if not seen[u]:
                seen[u] = True
                reached += 1
                queue.append(u)
    return reached == h.order


def hamming_matrix(labels) -> np.ndarray:
    lab = np.asarray(labels, dtype=np.uint64)
    return np.bitwise_count(lab[:, None] ^ lab[None, :]).astype(np.int64)


def check_hamming_isometry(h: DomGraph) -> bool:
    """True iff graph distance equals label Hamming distance for every pair."""
    from .metric import all_pairs_distances

    _require_full(h)
    dist = all_pairs_distances(h)
    return bool(np.array_equal(dist.d, hamming_matrix(h.labels)))


def summary(h: DomGraph, *, stats: bool = False) -> str:
    words = [f"order={h.order}", f"size={h.size}"]
    if stats:
        words.append(f"connected={str(is_connected(h)).lower()}" if h.order else "connected=false")
        if h.is_full:
            words.append(f"isometric={str(check_hamming_isometry(h)).lower()}")
        else:
            words.append("isometric=n/a")
    return " ".join(words)
