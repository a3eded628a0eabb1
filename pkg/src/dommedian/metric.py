"""Distance-based recognisers for median graphs and partial cubes.

Every function accepts either a host :class:`~dommedian.graph.Graph` or a
:class:`~dommedian.domgraph.DomGraph`; both expose ``order`` and
``neighbors(v)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Protocol

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from .errors import BudgetExceeded, DisconnectedTriple, NotPartialCube, TooManyClasses
from .graph import VertexSet

UNREACHABLE = -1
DEFAULT_BUDGET = 4096


class AnyGraph(Protocol):
    @property
    def order(self) -> int: ...

    def neighbors(self, v: int) -> list[int]: ...


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    n: int
    d: np.ndarray

    def __getitem__(self, key):
        return self.d[key]

    def connected(self) -> bool:
        return not (self.d == UNREACHABLE).any()


@dataclass(frozen=True, eq=False)
class ThetaRelation:
    """Djokovic-Winkler relation on the edge list ``edges`` (sorted pairs)."""

    edges: list[tuple[int, int]]
    related: np.ndarray

    def is_transitive(self) -> bool:
        _, comp = connected_components(csr_matrix(self.related), directed=False)
        return bool(np.array_equal(self.related, comp[:, None] == comp[None, :]))

    def classes(self) -> list[int]:
        """Class index per edge, numbered by first appearance in ``edges``."""
        _, comp = connected_components(csr_matrix(self.related), directed=False)
        renumber: dict[int, int] = {}
        return [renumber.setdefault(int(c), len(renumber)) for c in comp]


def _check_budget(graph: AnyGraph, budget: int | None) -> None:
    budget = DEFAULT_BUDGET if budget is None else budget
    if graph.order > budget:
        raise BudgetExceeded(f"order {graph.order} exceeds the metric budget of {budget}")


def _edges(graph: AnyGraph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(graph.order) for v in graph.neighbors(u) if u < v]


def all_pairs_distances(graph: AnyGraph) -> DistanceMatrix:
    n = graph.order
    edges = _edges(graph)
    if edges:
        rows, cols = np.array(edges).T
    else:
        rows = cols = np.zeros(0, dtype=np.int64)
    mat = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    raw = shortest_path(mat, method="D", directed=False, unweighted=True)
    d = np.where(np.isinf(raw), UNREACHABLE, raw).astype(np.int64)
    return DistanceMatrix(n, d)


def medians_of_triple(graph: AnyGraph, dist: DistanceMatrix, a: int, b: int, c: int) -> list[int]:
    d = dist.d
    if UNREACHABLE in (d[a, b], d[a, c], d[b, c]):
        raise DisconnectedTriple(f"({a},{b},{c}) spans more than one component")
    on_ab = d[a] + d[b] == d[a, b]
    on_ac = d[a] + d[c] == d[a, c]
    on_bc = d[b] + d[c] == d[b, c]
    return np.flatnonzero(on_ab & on_ac & on_bc).tolist()


def median_witness(graph: AnyGraph, *, budget: int | None = None) -> Optional[tuple[int, int, int]]:
    """First triple ``a <= b <= c`` without exactly one median, or ``None``.

    A disconnected graph yields ``(0, u, u)`` for the first ``u`` unreachable
    from vertex 0: no vertex lies on a shortest path between them.
    """
    _check_budget(graph, budget)
    dist = all_pairs_distances(graph)
    d = dist.d
    n = dist.n
    if not dist.connected():
        u = int(np.flatnonzero(d[0] == UNREACHABLE)[0])
        return 0, u, u
    for a in range(n):
        on_a = d[a][None, :] + d == d[a][:, None]  # on_a[b, m]: m on an a-b geodesic
        rest = np.arange(a, n)
        block = max(1, (1 << 22) // ((n - a) * n))
        for b0 in range(a, n, block):
            bs = np.arange(b0, min(n, b0 + block))
            on_bc = d[bs][:, None, :] + d[rest][None, :, :] == d[np.ix_(bs, rest)][:, :, None]
            hits = on_bc & on_a[bs][:, None, :] & on_a[rest][None, :, :]
            counts = hits.sum(axis=-1)
            bad = (counts != 1) & (rest[None, :] >= bs[:, None])
            if bad.any():
                i, j = np.argwhere(bad)[0]
                return a, int(bs[i]), int(rest[j])
    return None


def is_median_graph(graph: AnyGraph, *, budget: int | None = None) -> bool:
    return median_witness(graph, budget=budget) is None


def theta_relation(graph: AnyGraph, dist: DistanceMatrix | None = None) -> ThetaRelation:
    dist = all_pairs_distances(graph) if dist is None else dist
    d = dist.d
    edges = _edges(graph)
    if not edges:
        return ThetaRelation(edges, np.zeros((0, 0), dtype=bool))
    x, y = np.array(edges).T
    related = d[np.ix_(x, x)] + d[np.ix_(y, y)] != d[np.ix_(x, y)] + d[np.ix_(y, x)]
    return ThetaRelation(edges, related)


def _is_bipartite_connected(graph: AnyGraph, d: np.ndarray) -> bool:
    return all(d[0, u] != d[0, v] for u, v in _edges(graph))


def is_partial_cube(graph: AnyGraph, *, budget: int | None = None) -> bool:
    """Connected, bipartite, and the Djokovic-Winkler relation is transitive."""
    _check_budget(graph, budget)
    dist = all_pairs_distances(graph)
    if not dist.connected():
        return False
    if not _is_bipartite_connected(graph, dist.d):
        return False
    return theta_relation(graph, dist).is_transitive()


def hypercube_labeling(graph: AnyGraph, *, budget: int | None = None) -> list[VertexSet]:
    """Isometric hypercube labels, one coordinate per Theta class.

    Vertex 0 gets the empty label; coordinate ``c`` is set on the side of the
    class-``c`` cut that does not contain vertex 0.
    """
    _check_budget(graph, budget)
    dist = all_pairs_distances(graph)
    d = dist.d
    if not dist.connected() or not _is_bipartite_connected(graph, d):
        raise NotPartialCube("graph is disconnected or not bipartite")
    theta = theta_relation(graph, dist)
    if not theta.is_transitive():
        raise NotPartialCube("Theta relation is not transitive")
    classes = theta.classes()
    nclasses = max(classes, default=-1) + 1
    if nclasses > 64:
        raise TooManyClasses(f"{nclasses} Theta classes exceed 64 coordinates")
    labels = np.zeros(dist.n, dtype=np.uint64)
    seen = set()
    for (x, y), c in zip(theta.edges, classes):
        if c in seen:
            continue
        seen.add(c)
        if d[0, x] > d[0, y]:
            x, y = y, x
        far_side = d[:, y] < d[:, x]
        labels[far_side] |= np.uint64(1 << c)
    ham = np.bitwise_count(labels[:, None] ^ labels[None, :]).astype(np.int64)
    if not np.array_equal(ham, d):
        raise NotPartialCube("labelling is not isometric")
    return [int(v) for v in labels]
