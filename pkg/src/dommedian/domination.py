"""Dominating sets, minimal dominating sets and the DM / MDScoMDS predicates.

Families are enumerated exhaustively over all ``2**n`` subsets with a
bit-parallel coverage table, so every function here is bounded by a subset
budget (``DEFAULT_BUDGET`` subsets unless overridden).

Families are returned in canonical order: ascending size, then ascending
numeric value of the bitmask.  All "first witness" outputs follow that order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from .errors import (
    BudgetExceeded,
    GraphError,
    IsolatedVertexPresent,
    PreconditionViolated,
    VertexNotInSet,
)
from .graph import (
    Graph,
    LeafStatus,
    VertexSet,
    closed_neighborhood,
    connected_components,
    format_set,
    has_isolated_vertex,
    is_c4,
    leaf_status,
    members,
    satisfies_leaf_condition,
    star,
)

DEFAULT_BUDGET = 1 << 16

Triple = tuple[VertexSet, VertexSet, VertexSet]


@dataclass(frozen=True)
class DomFamily:
    """A canonically ordered family of dominating sets of a host graph."""

    host: Graph
    members: tuple[VertexSet, ...]
    _index: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        index = frozenset(self.members)
        if len(index) != len(self.members):
            raise GraphError("dominating family contains duplicates")
        for s in self.members:
            if not is_dominating(self.host, s):
                raise GraphError(f"{format_set(s)} does not dominate the host")
        object.__setattr__(self, "_index", index)

    @property
    def host_order(self) -> int:
        return self.host.n

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.members)

    def __contains__(self, s: object) -> bool:
        return s in self._index

    def __getitem__(self, i: int) -> VertexSet:
        return self.members[i]


@dataclass(frozen=True)
class Classification:
    dm: bool
    mdscomds: bool
    leaf_condition: bool
    dm_witness: Optional[Triple] = None
    mdscomds_witness: Optional[VertexSet] = None

    def summary(self, witness: bool = False) -> str:
        words = [
            f"dm={str(self.dm).lower()}",
            f"mdscomds={str(self.mdscomds).lower()}",
            f"leaf_condition={str(self.leaf_condition).lower()}",
        ]
        if witness:
            if self.dm_witness is not None:
                words.append("dm_witness=" + ";".join(format_set(s) for s in self.dm_witness))
            if self.mdscomds_witness is not None:
                words.append("mdscomds_witness=" + format_set(self.mdscomds_witness))
        return " ".join(words)


def is_dominating(g: Graph, s: VertexSet) -> bool:
    covered = 0
    for v in members(s):
        covered |= g.adj[v] | (1 << v)
    return covered == g.vertices


def _check_budget(g: Graph, budget: int | None) -> None:
    budget = DEFAULT_BUDGET if budget is None else budget
    if g.n >= 63 or (1 << g.n) > budget:
        raise BudgetExceeded(f"2^{g.n} subsets exceeds the subset budget of {budget}")


@lru_cache(maxsize=8192)
def _tables(g: Graph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(dominating flag per subset, canonical Dom masks, canonical mDom masks)."""
    n = g.n
    cover = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        nv = np.int64(g.adj[v] | (1 << v))
        cover[1 << v: 2 << v] = cover[: 1 << v] | nv
    dom = cover == g.vertices
    masks = np.flatnonzero(dom).astype(np.int64)
    masks = masks[np.lexsort((masks, np.bitwise_count(masks)))]
    minimal = np.ones(len(masks), dtype=bool)
    for v in range(n):
        has_v = (masks >> v) & 1 == 1
        minimal &= ~(has_v & dom[masks & ~np.int64(1 << v)])
    mins = masks[minimal]
    for arr in (dom, masks, mins):
        arr.flags.writeable = False
    return dom, masks, mins


def dominating_table(g: Graph, budget: int | None = None) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    _check_budget(g, budget)
    return _tables(g)


def enumerate_dominating(g: Graph, k: int | None = None, *, budget: int | None = None) -> DomFamily:
    """All dominating sets of size at most ``k`` (default: the host order)."""
    _, masks, _ = dominating_table(g, budget)
    if k is not None:
        if k < 0:
            raise GraphError(f"size cap must be non-negative, got {k}")
        masks = masks[np.bitwise_count(masks) <= k]
    return DomFamily(g, tuple(int(m) for m in masks))


def enumerate_minimal_dominating(g: Graph, *, budget: int | None = None) -> DomFamily:
    _, _, mins = dominating_table(g, budget)
    return DomFamily(g, tuple(int(m) for m in mins))


def domination_number(g: Graph, *, budget: int | None = None) -> int:
    _, masks, _ = dominating_table(g, budget)
    return int(masks[0]).bit_count()


def minimum_dominating_sets(g: Graph, *, budget: int | None = None) -> list[VertexSet]:
    _, masks, _ = dominating_table(g, budget)
    sizes = np.bitwise_count(masks)
    return [int(m) for m in masks[sizes == sizes[0]]]


def inverse_dominating_pair(g: Graph, *, budget: int | None = None) -> tuple[VertexSet, VertexSet]:
    """A minimum dominating set D and a smallest dominating B disjoint from it.

    Ties are broken by canonical order: the first D reaching the global
    minimum of ``|B|`` wins, and B is the canonically first one for that D.
    """
    if has_isolated_vertex(g):
        raise IsolatedVertexPresent("inverse domination needs a graph without isolated vertices")
    _, masks, _ = dominating_table(g, budget)
    best = None
    for d in minimum_dominating_sets(g, budget=budget):
        # canonical order is by size, so the first disjoint hit is smallest
        disjoint = masks[(masks & d) == 0]
        b = int(disjoint[0])
        if best is None or b.bit_count() < best[1].bit_count():
            best = (d, b)
    assert best is not None
    return best


def inverse_domination_number(g: Graph, *, budget: int | None = None) -> int:
    return inverse_dominating_pair(g, budget=budget)[1].bit_count()


def private_neighbors(g: Graph, d: VertexSet, v: int) -> VertexSet:
    """Vertices dominated by ``v`` and by no other member of ``d``."""
    if not d >> v & 1:
        raise VertexNotInSet(f"vertex {v} is not in {format_set(d)}")
    others = 0
    for u in members(d & ~(1 << v)):
        others |= closed_neighborhood(g, u)
    return closed_neighborhood(g, v) & ~others


def mdscomds_witness(g: Graph, *, budget: int | None = None) -> Optional[VertexSet]:
    """First minimal dominating set whose complement is not minimal dominating."""
    _, _, mins = dominating_table(g, budget)
    minimal = set(int(m) for m in mins)
    full = g.vertices
    for m in mins:
        if full ^ int(m) not in minimal:
            return int(m)
    return None


def is_mdscomds(g: Graph, *, budget: int | None = None) -> bool:
    return mdscomds_witness(g, budget=budget) is None


def _first_bad_triple(family: np.ndarray, dom: np.ndarray) -> Optional[Triple]:
    # triples i <= j <= l in lexicographic index order, scanned in blocks
    m = len(family)
    for i in range(m):
        a = family[i]
        rest = family[i:]
        block = max(1, (1 << 20) // len(rest))
        for j0 in range(0, len(rest), block):
            b = rest[j0:j0 + block, None]
            c = rest[None, :]
            s = (a & b) | (a & c) | (b & c)
            bad = ~dom[s]
            bad &= np.arange(len(rest))[None, :] >= np.arange(j0, j0 + len(b))[:, None]
            if bad.any():
                j, l = np.argwhere(bad)[0]
                return int(a), int(rest[j0 + j]), int(rest[l])
    return None


def dm_star_witness(g: Graph, *, budget: int | None = None) -> Optional[Triple]:
    """First triple of minimal dominating sets whose majority set fails to dominate."""
    dom, _, mins = dominating_table(g, budget)
    return _first_bad_triple(mins, dom)


def is_dm_star(g: Graph, *, budget: int | None = None) -> bool:
    return dm_star_witness(g, budget=budget) is None


def all_dominating_star_witness(g: Graph, *, budget: int | None = None) -> Optional[Triple]:
    """Same test as :func:`dm_star_witness` over every dominating triple."""
    dom, masks, _ = dominating_table(g, budget)
    return _first_bad_triple(masks, dom)


def is_dm_characterized(g: Graph) -> bool:
    """No vertex is a non-isolated non-leaf with no leaf neighbour."""
    return LeafStatus.NEITHER not in leaf_status(g)


def is_mdscomds_characterized(g: Graph) -> bool:
    """Every component is a 4-cycle or satisfies the leaf condition.

    The condition is checked per component: a 4-cycle component next to, say,
    a single edge still gives a graph whose minimal dominating sets all have
    minimal dominating complements.
    """
    if has_isolated_vertex(g):
        return False
    for comp in connected_components(g).vertex_sets():
        sub, _ = g.induced_subgraph(comp)
        if not (is_c4(sub) or satisfies_leaf_condition(sub)):
            return False
    return True


def classify(g: Graph, *, budget: int | None = None) -> Classification:
    """Decide DM and MDScoMDS by enumeration, and the leaf condition directly."""
    dm_w = dm_star_witness(g, budget=budget)
    md_w = mdscomds_witness(g, budget=budget)
    return Classification(
        dm=dm_w is None,
        mdscomds=md_w is None,
        leaf_condition=satisfies_leaf_condition(g),
        dm_witness=dm_w,
        mdscomds_witness=md_w,
    )


def find_non_median_witness(g: Graph, *, budget: int | None = None) -> Triple:
    """Dominating sets A, B, C whose majority set does not dominate.

    Built around the first vertex ``v`` that is neither a leaf nor adjacent to
    one.  With ``L`` the vertices at distance at least two from ``v`` and the
    neighbours of ``v`` split into those with (``h1``) and without (``h2``) a
    neighbour in ``L``, three shapes of witness cover every case.
    """
    if has_isolated_vertex(g):
        raise PreconditionViolated("graph has an isolated vertex")
    if is_c4(g):
        raise PreconditionViolated("C4 has no such witness construction")
    status = leaf_status(g)
    try:
        v = status.index(LeafStatus.NEITHER)
    except ValueError:
        raise PreconditionViolated("every vertex is a leaf or adjacent to a leaf") from None

    nbrs = g.adj[v]
    outer = g.vertices & ~(nbrs | (1 << v))
    h1 = 0
    for w in members(nbrs):
        if g.adj[w] & outer:
            h1 |= 1 << w
    h2 = nbrs & ~h1

    a = outer | (1 << v)
    if h2 == 0:
        w1, w2 = members(nbrs)[:2]
        b, c = outer | (1 << w1), outer | (1 << w2)
    elif all(g.adj[u] & h1 for u in members(h2)):
        b, c = outer | h1, outer | h2
    else:
        sub, back = g.induced_subgraph(h2)
        mins = enumerate_minimal_dominating(sub, budget=budget).members
        m1, m2 = (sum(1 << back[i] for i in members(m)) for m in mins[:2])
        b, c = outer | m1, outer | m2

    if not (is_dominating(g, a) and is_dominating(g, b) and is_dominating(g, c)):
        raise AssertionError("witness construction produced a non-dominating set")
    if is_dominating(g, star(a, b, c)):
        raise AssertionError("witness construction produced a dominating majority set")
    return a, b, c
