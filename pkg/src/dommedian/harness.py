"""Exhaustive and sampled sweeps re-checking the characterisation results.

Each ``verify_*`` function returns a :class:`Report`.  Sweeps run over all
labelled graphs of each order (by upper-triangle bit counter) and optionally
over seeded random samples.  Work is split into fixed-size chunks that are
independent of the worker count, so reports are identical for any ``jobs``.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator, Optional, Sequence

from .domgraph import build_dominating_graph, check_hamming_isometry, is_connected
from .domination import (
    all_dominating_star_witness,
    dm_star_witness,
    domination_number,
    enumerate_dominating,
    enumerate_minimal_dominating,
    inverse_domination_number,
    is_dm_characterized,
    is_dm_star,
    is_mdscomds,
    is_mdscomds_characterized,
)
from .errors import OrderTooLarge
from .graph import (
    Graph,
    corona_k1,
    cycle_graph,
    has_isolated_vertex,
    leaf_completion,
    leaves,
    members,
    new_graph,
    path_graph,
    popcount,
    satisfies_leaf_condition,
)
from .graph_io import write_graph6
from .metric import is_median_graph, is_partial_cube

MAX_SWEEP_ORDER = 7
MAX_ISO_ORDER = 12
CHUNK = 2048

C4 = cycle_graph(4)

# the 7-vertex graph with gamma + inverse gamma = n that fails the leaf condition:
# triangle a,b,c (0,1,2) with pendants d,e at a and f,g at b
COR_3_4_GRAPH = new_graph(7, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6)])

SKIP = object()


@dataclass
class Report:
    name: str
    checked: int = 0
    failures: int = 0
    first_counterexample: Optional[str] = None
    detail: Optional[str] = None
    elapsed: float = 0.0
    params: dict = field(default_factory=dict)
    _first_index: Optional[int] = field(default=None, repr=False)

    def record(self, index: int, g: Graph, outcome) -> None:
        if outcome is SKIP:
            return
        self.checked += 1
        if outcome is None:
            return
        self.failures += 1
        if self._first_index is None or index < self._first_index:
            self._first_index = index
            self.first_counterexample = write_graph6(g)
            self.detail = str(outcome)

    def merge(self, other: Report) -> Report:
        self.checked += other.checked
        self.failures += other.failures
        if other._first_index is not None and (
            self._first_index is None or other._first_index < self._first_index
        ):
            self._first_index = other._first_index
            self.first_counterexample = other.first_counterexample
            self.detail = other.detail
        return self

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_text(self) -> str:
        """Machine-readable ``key=value`` lines (no timing, so output is reproducible)."""
        head = [f"check={self.name}"]
        head += [f"{k}={v}" for k, v in self.params.items()]
        head += [f"checked={self.checked}", f"failures={self.failures}"]
        lines = [" ".join(head)]
        if self.first_counterexample is not None:
            lines.append(f"counterexample={self.first_counterexample} detail={self.detail}")
        return "\n".join(lines) + "\n"

    def human(self) -> str:
        verdict = "ok" if self.ok else f"FAILED ({self.failures})"
        return f"{self.name}: {self.checked} instances, {verdict}, {self.elapsed:.2f}s"


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_index(n: int, index: int) -> Graph:
    """Labelled graph whose upper-triangle bits (graph6 column order) spell ``index``."""
    return new_graph(n, [p for k, p in enumerate(_pairs(n)) if index >> k & 1])


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    if not 1 <= n <= MAX_SWEEP_ORDER:
        raise OrderTooLarge(f"labelled enumeration supports orders 1..{MAX_SWEEP_ORDER}, got {n}")
    for index in range(1 << (n * (n - 1) // 2)):
        yield graph_from_index(n, index)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking search for an adjacency-preserving bijection."""
    if g.n > MAX_ISO_ORDER or h.n > MAX_ISO_ORDER:
        raise OrderTooLarge(f"isomorphism test supports orders up to {MAX_ISO_ORDER}")
    if g.n != h.n or g.size != h.size:
        return False
    gdeg = [popcount(r) for r in g.adj]
    hdeg = [popcount(r) for r in h.adj]
    if sorted(gdeg) != sorted(hdeg):
        return False
    n = g.n
    order = sorted(range(n), key=lambda v: (-gdeg[v], v))
    image = [-1] * n
    used = 0

    def extend(pos: int) -> bool:
        nonlocal used
        if pos == n:
            return True
        v = order[pos]
        for w in range(n):
            if used >> w & 1 or hdeg[w] != gdeg[v]:
                continue
            if any(
                ((g.adj[v] >> u) & 1) != ((h.adj[w] >> image[u]) & 1)
                for u in order[:pos]
            ):
                continue
            image[v] = w
            used |= 1 << w
            if extend(pos + 1):
                return True
            used &= ~(1 << w)
            image[v] = -1
        return False

    return extend(0)


def domgraph_as_graph(g: Graph) -> Graph:
    h = build_dominating_graph(g)
    return new_graph(h.order, h.edges())


# -- sweep machinery ---------------------------------------------------------

Check = Callable[[Graph], object]


def _run_exhaustive_chunk(check: Check, n: int, lo: int, hi: int, base: int, name: str) -> Report:
    rep = Report(name)
    for index in range(lo, hi):
        g = graph_from_index(n, index)
        rep.record(base + index, g, check(g))
    return rep


def _run_sample_chunk(check: Check, graphs: Sequence[Graph], base: int, name: str) -> Report:
    rep = Report(name)
    for i, g in enumerate(graphs):
        rep.record(base + i, g, check(g))
    return rep


def _sweep(
    name: str,
    check: Check,
    max_n: int,
    *,
    min_n: int = 1,
    samples: Sequence[Graph] = (),
    jobs: int = 1,
    params: dict | None = None,
) -> Report:
    if not 1 <= max_n <= MAX_SWEEP_ORDER:
        raise OrderTooLarge(f"sweeps support orders 1..{MAX_SWEEP_ORDER}, got {max_n}")
    start = time.perf_counter()
    tasks = []
    base = 0
    for n in range(min_n, max_n + 1):
        total = 1 << (n * (n - 1) // 2)
        for lo in range(0, total, CHUNK):
            tasks.append((_run_exhaustive_chunk, (check, n, lo, min(total, lo + CHUNK), base, name)))
        base += total
    for lo in range(0, len(samples), CHUNK // 8):
        chunk = list(samples[lo: lo + CHUNK // 8])
        tasks.append((_run_sample_chunk, (check, chunk, base + lo, name)))

    report = Report(name, params=dict(params or {}))
    if jobs <= 1 or len(tasks) == 1:
        parts = [fn(*args) for fn, args in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(fn, *args) for fn, args in tasks]
            parts = [f.result() for f in futures]
    for part in parts:
        report.merge(part)
    report.elapsed = time.perf_counter() - start
    return report


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return new_graph(n, [pair for pair in _pairs(n) if rng.random() < p])


# -- individual checks (module level so worker processes can unpickle them) ---

def _check_thm_3_1(g: Graph):
    if has_isolated_vertex(g):
        return SKIP
    dm = is_dm_star(g)
    md = is_mdscomds(g)
    leafy = satisfies_leaf_condition(g)
    if g.n == 4 and is_isomorphic(g, C4):
        if md and not dm and not leafy:
            return None
        return f"C4 boundary: dm={dm} mdscomds={md} leaf={leafy}"
    if dm == md == leafy:
        return None
    return f"dm={dm} mdscomds={md} leaf={leafy}"


def _has_c4_component(g: Graph) -> bool:
    return any(is_isomorphic(c, C4) for c in _component_graphs(g) if c.n == 4)


def _check_thm_3_1_components(g: Graph):
    # C4 excluded per component: DM and the leaf condition still agree, and
    # MDScoMDS holds iff every component is C4 or satisfies the leaf condition
    if has_isolated_vertex(g):
        return SKIP
    dm = is_dm_star(g)
    md = is_mdscomds(g)
    leafy = satisfies_leaf_condition(g)
    comps = _component_graphs(g)
    expect_md = all(
        (c.n == 4 and is_isomorphic(c, C4)) or satisfies_leaf_condition(c) for c in comps
    )
    if dm == leafy and md == expect_md and (dm or not md or _has_c4_component(g)):
        return None
    return f"dm={dm} mdscomds={md} leaf={leafy} expected_mdscomds={expect_md}"


def _check_prop_2_1(g: Graph):
    median = is_median_graph(build_dominating_graph(g))
    minimal = dm_star_witness(g) is None
    every = all_dominating_star_witness(g) is None
    if median == minimal == every:
        return None
    return f"median={median} minimal_star={minimal} dominating_star={every}"


def _check_thm_3_6(g: Graph):
    h = build_dominating_graph(g)
    iso = check_hamming_isometry(h)
    pc = is_partial_cube(h)
    if iso and pc:
        return None
    return f"isometric={iso} partial_cube={pc}"


def _product_family(g: Graph, minimal: bool) -> set[int]:
    from .graph import connected_components

    parts = []
    for comp in connected_components(g).vertex_sets():
        sub, back = g.induced_subgraph(comp)
        fam = enumerate_minimal_dominating(sub) if minimal else enumerate_dominating(sub)
        parts.append([sum(1 << back[i] for i in members(s)) for s in fam])
    return {sum(choice) for choice in product(*parts)}


def _component_graphs(g: Graph) -> list[Graph]:
    from .graph import connected_components

    return [g.induced_subgraph(c)[0] for c in connected_components(g).vertex_sets()]


def _check_lemmas(g: Graph):
    problems = []
    # (a) component decomposition of Dom and mDom
    if _product_family(g, False) != set(enumerate_dominating(g)):
        problems.append("(a) Dom is not the componentwise product")
    if _product_family(g, True) != set(enumerate_minimal_dominating(g)):
        problems.append("(a) mDom is not the componentwise product")
    # (b) DM and MDScoMDS are componentwise
    comps = _component_graphs(g)
    dm = is_dm_star(g)
    if dm != all(is_dm_star(c) for c in comps):
        problems.append("(b) DM differs from componentwise DM")
    if is_mdscomds(g) != all(is_mdscomds(c) for c in comps):
        problems.append("(b) MDScoMDS differs from componentwise MDScoMDS")
    # (c) pendants next to an existing leaf never change DM, in either direction
    leafset = leaves(g)
    supports = sorted({members(g.adj[v])[0] for v in members(leafset)})
    for w in supports:
        for t in (1, 2, 3):
            if is_dm_star(g.add_pendants(w, t)) != dm:
                problems.append(f"(c) adding {t} pendants at {w} changed DM")
        sibling_leaves = members(g.adj[w] & leafset)
        if len(sibling_leaves) >= 2 and g.n >= 2:
            if is_dm_star(g.delete_vertex(sibling_leaves[-1])) != dm:
                problems.append(f"(c) removing leaf {sibling_leaves[-1]} at {w} changed DM")
    # (d) pendants at w preserve DM when every neighbour of w has another leaf neighbour
    if dm:
        for w in range(g.n):
            if all(g.adj[u] & leafset & ~(1 << w) for u in members(g.adj[w])):
                for t in (1, 2, 3):
                    if not is_dm_star(g.add_pendants(w, t)):
                        problems.append(f"(d) adding {t} pendants at {w} broke DM")
    if g.size >= 1:
        mins = enumerate_minimal_dominating(g)
        # (e) at least two minimal dominating sets
        if len(mins) < 2:
            problems.append("(e) fewer than two minimal dominating sets")
        # (f) D_k with k the largest minimal size is disconnected, M isolated
        k = max(popcount(m) for m in mins)
        h = build_dominating_graph(g, k)
        largest = next(m for m in reversed(mins.members) if popcount(m) == k)
        if h.order < 2 or is_connected(h):
            problems.append(f"(f) D_{k} is connected")
        elif h.adjacency[h.index_of(largest)]:
            problems.append(f"(f) largest minimal set is not isolated in D_{k}")
    return "; ".join(problems) if problems else None


def _check_cor_3_4(g: Graph):
    if has_isolated_vertex(g):
        return SKIP
    if not (satisfies_leaf_condition(g) or (g.n == 4 and is_isomorphic(g, C4))):
        return SKIP
    gamma = domination_number(g)
    inv = inverse_domination_number(g)
    if gamma + inv == g.n:
        return None
    return f"gamma={gamma} inverse={inv} n={g.n}"


def _check_cor_3_4_counterexample(g: Graph):
    gamma = domination_number(g)
    inv = inverse_domination_number(g)
    leafy = satisfies_leaf_condition(g)
    if (gamma, inv, leafy) == (2, 5, False):
        return None
    return f"gamma={gamma} inverse={inv} leaf={leafy}"


def _check_cor_3_5(g: Graph):
    problems = []
    for label, h in (("completion", leaf_completion(g)), ("corona", corona_k1(g))):
        if h.n > 2 * g.n:
            problems.append(f"{label}: order {h.n} > {2 * g.n}")
        if h.induced_subgraph(g.vertices)[0] != g:
            problems.append(f"{label}: host is not the induced subgraph on 0..n-1")
        if not is_dm_characterized(h) or not is_mdscomds_characterized(h):
            problems.append(f"{label}: characterisation fails")
        if g.n <= 5 and not (is_dm_star(h) and is_mdscomds(h)):
            problems.append(f"{label}: enumeration says not DM/MDScoMDS")
    return "; ".join(problems) if problems else None


# -- public verifiers ---------------------------------------------------------

def verify_theorem_3_1(max_n: int = 6, *, exclude_c4_components: bool = False, jobs: int = 1) -> Report:
    """DM (by majority test) == MDScoMDS == leaf condition, C4 excepted.

    By default only the graph C4 itself is excepted.  From order 6 on this
    reports the graphs with a C4 component (C4 plus an edge is MDScoMDS but
    not DM).  ``exclude_c4_components=True`` checks the component-level
    statement instead.
    """
    if exclude_c4_components:
        return _sweep("thm3.1-components", _check_thm_3_1_components, max_n, jobs=jobs,
                      params={"max_n": max_n})
    return _sweep("thm3.1", _check_thm_3_1, max_n, jobs=jobs, params={"max_n": max_n})


def verify_prop_2_1(max_n: int = 5, *, jobs: int = 1) -> Report:
    """Median-ness of D(G) agrees with both majority-set tests."""
    return _sweep("prop2.1", _check_prop_2_1, max_n, jobs=jobs, params={"max_n": max_n})


def verify_thm_3_6(
    max_n: int = 5,
    *,
    samples: int = 500,
    sample_max_n: int = 8,
    seed: int = 0,
    jobs: int = 1,
) -> Report:
    """D(G) is a partial cube: exhaustive to ``max_n`` plus seeded random hosts."""
    rng = random.Random(seed)
    low = min(max_n + 1, sample_max_n)
    graphs = [random_graph(rng, rng.randint(low, sample_max_n)) for _ in range(samples)]
    return _sweep(
        "thm3.6", _check_thm_3_6, max_n, samples=graphs, jobs=jobs,
        params={"max_n": max_n, "samples": samples, "sample_max_n": sample_max_n, "seed": seed},
    )


def verify_lemmas(max_n: int = 5, *, jobs: int = 1) -> Report:
    """Component decomposition, pendant lemmas, two-MDS remark, D_k disconnection."""
    return _sweep("lemmas", _check_lemmas, max_n, jobs=jobs, params={"max_n": max_n})


def verify_cor_3_4(max_n: int = 6, *, jobs: int = 1) -> Report:
    """gamma + inverse gamma = n on leaf-condition graphs and C4, plus the 7-vertex converse failure."""
    report = _sweep("cor3.4", _check_cor_3_4, max_n, jobs=jobs, params={"max_n": max_n})
    extra = Report("cor3.4")
    extra.record(1 << 40, COR_3_4_GRAPH, _check_cor_3_4_counterexample(COR_3_4_GRAPH))
    return report.merge(extra)


def verify_cor_3_5(trials: int = 200, max_host_n: int = 12, *, seed: int = 0, jobs: int = 1) -> Report:
    """Leaf completion and corona embed any host in a DM and MDScoMDS graph of at most twice its order."""
    rng = random.Random(seed)
    hosts = [cycle_graph(3), path_graph(3), C4]
    for _ in range(trials):
        n = rng.randint(1, max_host_n)
        hosts.append(random_graph(rng, n, rng.random()))
    start = time.perf_counter()
    report = Report("cor3.5", params={"trials": trials, "max_host_n": max_host_n, "seed": seed})
    report.merge(_run_sample_chunk(_check_cor_3_5, hosts, 0, "cor3.5"))
    report.elapsed = time.perf_counter() - start
    return report


def search_dominating_graph_preimage(h: Graph, max_host_n: int = 5) -> Optional[Graph]:
    """First labelled host G (by order, then index) with D(G) isomorphic to ``h``."""
    if max_host_n > 5:
        raise OrderTooLarge("preimage search scans hosts of order at most 5")
    if h.n > MAX_ISO_ORDER:
        raise OrderTooLarge(f"target order {h.n} exceeds {MAX_ISO_ORDER}")
    for n in range(1, max_host_n + 1):
        for g in enumerate_labeled_graphs(n):
            if len(enumerate_dominating(g)) != h.n:
                continue
            if is_isomorphic(domgraph_as_graph(g), h):
                return g
    return None


VERIFIERS = {
    "thm3.1": verify_theorem_3_1,
    "prop2.1": verify_prop_2_1,
    "thm3.6": verify_thm_3_6,
    "lemmas": verify_lemmas,
    "cor3.4": verify_cor_3_4,
    "cor3.5": verify_cor_3_5,
}
