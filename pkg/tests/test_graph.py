import pytest
from hypothesis import given
from hypothesis import strategies as st

from dommedian.errors import CapacityExceeded, InvalidEdge, OrderOutOfRange, VertexOutOfRange
from dommedian.graph import (
    Graph,
    LeafStatus,
    closed_neighborhood,
    connected_components,
    corona_k1,
    cycle_graph,
    empty_graph,
    format_set,
    leaf_completion,
    leaf_status,
    leaves,
    members,
    new_graph,
    parse_set,
    path_graph,
    star,
    vertex_set,
)
from dommedian.harness import is_isomorphic

L, A, N, I = LeafStatus.LEAF, LeafStatus.ADJACENT_TO_LEAF, LeafStatus.NEITHER, LeafStatus.ISOLATED


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return new_graph(n, chosen)


def test_new_graph_p2(p2):
    assert p2.adj == (0b10, 0b01)


def test_new_graph_collapses_duplicates():
    g = new_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edges() == [(0, 1)]


def test_cor34_graph_edges(cor34):
    assert cor34.size == 7
    assert cor34.neighbors(0) == [1, 2, 3, 4]


@pytest.mark.parametrize("n", [0, 65, -1])
def test_order_out_of_range(n):
    with pytest.raises(OrderOutOfRange):
        new_graph(n, [])


@pytest.mark.parametrize("edge", [(1, 1), (0, 3), (-1, 0)])
def test_invalid_edges(edge):
    with pytest.raises(InvalidEdge):
        new_graph(3, [edge])


def test_direct_construction_rejects_asymmetry():
    with pytest.raises(InvalidEdge):
        Graph(2, (0b10, 0))


@given(st.integers(1, 12), st.lists(st.tuples(st.integers(0, 11), st.integers(0, 11))))
def test_constructor_symmetric_loop_free(n, raw):
    edges = [(u, v) for u, v in raw if u != v and u < n and v < n]
    g = new_graph(n, edges)
    for v in range(n):
        assert not g.adj[v] >> v & 1
        for u in range(n):
            assert (g.adj[v] >> u & 1) == (g.adj[u] >> v & 1)
    assert set(g.edges()) == {tuple(sorted(e)) for e in edges}


def test_closed_neighborhood(p2, c4):
    assert closed_neighborhood(p2, 0) == vertex_set([0, 1])
    assert closed_neighborhood(c4, 0) == vertex_set([0, 1, 3])
    assert closed_neighborhood(new_graph(3, [(0, 1)]), 2) == vertex_set([2])
    with pytest.raises(VertexOutOfRange):
        closed_neighborhood(c4, 4)


def test_leaves(p2, c4, cor34):
    assert leaves(p2) == vertex_set([0, 1])
    assert leaves(c4) == 0
    assert leaves(cor34) == vertex_set([3, 4, 5, 6])


def test_leaf_status(p3, c3, cor34):
    assert leaf_status(p3) == [L, A, L]
    assert leaf_status(c3) == [N, N, N]
    assert leaf_status(cor34) == [A, A, N, L, L, L, L]
    # P2: both endpoints are leaves and adjacent to a leaf; LEAF wins
    assert leaf_status(path_graph(2)) == [L, L]
    assert leaf_status(new_graph(3, [(0, 1)])) == [L, L, I]


@given(graphs())
def test_leaf_status_matches_degree_scan(g):
    deg = [len(g.neighbors(v)) for v in range(g.n)]
    for v, tag in enumerate(leaf_status(g)):
        if deg[v] == 0:
            assert tag is I
        elif deg[v] == 1:
            assert tag is L
        elif any(deg[u] == 1 for u in g.neighbors(v)):
            assert tag is A
        else:
            assert tag is N


def test_connected_components(c4):
    assert connected_components(c4).count == 1
    parts = connected_components(new_graph(4, [(0, 1), (2, 3)]))
    assert parts.count == 2
    assert parts.vertex_sets() == [vertex_set([0, 1]), vertex_set([2, 3])]
    assert connected_components(empty_graph(3)).count == 3


@given(graphs())
def test_components_label_connectivity(g):
    parts = connected_components(g)
    assert sorted(set(parts.labels)) == list(range(parts.count))
    for u, v in g.edges():
        assert parts.labels[u] == parts.labels[v]


def test_corona_p2(p2):
    h = corona_k1(p2)
    assert h.n == 4
    assert h.edges() == [(0, 1), (0, 2), (1, 3)]


def test_corona_c3_is_net(c3):
    h = corona_k1(c3)
    assert h.n == 6
    assert N not in leaf_status(h)


def test_corona_capacity():
    with pytest.raises(CapacityExceeded):
        corona_k1(empty_graph(33))


@given(graphs(max_n=12))
def test_corona_properties(g):
    h = corona_k1(g)
    assert h.n == 2 * g.n
    assert leaves(h) >> g.n == (1 << g.n) - 1 or g.n == 1 and leaves(h) == 0b11
    tags = leaf_status(h)
    assert all(tags[v] in (A, L) for v in range(g.n))


def test_leaf_completion_examples(p3, c3, cor34):
    assert leaf_completion(p3) == p3
    h = leaf_completion(c3)
    assert h.n == 6 and is_isomorphic(h, corona_k1(c3))
    h = leaf_completion(cor34)
    assert h.n == 8
    assert N not in leaf_status(h)


@given(graphs(max_n=12))
def test_leaf_completion_properties(g):
    h = leaf_completion(g)
    tags = leaf_status(h)
    assert N not in tags and I not in tags
    assert h.n <= 2 * g.n
    assert h.induced_subgraph(g.vertices)[0] == g


def test_set_helpers():
    s = vertex_set([0, 2, 5])
    assert members(s) == [0, 2, 5]
    assert format_set(s) == "{0,2,5}"
    assert parse_set("{0,2,5}") == s == parse_set("0,2,5")
    assert format_set(0) == "{}" and parse_set("{}") == 0


def test_star_examples():
    x, y = vertex_set([1, 4]), vertex_set([0, 2])
    assert star(x, x, y) == x
    assert star(vertex_set([0, 2]), vertex_set([0, 1]), vertex_set([0, 3])) == vertex_set([0])
    assert star(vertex_set([0, 1]), vertex_set([1, 2]), vertex_set([2, 3])) == vertex_set([1, 2])


def test_relabel_is_isomorphic():
    g = cycle_graph(5)
    assert is_isomorphic(g, g.relabel([3, 1, 4, 0, 2]))
