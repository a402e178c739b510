import pytest
from hypothesis import given, settings, strategies as st

from vcblock.exact import opt_value
from vcblock.graph import (
    Graph,
    GraphInputError,
    Hypergraph,
    add_vertex,
    connected_components,
    disjoint_union,
    induced_subgraph,
    remove_vertices,
)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_from_edges_is_simple_and_symmetric():
    g = Graph.from_edges(4, [(0, 1), (2, 1), (3, 0)])
    assert g.adj == ((1, 3), (0, 2), (1,), (0,))
    assert g.edges() == [(0, 1), (0, 3), (1, 2)]
    assert g.m == 3


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(-1, 0)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(GraphInputError):
        Graph.from_edges(3, edges)


def test_repeated_edges_collapse():
    assert Graph.from_edges(2, [(0, 1), (1, 0)]).m == 1


def test_induced_subgraph_of_clique(k3):
    sub, remap = induced_subgraph(k3, {0, 1})
    assert sub == Graph.complete(2)
    assert remap == {0: 0, 1: 1}


def test_induced_subgraph_empty_set(k3):
    sub, remap = induced_subgraph(k3, ())
    assert sub.n == 0 and remap == {}


def test_induced_subgraph_path_remap():
    sub, remap = induced_subgraph(Graph.path(4), {0, 2, 3})
    assert remap == {0: 0, 2: 1, 3: 2}
    assert sub.edges() == [(1, 2)]


def test_remove_vertices(p3):
    g, _ = remove_vertices(p3, {1})
    assert g.n == 2 and g.m == 0
    same, remap = remove_vertices(p3, ())
    assert same == p3 and remap == {0: 0, 1: 1, 2: 2}
    assert remove_vertices(Graph.complete(4), {0})[0] == Graph.complete(3)


def test_components():
    assert connected_components(Graph.from_edges(4, [(0, 1), (2, 3)])) == [(0, 1), (2, 3)]
    assert connected_components(Graph.petersen()) == [tuple(range(10))]
    assert connected_components(Graph.empty(0)) == []


def test_disjoint_union():
    assert disjoint_union(Graph.empty(1), Graph.empty(1)) == Graph.empty(2)
    g = disjoint_union(Graph.complete(2), Graph.complete(3))
    assert [len(c) for c in connected_components(g)] == [2, 3]
    assert opt_value(g) == 3
    assert disjoint_union(Graph.empty(0), Graph.petersen()) == Graph.petersen()


def test_add_vertex_is_last(p3):
    g = add_vertex(p3, (0, 2))
    assert g.n == 4 and g.adj[3] == (0, 2)


def test_cover_and_independence(p3):
    assert p3.is_cover({1}) and not p3.is_cover({0})
    assert p3.is_independent({0, 2}) and not p3.is_independent({0, 1})


def test_hypergraph_validation():
    h = Hypergraph(4, 3, ((2, 1, 0),))
    assert h.edges == ((0, 1, 2),)
    assert h.is_cover({1}) and not h.is_cover({3})
    with pytest.raises(GraphInputError):
        Hypergraph(4, 3, ((0, 1),))
    with pytest.raises(GraphInputError):
        Hypergraph(3, 3, ((0, 1, 3),))


@settings(max_examples=60, deadline=None)
@given(graphs(), graphs())
def test_union_opt_additive(g1, g2):
    assert opt_value(disjoint_union(g1, g2)) == opt_value(g1) + opt_value(g2)


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_components_partition_and_reassemble(g):
    comps = connected_components(g)
    flat = sorted(v for c in comps for v in c)
    assert flat == list(range(g.n))
    rebuilt = Graph.empty(0)
    for c in comps:
        rebuilt = disjoint_union(rebuilt, induced_subgraph(g, c)[0])
    assert rebuilt.m == g.m
    assert sorted(len(c) for c in connected_components(rebuilt)) == sorted(len(c) for c in comps)
