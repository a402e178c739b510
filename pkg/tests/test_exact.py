import networkx as nx
import pytest
from hypothesis import given, settings

from vcblock import brute
from vcblock.classes import two_coloring
from vcblock.exact import (
    INFEASIBLE,
    PersistenceError,
    Saturating,
    Violator,
    has_cover_of_size,
    konig_cover,
    lp_doubled_value,
    lp_half_integral,
    max_matching_bipartite,
    nemhauser_trotter,
    opt_value,
    saturate_or_violator,
    solve_vc_exact,
)
from vcblock.generators import random_bipartite, random_graph
from vcblock.graph import Graph, GraphInputError, induced_subgraph

from .test_graph import graphs


def test_small_optima(k3, p3):
    assert solve_vc_exact(k3).size == 2
    assert solve_vc_exact(p3).vertices == (1,)
    assert solve_vc_exact(Graph.petersen()).size == 6
    assert opt_value(Graph.empty(0)) == 0
    assert opt_value(Graph.complete(2)) == 1
    assert opt_value(Graph.cycle(5)) == 3


def test_budget_is_a_value(k3):
    assert solve_vc_exact(k3, 1) is INFEASIBLE
    assert not INFEASIBLE
    assert solve_vc_exact(k3, 2).size == 2
    assert has_cover_of_size(k3, 2) and not has_cover_of_size(k3, 1)


def test_exact_matches_enumeration(rng):
    for _ in range(150):
        g = random_graph(rng, int(rng.integers(0, 13)), float(rng.uniform(0.1, 0.8)))
        c = solve_vc_exact(g)
        assert g.is_cover(c.vertices)
        assert c.size == brute.opt(g)


def test_matching_examples(c4):
    assert len(max_matching_bipartite(c4, {0, 2}, {1, 3})) == 2
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert len(max_matching_bipartite(star, {0}, {1, 2, 3})) == 1
    fork = Graph.from_edges(3, [(0, 2), (1, 2)])
    assert len(max_matching_bipartite(fork, {0, 1}, {2})) == 1


def test_matching_rejects_bad_sides(c4):
    with pytest.raises(GraphInputError):
        max_matching_bipartite(c4, {0, 1}, {2, 3})


def test_saturate_or_violator_examples(c4):
    res = saturate_or_violator(c4, {0, 2}, {1, 3})
    assert isinstance(res, Saturating) and len(res.matching) == 2
    fork = Graph.from_edges(3, [(0, 2), (1, 2)])
    res = saturate_or_violator(fork, {0, 1}, {2})
    assert isinstance(res, Violator)
    assert res.z == (0, 1) and res.matching == ()
    single = Graph.from_edges(3, [(0, 1)])
    res = saturate_or_violator(single, {0}, {1, 2})
    assert isinstance(res, Saturating) and res.matching == ((0, 1),)


def test_violator_properties(rng):
    for _ in range(200):
        n = int(rng.integers(2, 14))
        left = [v for v in range(n) if rng.random() < 0.6]
        right = [v for v in range(n) if v not in left]
        edges = [(u, v) for u in left for v in right if rng.random() < 0.25]
        g = Graph.from_edges(n, edges)
        res = saturate_or_violator(g, left, right)
        if isinstance(res, Saturating):
            assert {u for u, _ in res.matching} == set(left)
            continue
        nz = g.neighborhood(res.z)
        assert len(nz) < len(res.z)
        assert {u for u, _ in res.matching} == set(left) - set(res.z)
        assert not {v for _, v in res.matching} & set(nz)


def test_matching_against_networkx(rng):
    for _ in range(100):
        g = random_bipartite(rng, int(rng.integers(1, 16)), 0.3)
        col = two_coloring(g)
        left = [v for v in range(g.n) if col[v] == 0]
        right = [v for v in range(g.n) if col[v] == 1]
        m = max_matching_bipartite(g, left, right)
        ref = nx.Graph()
        ref.add_nodes_from(range(g.n))
        ref.add_edges_from(g.edges())
        want = len(nx.bipartite.maximum_matching(ref, top_nodes=left)) // 2
        assert len(m) == want
        assert len({u for e in m for u in e}) == 2 * len(m)
        cover = konig_cover(g, left, right)
        assert g.is_cover(cover) and len(cover) == want


def test_lp_examples(k3, c4):
    assert lp_half_integral(k3).doubled_value == 3
    assert lp_half_integral(k3).v_half == (0, 1, 2)
    edge = lp_half_integral(Graph.complete(2))
    assert edge.doubled_value == 2 and len(edge.v1) == 1 and not edge.v_half
    assert lp_doubled_value(c4) == 4 == 2 * opt_value(c4)


def test_lp_matches_enumeration(rng):
    for _ in range(80):
        g = random_graph(rng, int(rng.integers(0, 10)), float(rng.uniform(0.1, 0.7)))
        sol = lp_half_integral(g)
        assert sol.doubled_value == brute.lp_doubled(g)
        x = {v: 0 for v in sol.v0} | {v: 1 for v in sol.v_half} | {v: 2 for v in sol.v1}
        assert all(x[u] + x[v] >= 2 for u, v in g.edges())
        assert sorted(x) == list(range(g.n))


def test_canonical_lp_minimizes_half(rng):
    for _ in range(60):
        g = random_graph(rng, int(rng.integers(1, 9)), float(rng.uniform(0.1, 0.7)))
        half = len(lp_half_integral(g).v_half)
        assert half == min(x.count(1) for x in brute.half_integral_optima(g))


def test_nemhauser_trotter_examples(k3, p3):
    v0, vh, v1 = nemhauser_trotter(p3)
    assert (v0, vh, v1) == ((0, 2), (), (1,))
    v0, vh, v1 = nemhauser_trotter(k3)
    assert vh == (0, 1, 2) and opt_value(induced_subgraph(k3, vh)[0]) == 2
    g = Graph.from_edges(4, [(0, 1)])
    assert {2, 3} <= set(nemhauser_trotter(g)[0])


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=12))
def test_nemhauser_trotter_identity(g):
    v0, vh, v1 = nemhauser_trotter(g)
    assert opt_value(g) == len(v1) + opt_value(induced_subgraph(g, vh)[0])
    assert g.is_independent(v0)
    assert set(g.neighborhood(v0)) <= set(v1)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=12))
def test_lp_sandwich(g):
    lp2 = lp_doubled_value(g)
    assert lp2 <= 2 * opt_value(g) <= 2 * lp2


def test_persistence_error_is_assertion():
    assert issubclass(PersistenceError, AssertionError)
