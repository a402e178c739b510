import pytest

from vcblock import brute
from vcblock.classes import (
    UnknownClassError,
    UnsupportedClassError,
    beta_upper_bound,
    get_oracle,
    member,
    solve_in_class,
)
from vcblock.generators import random_member, random_subset
from vcblock.graph import Graph, connected_components, disjoint_union, induced_subgraph, remove_vertices

TAGS = ("indset", "forest", "bipartite", "cluster:3", "lp")


def test_membership_examples(k3, c4):
    assert not member(get_oracle("forest"), c4)
    assert member(get_oracle("lp"), Graph.complete(2))
    assert not member(get_oracle("lp"), k3)
    assert member(get_oracle("empty"), Graph.empty(0))
    assert not member(get_oracle("empty"), Graph.empty(1))
    assert member(get_oracle("cluster:3"), k3) and not member(get_oracle("cluster:2"), k3)


def test_solve_examples(p3, k3, c4):
    assert solve_in_class(get_oracle("forest"), p3).vertices == (1,)
    g = disjoint_union(k3, Graph.complete(2))
    assert solve_in_class(get_oracle("cluster:3"), g).size == 3
    assert solve_in_class(get_oracle("bipartite"), c4).size == 2


def test_non_member_falls_back_to_exact():
    assert solve_in_class(get_oracle("forest"), Graph.petersen()).size == 6


def test_bound_examples():
    assert beta_upper_bound(get_oracle("indset"), 3) == 5
    assert beta_upper_bound(get_oracle("cluster:3"), 2) == 9
    assert beta_upper_bound(get_oracle("lp"), 2) == 13
    assert [beta_upper_bound(get_oracle("indset"), d) for d in range(4)] == [1, 2, 3, 5]
    assert [beta_upper_bound(get_oracle("lp"), d) for d in range(4)] == [2, 5, 13, 33]
    assert [beta_upper_bound(get_oracle("empty"), d) for d in range(4)] == [0, 1, 2, 3]


def test_lp_bound_closed_form():
    lp = get_oracle("lp")
    for d in range(8):
        assert beta_upper_bound(lp, d) == (d + 1) * 2**d + 1


@pytest.mark.parametrize("tag", ["indset", "forest", "bipartite", "cluster:3", "cluster:4"])
def test_bound_chain_strictly_increasing(tag):
    o = get_oracle(tag)
    vals = [beta_upper_bound(o, d) for d in range(7)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_unknown_tags():
    for bad in ("planar", "cluster:x", "cluster:0", ""):
        with pytest.raises(UnknownClassError):
            get_oracle(bad)


def test_unbounded_beta_refused():
    with pytest.raises(UnsupportedClassError):
        beta_upper_bound(get_oracle("bipartite").__class__("custom", True, True, None), 1)


@pytest.mark.parametrize("tag", TAGS)
def test_class_solver_is_optimal(tag, rng):
    o = get_oracle(tag)
    for _ in range(40):
        g = random_member(o, rng, int(rng.integers(0, 14)))
        assert o.member(g)
        c = solve_in_class(o, g)
        assert g.is_cover(c.vertices) and c.size == brute.opt(g)


@pytest.mark.parametrize("tag", TAGS)
def test_closure_flags(tag, rng):
    o = get_oracle(tag)
    for _ in range(30):
        g = random_member(o, rng, int(rng.integers(1, 12)))
        h = random_member(o, rng, int(rng.integers(1, 8)))
        if o.robust:
            assert o.member(disjoint_union(g, h))
            for comp in connected_components(g):
                assert o.member(induced_subgraph(g, comp)[0])
        if o.hereditary:
            assert o.member(remove_vertices(g, random_subset(rng, g.n, 0.3))[0])


def test_lp_is_not_hereditary():
    # deleting both pendants of this triangle leaves a triangle
    g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (0, 4)])
    lp = get_oracle("lp")
    assert lp.member(g)
    assert not lp.member(remove_vertices(g, (3, 4))[0])
    assert not lp.hereditary


@pytest.mark.parametrize("tag", TAGS)
def test_declared_beta_holds_on_members(tag, rng):
    o = get_oracle(tag)
    for _ in range(25):
        g = random_member(o, rng, int(rng.integers(1, 11)))
        assert brute.beta(g) <= o.beta
