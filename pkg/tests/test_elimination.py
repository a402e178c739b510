import pytest

from vcblock import brute
from vcblock.classes import get_oracle, solve_in_class
from vcblock.elimination import (
    EliminationForest,
    Exceeds,
    ForestError,
    elimination_distance,
    elimination_forest,
    forest_problems,
    solve_vc_bounded_ed,
    verify_forest,
)
from vcblock.exact import opt_value
from vcblock.generators import planted_graph, random_forest, random_graph
from vcblock.graph import Graph, disjoint_union, remove_vertices

EMPTY, INDSET, FOREST, LP = (get_oracle(t) for t in ("empty", "indset", "forest", "lp"))


def test_distance_examples(p3):
    assert elimination_distance(p3, INDSET, 3) == 1
    assert elimination_distance(Graph.path(5), FOREST, 3) == 0
    assert elimination_distance(Graph.path(7), EMPTY, 7) == 3


def test_exceeds_is_falsy_and_reports_limit():
    r = elimination_distance(Graph.complete(5), EMPTY, 2)
    assert isinstance(r, Exceeds) and not r and r.limit == 2


@pytest.mark.parametrize("n", range(1, 16))
def test_path_treedepth(n):
    assert elimination_distance(Graph.path(n), EMPTY, n) == brute.path_treedepth(n)


def test_forest_examples(p3):
    f = elimination_forest(p3, INDSET, 1)
    assert f.root_vertices() == [1]
    assert sorted(f.bag[i] for i in f.leaves()) == [(0,), (2,)]
    tree = Graph.path(4)
    f = elimination_forest(tree, FOREST, 0)
    assert f.size == 1 and f.bag[0] == (0, 1, 2, 3)
    assert elimination_forest(Graph.complete(4), FOREST, 1) is None
    assert elimination_forest(Graph.complete(4), FOREST, 2).height == 2


def test_text_round_trip(rng):
    for _ in range(20):
        g = random_graph(rng, int(rng.integers(1, 9)), 0.4)
        f = elimination_forest(g, EMPTY, g.n)
        assert EliminationForest.from_text(f.to_text()) == f


def test_bad_forest_text():
    with pytest.raises(ForestError):
        EliminationForest.from_text("node 0 parent -1 bag 1\n")
    with pytest.raises(ForestError):
        EliminationForest.from_text("leaf 1 parent -1 bag 0\n")


def test_verify_rejects_sibling_edge(p3):
    # root 0 with leaves {1} and {2}: edge 1-2 joins siblings
    f = EliminationForest((-1, 0, 0), (0, None, None), ((0,), (1,), (2,)))
    assert not verify_forest(p3, f, INDSET)
    assert any("unrelated" in p for p in forest_problems(p3, f, INDSET))


def test_verify_rejects_bad_leaf(p3):
    f = EliminationForest((-1,), (None,), ((0, 1, 2),))
    assert not verify_forest(p3, f, INDSET)
    assert verify_forest(p3, f, FOREST)


def test_verify_checks_height(p3):
    f = elimination_forest(p3, INDSET, 1)
    assert verify_forest(p3, f, INDSET, 1)
    assert not verify_forest(p3, f, INDSET, 0)


def test_distance_matches_recursion(rng):
    for oracle in (EMPTY, INDSET, FOREST, LP):
        for _ in range(25):
            g = random_graph(rng, int(rng.integers(0, 8)), float(rng.uniform(0.1, 0.7)))
            want = brute.elimination_distance(g, oracle.member)
            assert elimination_distance(g, oracle, g.n) == want
            assert elimination_forest(g, oracle, want) is not None
            if want:
                assert elimination_forest(g, oracle, want - 1) is None


def test_distance_is_max_over_components(rng):
    for _ in range(30):
        a = random_graph(rng, int(rng.integers(1, 7)), 0.5)
        b = random_graph(rng, int(rng.integers(1, 7)), 0.5)
        g = disjoint_union(a, b)
        for oracle in (EMPTY, FOREST):
            assert elimination_distance(g, oracle, g.n) == max(
                elimination_distance(a, oracle, a.n), elimination_distance(b, oracle, b.n)
            )


def test_monotone_under_deletion(rng):
    for _ in range(40):
        g = random_graph(rng, int(rng.integers(2, 10)), 0.4)
        v = int(rng.integers(g.n))
        h = remove_vertices(g, (v,))[0]
        for oracle in (EMPTY, INDSET, FOREST):
            assert elimination_distance(h, oracle, h.n) <= elimination_distance(g, oracle, g.n)


def test_bounded_solver_examples(p3, rng):
    tree = random_forest(rng, 9)
    f = elimination_forest(tree, FOREST, 0)
    assert solve_vc_bounded_ed(tree, f, FOREST).size == solve_in_class(FOREST, tree).size
    f = elimination_forest(p3, INDSET, 1)
    assert solve_vc_bounded_ed(p3, f, INDSET).vertices == (1,)


@pytest.mark.parametrize("g", [Graph.cycle(5), Graph.complete(3), Graph.complete(4), Graph.petersen()])
def test_bounded_solver_lp_examples(g):
    d = elimination_distance(g, LP, g.n)
    assert d >= 1
    f = elimination_forest(g, LP, d)
    c = solve_vc_bounded_ed(g, f, LP)
    assert g.is_cover(c.vertices) and c.size == opt_value(g)


@pytest.mark.parametrize("tag", ["forest", "lp", "indset", "empty", "bipartite", "cluster:3"])
def test_bounded_solver_on_planted_forests(tag, rng):
    oracle = get_oracle(tag)
    for i in range(40):
        d = 1 + i % 3
        g, f = planted_graph(oracle, rng, d, 16)
        assert verify_forest(g, f, oracle, d)
        c = solve_vc_bounded_ed(g, f, oracle)
        assert g.is_cover(c.vertices) and c.size == brute.opt(g)


def test_bounded_solver_rejects_invalid_forest(p3):
    f = EliminationForest((-1,), (None,), ((0, 1, 2),))
    with pytest.raises(ForestError):
        solve_vc_bounded_ed(p3, f, INDSET)
