import pytest

from vcblock import brute
from vcblock.classes import beta_upper_bound, get_oracle
from vcblock.elimination import elimination_distance
from vcblock.exact import lp_doubled_value, opt_value
from vcblock.generators import random_graph, random_instance
from vcblock.graph import Graph, disjoint_union, remove_vertices
from vcblock.instance import ModulatorInstance
from vcblock.kernelize import (
    DepthClaimError,
    apply_rule_1,
    build_chunk_component_graph,
    enumerate_chunks,
    is_yes,
    kernelize_to_base,
    lp_modulator,
    make_blocking_tester,
    modulator_size_relations,
    reduce_depth_once,
)

FOREST = get_oracle("forest")


def _worked_instance(k=3):
    # x = {0}; pendant edges 1-2 and 3-4 touched at 1 and 3; isolated 5
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 3), (3, 4)])
    return ModulatorInstance(g, k, (0,), "forest", 0)


def test_chunk_examples():
    g = Graph.from_edges(2, [(0, 1)])
    assert enumerate_chunks(g, {0, 1}, 2) == [(0,), (1,)]
    assert enumerate_chunks(Graph.empty(2), {0, 1}, 2) == [(0,), (1,), (0, 1)]
    assert len(enumerate_chunks(Graph.empty(4), range(4), 2)) == 10


def test_chunk_component_edges(k3):
    tester = make_blocking_tester(get_oracle("cluster:3"), 0)
    # x = {0}; component edge 1-2 seen at 1; triangle 3-4-5 fully seen; 6 unseen
    g = Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (0, 4), (0, 5), (3, 4), (4, 5), (3, 5)])
    cg = build_chunk_component_graph(g, [(0,)], [(1, 2), (3, 4, 5), (6,)], tester)
    assert cg.edges == ((0, 1),)


def test_worked_example():
    inst = _worked_instance()
    assert opt_value(inst.g) == 2
    out, trace = apply_rule_1(inst)
    assert len(trace.deleted) == 3 and trace.k_decrement == 2
    assert out.k == 1 and out.g.n == 1 and opt_value(out.g) == 0
    assert trace.components_after == 0


def test_rule_is_idempotent(rng):
    for tag in ("forest", "bipartite", "cluster:3", "lp"):
        for _ in range(30):
            inst = random_instance(get_oracle(tag), rng, 0, 16, 4)
            once, _ = apply_rule_1(inst)
            twice, t2 = apply_rule_1(once)
            assert twice == once
            assert not t2.deleted


def test_empty_rest_is_identity():
    inst = ModulatorInstance(Graph.complete(3), 2, (0, 1, 2), "forest", 0)
    out, trace = apply_rule_1(inst)
    assert out == inst and trace.chunk_count == 3 and not trace.deleted


def test_negative_budget_gives_trivial_no():
    out, _ = apply_rule_1(_worked_instance(k=1))
    assert out.is_trivial_no and not is_yes(out)
    again, _ = apply_rule_1(out)
    assert again == out
    base, traces = kernelize_to_base(ModulatorInstance.trivial_no("forest", 2))
    assert base.is_trivial_no and base.depth == 0


@pytest.mark.parametrize("tag", ["forest", "bipartite", "cluster:3", "lp"])
def test_rule_is_safe_and_bounded(tag, rng):
    oracle = get_oracle(tag)
    for _ in range(60):
        inst = random_instance(oracle, rng, 0, 16, 5)
        out, trace = apply_rule_1(inst)
        gone = [v for h in trace.deleted for v in h]
        assert opt_value(inst.g) - opt_value(remove_vertices(inst.g, gone)[0]) == trace.k_decrement
        assert trace.bound_ok
        assert is_yes(inst) == is_yes(out)


def test_some_optimum_meets_every_unmatched_chunk(rng):
    # every chunk outside the violator is hit by one common optimum cover
    for tag in ("forest", "cluster:3", "lp"):
        oracle = get_oracle(tag)
        for _ in range(40):
            inst = random_instance(oracle, rng, 0, 14, 4)
            _, trace = apply_rule_1(inst)
            chunks = enumerate_chunks(inst.g, inst.x, beta_upper_bound(oracle, 0))
            hat = [z for z in chunks if z not in set(trace.violator)]
            covers = brute.min_cover_masks(inst.g)
            assert any(all(any(int(m) >> v & 1 for v in z) for z in hat) for m in covers)


def test_trace_text():
    _, trace = apply_rule_1(_worked_instance())
    text = trace.to_text()
    assert "k_decrement 2" in text and "components 3 -> 0 (bound 1)" in text


def test_depth_reduction_over_indset(rng):
    # a forest of stars over an independent modulator
    g = Graph.from_edges(7, [(0, 1), (1, 2), (1, 3), (0, 4), (4, 5), (6, 5)])
    inst = ModulatorInstance(g, 3, (0,), "indset", 1)
    out, trace = reduce_depth_once(inst)
    assert out.depth == 0
    rest, _ = out.rest()
    assert elimination_distance(rest, get_oracle("indset"), 0) == 0
    assert len(out.x) <= len(inst.x) + len(trace.deleted) + len(trace.roots_added)
    assert is_yes(inst) == is_yes(out)


def test_depth_claim_checked():
    inst = ModulatorInstance(Graph.complete(4), 3, (0,), "indset", 1)
    with pytest.raises(DepthClaimError):
        reduce_depth_once(inst)
    with pytest.raises(ValueError):
        reduce_depth_once(ModulatorInstance(Graph.complete(2), 1, (), "indset", 0))


def test_member_rest_keeps_modulator():
    inst = ModulatorInstance(Graph.path(4), 2, (0,), "forest", 1)
    out, trace = reduce_depth_once(inst)
    assert out.depth == 0 and trace.roots_added == ()


@pytest.mark.parametrize("d", [0, 1, 2])
def test_kernelize_to_base(d, rng):
    for tag in ("indset", "forest", "cluster:3", "lp"):
        for _ in range(6):
            inst = random_instance(get_oracle(tag), rng, d, 16, 3)
            out, traces = kernelize_to_base(inst)
            assert out.depth == 0
            assert is_yes(inst) == is_yes(out)
            assert all(t.bound_ok for t in traces)
            assert len(traces) == d + 1
            if not out.is_trivial_no:
                assert out.check()


def test_lp_modulator_examples(k3, c4):
    assert len(lp_modulator(k3)) == 1
    assert get_oracle("lp").member(remove_vertices(k3, lp_modulator(k3))[0])
    assert lp_modulator(c4) == ()
    assert len(lp_modulator(disjoint_union(k3, k3))) == 2


def test_lp_modulator_random(rng):
    lp = get_oracle("lp")
    for _ in range(100):
        g = random_graph(rng, int(rng.integers(1, 14)), float(rng.uniform(0.1, 0.8)))
        x = lp_modulator(g)
        assert len(x) == 2 * opt_value(g) - lp_doubled_value(g)
        assert lp.member(remove_vertices(g, x)[0])


def test_modulator_size_relations(k3, c4):
    assert modulator_size_relations(c4, 0).lp_depth_modulator == 0
    r = modulator_size_relations(k3, 0)
    assert (r.treedepth_modulator, r.lp_depth_modulator, r.twice_gap) == (3, 1, 1) and r.holds
    r = modulator_size_relations(Graph.complete(4), 1)
    assert r.holds


def test_modulator_size_relations_random(rng):
    for _ in range(15):
        g = random_graph(rng, int(rng.integers(1, 8)), 0.5)
        for d in (0, 1):
            assert modulator_size_relations(g, d).holds
