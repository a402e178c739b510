"""Seeded verification suites shared by the command line and the test suite.

Every suite draws its instances from one generator seeded by the caller and
checks library answers against exhaustive oracles from ``brute``. Results are
collected in a deterministic order so identical seeds give identical reports.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

import numpy as np

from . import brute
from .blocking import (
    blocking_profile,
    is_blocking_set,
    is_blocking_set_apex,
    shrink_to_minimal,
    verdict,
)
from .classes import beta_upper_bound, get_oracle
from .elimination import (
    elimination_distance,
    elimination_forest,
    solve_vc_bounded_ed,
    verify_forest,
)
from .exact import (
    lp_doubled_value,
    max_matching_bipartite,
    nemhauser_trotter,
    opt_value,
    solve_vc_exact,
)
from .gadgets import (
    build_lb_tower,
    glued_clique_gadget,
    transform_hypergraph_vc,
    two_edge_chain_instance,
)
from .generators import (
    DEFAULT_SEED,
    planted_graph,
    random_bipartite,
    random_graph,
    random_hypergraph,
    random_instance,
    random_member,
    random_subset,
    rng_from,
)
from .graph import Graph, connected_components, induced_subgraph, remove_vertices
from .io import emit_instance, parse_instance
from .kernelize import apply_rule_1, is_yes, kernelize_to_base, lp_modulator

MAX_REPORTED = 5


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, what: str) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(what)

    def to_text(self) -> str:
        status = "pass" if self.passed else "FAIL"
        lines = [f"{self.name}: {status} ({self.cases} checks, {len(self.failures)} failures)"]
        lines += [f"  note: {n}" for n in self.notes]
        lines += [f"  failed: {f}" for f in self.failures[:MAX_REPORTED]]
        return "\n".join(lines) + "\n"

    def to_record(self) -> str:
        status = "pass" if self.passed else "fail"
        lines = [f"suite={self.name} status={status} checks={self.cases} failures={len(self.failures)}"]
        lines += [f"suite={self.name} failed={f!r}" for f in self.failures[:MAX_REPORTED]]
        return "\n".join(lines) + "\n"


def _size(rng: np.random.Generator, lo: int, hi: int) -> int:
    return int(rng.integers(lo, hi + 1))


# Towers of extremal gadgets

def _tower_suite(name: str, tag: str, sizes: list[int], exhaustive: int) -> SuiteResult:
    res = SuiteResult(name)
    oracle = get_oracle(tag)
    levels = build_lb_tower(oracle, len(sizes))
    for d, (w, want) in enumerate(zip(levels, sizes), start=1):
        g, y = w.graph, w.blocking_set
        res.check(len(y) == want, f"d={d}: blocking set size {len(y)}, expected {want}")
        res.check(want == beta_upper_bound(oracle, d), f"d={d}: class bound {beta_upper_bound(oracle, d)} != {want}")
        res.check(verdict(g, y).is_minimal is True, f"d={d}: not minimal blocking")
        if g.n <= brute.MAX_BRUTE_N:
            res.check(brute.is_minimal_blocking_exhaustive(g, y), f"d={d}: exhaustive minimality failed")
        ed = elimination_distance(g, oracle, d)
        res.check(isinstance(ed, int), f"d={d}: elimination distance above {d}")
        if d <= exhaustive:
            beta = blocking_profile(g).beta
            res.check(beta == want, f"d={d}: exhaustive beta {beta} != {want}")
        res.notes.append(f"d={d} n={g.n} blocking={len(y)} opt={w.claimed_opt}")
    return res


def suite_tower_indset(seed: int = DEFAULT_SEED, count: Optional[int] = None) -> SuiteResult:
    return _tower_suite("tower_indset", "indset", [2, 3, 5], exhaustive=2)


def suite_tower_cluster(seed: int = DEFAULT_SEED, count: Optional[int] = None) -> SuiteResult:
    return _tower_suite("tower_cluster", "cluster:3", [5, 9], exhaustive=2)


# Component rule

RULE1_TAGS = ("forest", "bipartite", "cluster:3", "lp")


def suite_rule1(seed: int = DEFAULT_SEED, count: Optional[int] = None) -> SuiteResult:
    res = SuiteResult("rule1")
    rng = rng_from(seed)
    per = 300 if count is None else count
    deleted_any = 0
    for tag in RULE1_TAGS:
        oracle = get_oracle(tag)
        for i in range(per):
            inst = random_instance(oracle, rng, 0, n_max=18, x_max=5)
            _, trace = apply_rule_1(inst, oracle)
            gone = [v for h in trace.deleted for v in h]
            g2 = remove_vertices(inst.g, gone)[0]
            shift = opt_value(inst.g) - opt_value(g2)
            res.check(shift == trace.k_decrement, f"{tag} #{i}: opt shift {shift} != k shift {trace.k_decrement}")
            res.check(trace.bound_ok, f"{tag} #{i}: {trace.components_after} components > {trace.component_bound}")
            deleted_any += bool(gone)
    res.notes.append(f"{deleted_any} instances lost at least one component")
    return res


# Hypergraph transformation

def suite_transform(seed: int = DEFAULT_SEED, count: Optional[int] = None) -> SuiteResult:
    res = SuiteResult("transform")
    rng = rng_from(seed)
    want = 200 if count is None else count
    seen: set = set()
    tries = 0
    h, b = Graph.complete(3), (0, 1, 2)
    while len(seen) < want and tries < 50 * want:
        tries += 1
        hyp = random_hypergraph(rng, _size(rng, 3, 6), _size(rng, 1, 3), 3)
        if (hyp.n, hyp.edges) in seen:
            continue
        seen.add((hyp.n, hyp.edges))
        first, _ = transform_hypergraph_vc(hyp, 0, h, b, verify=False)
        opt_g = brute.opt(first.g)
        for k in range(hyp.n + 1):
            lhs = brute.hypergraph_has_cover(hyp, k)
            rhs = opt_g <= first.k + k
            res.check(lhs == rhs, f"n={hyp.n} edges={hyp.edges} k={k}: {lhs} vs {rhs}")
    hyp, k = two_edge_chain_instance()
    w = glued_clique_gadget()
    inst, opt_h = transform_hypergraph_vc(hyp, k, w.graph, w.blocking_set)
    res.check(inst.k == 2 + 3 * 3, f"chained instance budget {inst.k}, expected 11")
    res.check(brute.opt(inst.g) == inst.k, f"chained instance optimum {brute.opt(inst.g)} != {inst.k}")
    res.notes.append(f"{len(seen)} hypergraphs; chained instance n={inst.g.n} k={inst.k}")
    return res


# LP relaxation

def suite_lp(seed: int = DEFAULT_SEED, count: Optional[int] = None) -> SuiteResult:
    res = SuiteResult("lp")
    rng = rng_from(seed)
    total = 500 if count is None else count
    bip = 0
    for i in range(total):
        n = _size(rng, 1, 14)
        if i % 5 == 0:
            g, side = random_bipartite(rng, n, float(rng.uniform(0.1, 0.6))), True
        else:
            g, side = random_graph(rng, n, float(rng.uniform(0.05, 0.7))), False
        lp2, opt = lp_doubled_value(g), opt_value(g)
        res.check(lp2 <= 2 * opt <= 2 * lp2, f"#{i}: LP*2={lp2} OPT={opt}")
        if n <= 10:
            res.check(lp2 == brute.lp_doubled(g), f"#{i}: LP*2={lp2} differs from enumeration")
        if side:
            bip += 1
            colour = [v for v in range(n) if _parity(g)[v] == 0]
            other = [v for v in range(n) if _parity(g)[v] == 1]
            mm = len(max_matching_bipartite(g, colour, other))
            res.check(lp2 == 2 * mm == 2 * opt, f"#{i}: bipartite LP*2={lp2} MM={mm} OPT={opt}")
            res.check(mm == brute.max_matching_size(g), f"#{i}: matching size {mm} not maximum")
        v0, vh, v1 = nemhauser_trotter(g, check=False)
        rest = induced_subgraph(g, vh)[0]
        res.check(opt == len(v1) + opt_value(rest), f"#{i}: OPT={opt} |V1|={len(v1)} OPT(half)={opt_value(rest)}")
    res.notes.append(f"{bip} bipartite graphs")
    return res


def _parity(g: Graph) -> list[int]:
    from .classes import two_coloring

    col = two_coloring(g)
    assert col is not None
    return col


def suite_lp_modulator(seed: int = DEFAULT_SEED, count: Optional[int] = None) -> SuiteResult:
    res = SuiteResult("lp_modulator")
    rng = rng_from(seed)
    lp = get_oracle("lp")
    gaps = 0
    for i in range(200 if count is None else count):
        g = random_graph(rng, _size(rng, 1, 14), float(rng.uniform(0.1, 0.8)))
        x = lp_modulator(g)
        gap2 = 2 * opt_value(g) - lp_doubled_value(g)
        res.check(len(x) == gap2, f"#{i}: |X|={len(x)} expected {gap2}")
        res.check(lp.member(remove_vertices(g, x)[0]), f"#{i}: g - X has an integrality gap")
        gaps += gap2 > 0
    res.notes.append(f"{gaps} graphs with a positive gap")
    return res


# Bounded elimination distance

def suite_bounded_ed(seed: int = DEFAULT_SEED, count: Optional[int] = None) -> SuiteResult:
    res = SuiteResult("bounded_ed")
    rng = rng_from(seed)
    per = 100 if count is None else max(1, count // 2)
    for tag in ("forest", "lp"):
        oracle = get_oracle(tag)
        for i in range(per):
            d = 1 + i % 2
            g, forest = planted_graph(oracle, rng, d, 16)
            res.check(verify_forest(g, forest, oracle, d), f"{tag} #{i}: planted forest invalid")
            got = solve_vc_bounded_ed(g, forest, oracle).size
            want = brute.opt(g)
            res.check(got == want, f"{tag} #{i}: bounded solver {got}, brute force {want}")
    return res


# Kernelization driver

KERNEL_TAGS = ("forest", "bipartite", "cluster:3", "lp")


def suite_kernelize(seed: int = DEFAULT_SEED, count: Optional[int] = None) -> SuiteResult:
    res = SuiteResult("kernelize")
    rng = rng_from(seed)
    shrunk = 0
    for i in range(100 if count is None else count):
        tag = KERNEL_TAGS[i % len(KERNEL_TAGS)]
        d = (i // len(KERNEL_TAGS)) % 3
        inst = random_instance(get_oracle(tag), rng, d, n_max=18, x_max=4)
        out, traces = kernelize_to_base(inst)
        res.check(is_yes(inst) == is_yes(out), f"{tag} d={d} #{i}: answer changed")
        res.check(out.depth == 0, f"{tag} d={d} #{i}: output depth {out.depth}")
        res.check(all(t.bound_ok for t in traces), f"{tag} d={d} #{i}: component bound violated")
        shrunk += out.g.n < inst.g.n
    res.notes.append(f"{shrunk} instances shrank")
    return res


# Blocking predicates

def suite_blocking(seed: int = DEFAULT_SEED, count: Optional[int] = None) -> SuiteResult:
    res = SuiteResult("blocking")
    rng = rng_from(seed)
    minimal = 0
    for i in range(500 if count is None else count):
        n = _size(rng, 1, 10)
        g = random_graph(rng, n, float(rng.uniform(0.1, 0.7)))
        y = random_subset(rng, n, float(rng.uniform(0.1, 0.5)))
        v = is_blocking_set(g, y)
        res.check(v.is_blocking == is_blocking_set_apex(g, y), f"#{i}: deletion and apex tests disagree on {y}")
        res.check(v.is_blocking == brute.is_blocking(g, y), f"#{i}: blocking verdict on {y} wrong")
        if not v.is_blocking:
            continue
        z = shrink_to_minimal(g, y)
        for cand in (y, z):
            full = verdict(g, cand)
            if not full.is_minimal:
                continue
            minimal += 1
            res.check(full.deficit == 1, f"#{i}: minimal {cand} has deficit {full.deficit}")
            comps = {c for c in connected_components(g) for v in cand if v in c}
            res.check(len(comps) == 1, f"#{i}: minimal {cand} meets {len(comps)} components")
            res.check(brute.is_minimal_blocking_exhaustive(g, cand), f"#{i}: {cand} not minimal by enumeration")
    res.notes.append(f"{minimal} minimal verdicts examined")
    return res


# Bound for the LP class

def suite_lp_beta(seed: int = DEFAULT_SEED, count: Optional[int] = None) -> SuiteResult:
    res = SuiteResult("lp_beta")
    rng = rng_from(seed)
    lp = get_oracle("lp")
    bound = beta_upper_bound(lp, 1)
    want = 100 if count is None else count
    found, tries, best = 0, 0, 0
    while found < want and tries < 100 * want:
        tries += 1
        if tries % 2:
            g = random_graph(rng, _size(rng, 2, 12), float(rng.uniform(0.1, 0.6)))
        else:
            g = planted_graph(lp, rng, 1, 12)[0]
        if g.n > 12 or not isinstance(elimination_distance(g, lp, 1), int):
            continue
        found += 1
        beta = blocking_profile(g).beta
        best = max(best, beta)
        res.check(beta <= bound, f"#{found}: beta {beta} > {bound}")
    res.check(found == want, f"only {found} graphs within distance 1")
    res.notes.append(f"largest beta seen {best}, bound {bound}")
    return res


# Module-level invariants beyond the experiments above

def suite_graph_io(seed: int = DEFAULT_SEED, count: Optional[int] = None) -> SuiteResult:
    res = SuiteResult("graph_io")
    rng = rng_from(seed)
    for i in range(100 if count is None else count):
        g = random_graph(rng, _size(rng, 0, 15), float(rng.uniform(0, 0.6)))
        back = parse_instance(emit_instance(g))
        res.check(back == g, f"#{i}: graph round trip changed the graph")
        res.check(emit_instance(back) == emit_instance(g), f"#{i}: emission not canonical")
        s = random_subset(rng, g.n)
        sub, remap = induced_subgraph(g, s)
        ok = all(sub.has_edge(remap[u], remap[v]) == g.has_edge(u, v) for u, v in combinations(s, 2))
        res.check(ok, f"#{i}: induced subgraph edges differ")
        if g.n >= 3:
            hyp = random_hypergraph(rng, g.n, _size(rng, 0, 4), 3)
            res.check(parse_instance(emit_instance(hyp)) == hyp, f"#{i}: hypergraph round trip failed")
    return res


def suite_exact(seed: int = DEFAULT_SEED, count: Optional[int] = None) -> SuiteResult:
    res = SuiteResult("exact")
    rng = rng_from(seed)
    for i in range(200 if count is None else count):
        g = random_graph(rng, _size(rng, 0, 16), float(rng.uniform(0.05, 0.8)))
        c = solve_vc_exact(g)
        res.check(g.is_cover(c.vertices), f"#{i}: returned set is not a cover")
        res.check(c.size == brute.opt(g), f"#{i}: size {c.size} not optimal")
        res.check(not solve_vc_exact(g, c.size - 1) if c.size else True, f"#{i}: budget below optimum feasible")
    return res


def suite_classes(seed: int = DEFAULT_SEED, count: Optional[int] = None) -> SuiteResult:
    res = SuiteResult("classes")
    rng = rng_from(seed)
    per = 40 if count is None else count
    for tag in ("indset", "forest", "bipartite", "cluster:3", "lp"):
        oracle = get_oracle(tag)
        for i in range(per):
            g = random_member(oracle, rng, _size(rng, 1, 12))
            res.check(oracle.member(g), f"{tag} #{i}: generated graph not a member")
            c = oracle.solve(g)
            res.check(g.is_cover(c.vertices) and c.size == brute.opt(g), f"{tag} #{i}: class solver wrong")
            if oracle.hereditary and g.n:
                h = remove_vertices(g, random_subset(rng, g.n, 0.3))[0]
                res.check(oracle.member(h), f"{tag} #{i}: membership lost after deletion")
    return res


def suite_elimination(seed: int = DEFAULT_SEED, count: Optional[int] = None) -> SuiteResult:
    res = SuiteResult("elimination")
    rng = rng_from(seed)
    per = 30 if count is None else count
    for tag in ("empty", "indset", "forest", "lp"):
        oracle = get_oracle(tag)
        for i in range(per):
            g = random_graph(rng, _size(rng, 0, 8), float(rng.uniform(0.1, 0.7)))
            want = brute.elimination_distance(g, oracle.member)
            got = elimination_distance(g, oracle, g.n)
            res.check(got == want, f"{tag} #{i}: distance {got}, enumeration {want}")
            forest = elimination_forest(g, oracle, want)
            res.check(forest is not None and verify_forest(g, forest, oracle, want), f"{tag} #{i}: no valid forest")
            if forest is not None:
                size = solve_vc_bounded_ed(g, forest, oracle).size
                res.check(size == brute.opt(g), f"{tag} #{i}: bounded solver {size}")
    for n in range(1, 9):
        got = elimination_distance(Graph.path(n), get_oracle("empty"), n)
        res.check(got == brute.path_treedepth(n), f"path {n}: treedepth {got}")
    return res


Suite = Callable[..., SuiteResult]

# criterion number -> suite
ACCEPTANCE: dict[int, str] = {
    1: "tower_indset",
    2: "tower_cluster",
    3: "rule1",
    4: "transform",
    5: "lp",
    6: "lp_modulator",
    7: "bounded_ed",
    8: "kernelize",
    9: "blocking",
    10: "lp_beta",
}

SUITES: dict[str, Suite] = {
    "graph_io": suite_graph_io,
    "exact": suite_exact,
    "classes": suite_classes,
    "elimination": suite_elimination,
    "tower_indset": suite_tower_indset,
    "tower_cluster": suite_tower_cluster,
    "rule1": suite_rule1,
    "transform": suite_transform,
    "lp": suite_lp,
    "lp_modulator": suite_lp_modulator,
    "bounded_ed": suite_bounded_ed,
    "kernelize": suite_kernelize,
    "blocking": suite_blocking,
    "lp_beta": suite_lp_beta,
}


class UnknownSuiteError(KeyError):
    pass


def run_suite(name: str, seed: int = DEFAULT_SEED, count: Optional[int] = None) -> list[SuiteResult]:
    """Run one suite, or every suite for ``all``."""
    if name == "all":
        return [fn(seed, count) for fn in SUITES.values()]
    if name not in SUITES:
        raise UnknownSuiteError(name)
    return [SUITES[name](seed, count)]
