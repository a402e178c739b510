"""Component reduction, depth reduction, and LP-based modulators.

The component rule works on an instance (G, k, X). Chunks are independent
subsets of X with 1..beta vertices, where beta bounds the minimal blocking
sets of the components of G - X. A bipartite graph joins a chunk Z to a
component H when N(Z) restricted to H is a blocking set of H. Either a
matching saturates all chunks, or a Hall violator exists and a matching
saturates the other chunks. Every component that is neither matched nor a
neighbour of the violator is deleted, and k drops by its optimum. Afterwards
at most |X|^beta components remain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional

from .blocking import is_blocking_set, is_blocking_set_apex
from .classes import ClassOracle, beta_upper_bound, get_oracle
from .elimination import elimination_distance, elimination_forest, solve_vc_bounded_ed
from .exact import (
    Saturating,
    has_cover_of_size,
    lp_doubled_value,
    lp_half_integral,
    max_matching_bipartite,
    opt_value,
    saturate_or_violator,
    solve_vc_exact,
)
from .graph import Graph, connected_components, induced_subgraph, remove_vertices
from .instance import ModulatorInstance

Chunk = tuple[int, ...]
BlockingTester = Callable[[Graph, tuple[int, ...]], bool]

# largest component graph we compute elimination forests for
MAX_FOREST_VERTICES = 40


class ResourceLimitError(RuntimeError):
    pass


class DepthClaimError(ValueError):
    """The instance's depth claim does not hold for ``g - x``."""


def enumerate_chunks(g: Graph, x: Iterable[int], beta: int) -> list[Chunk]:
    """Independent subsets of ``x`` with 1..beta vertices, by size then lexicographically."""
    xs = sorted(set(x))
    out: list[Chunk] = []
    for r in range(1, min(beta, len(xs)) + 1):
        out.extend(c for c in combinations(xs, r) if g.is_independent(c))
    return out


@dataclass(frozen=True)
class ChunkGraph:
    """Bipartite chunk/component graph; ``edges`` holds (chunk index, component index)."""

    chunks: tuple[Chunk, ...]
    components: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    def as_graph(self) -> tuple[Graph, range, range]:
        c = len(self.chunks)
        g = Graph.from_edges(c + len(self.components), [(i, c + j) for i, j in self.edges])
        return g, range(c), range(c, c + len(self.components))


def make_blocking_tester(oracle: ClassOracle, depth: int) -> BlockingTester:
    """Blocking test suited to the class.

    Hereditary classes compare OPT(H - Y) + |Y| with OPT(H). Other classes
    add one vertex adjacent to Y and check whether OPT grows, which keeps
    the graph within one vertex of the class. The class solver is used at
    depth 0, the exact solver above it.
    """
    solver = oracle.opt if depth == 0 else opt_value
    if oracle.hereditary:
        return lambda h, y: is_blocking_set(h, y, solver).is_blocking
    return lambda h, y: is_blocking_set_apex(h, y, solver)


def build_chunk_component_graph(
    g: Graph,
    chunks: list[Chunk],
    components: list[tuple[int, ...]],
    tester: BlockingTester,
) -> ChunkGraph:
    masks = g.masks()
    subs = [induced_subgraph(g, comp) for comp in components]
    cache: dict[tuple[int, tuple[int, ...]], bool] = {}
    edges = []
    for i, z in enumerate(chunks):
        nz = 0
        for v in z:
            nz |= masks[v]
        for j, comp in enumerate(components):
            sub, remap = subs[j]
            y = tuple(remap[v] for v in comp if nz >> v & 1)
            if not y:
                continue
            key = (j, y)
            if key not in cache:
                cache[key] = tester(sub, y)
            if cache[key]:
                edges.append((i, j))
    return ChunkGraph(tuple(chunks), tuple(components), tuple(edges))


@dataclass(frozen=True)
class ReductionTrace:
    """What one application of the component rule did.

    Vertex ids refer to the instance the rule was applied to.
    """

    chunk_count: int
    aux_edge_count: int
    violator: tuple[Chunk, ...]
    matching: tuple[tuple[Chunk, tuple[int, ...]], ...]
    deleted: tuple[tuple[int, ...], ...]
    opt_of_deleted: int
    k_decrement: int
    components_before: int
    components_after: int
    modulator_size: int
    beta: int
    roots_added: tuple[int, ...] = field(default=())

    @property
    def component_bound(self) -> int:
        return self.modulator_size**self.beta

    @property
    def bound_ok(self) -> bool:
        return self.components_after <= self.component_bound

    def to_text(self) -> str:
        def fmt(vs):
            return ",".join(map(str, vs)) or "-"

        lines = [
            f"chunks {self.chunk_count}",
            f"aux_edges {self.aux_edge_count}",
            f"beta {self.beta}",
            "violator " + (" ".join(fmt(z) for z in self.violator) or "-"),
            "matching " + (" ".join(f"{fmt(z)}:{fmt(h)}" for z, h in self.matching) or "-"),
            "deleted " + (" ".join(fmt(h) for h in self.deleted) or "-"),
            f"opt_deleted {self.opt_of_deleted}",
            f"k_decrement {self.k_decrement}",
            f"components {self.components_before} -> {self.components_after} (bound {self.component_bound})",
        ]
        if self.roots_added:
            lines.append(f"roots_to_modulator {fmt(self.roots_added)}")
        return "\n".join(lines) + "\n"


def component_opt(h: Graph, oracle: ClassOracle, depth: int) -> int:
    """Optimum of one component of ``g - x``; class solver or along a forest."""
    if depth == 0:
        return oracle.opt(h)
    if h.n <= MAX_FOREST_VERTICES:
        forest = elimination_forest(h, oracle, depth)
        if forest is not None:
            return solve_vc_bounded_ed(h, forest, oracle).size
    return opt_value(h)


def apply_rule_1(
    inst: ModulatorInstance,
    oracle: Optional[ClassOracle] = None,
    tester: Optional[BlockingTester] = None,
) -> tuple[ModulatorInstance, ReductionTrace]:
    """One pass of the component rule; a negative budget gives the trivial no-instance."""
    oracle = oracle or get_oracle(inst.tag)
    beta = beta_upper_bound(oracle, inst.depth)
    g, x = inst.g, inst.x
    if inst.is_trivial_no:
        return inst, ReductionTrace(0, 0, (), (), (), 0, 0, 0, 0, 0, beta)
    rest, remap = inst.rest()
    back = {new: old for old, new in remap.items()}
    comps = [tuple(back[v] for v in c) for c in connected_components(rest)]
    chunks = enumerate_chunks(g, x, beta)
    cg = build_chunk_component_graph(g, chunks, comps, tester or make_blocking_tester(oracle, inst.depth))
    bg, left, right = cg.as_graph()
    res = saturate_or_violator(bg, left, right)
    c = len(chunks)
    if isinstance(res, Saturating):
        violator: tuple[int, ...] = ()
    else:
        violator = res.z
    matching = res.matching
    vset = set(violator)
    kept = {j - c for i, j in matching}
    kept |= {j for i, j in cg.edges if i in vset}
    deleted = [comps[j] for j in range(len(comps)) if j not in kept]
    opt_del = sum(component_opt(induced_subgraph(g, h)[0], oracle, inst.depth) for h in deleted)
    trace = ReductionTrace(
        chunk_count=c,
        aux_edge_count=len(cg.edges),
        violator=tuple(chunks[i] for i in violator),
        matching=tuple((chunks[i], comps[j - c]) for i, j in matching),
        deleted=tuple(deleted),
        opt_of_deleted=opt_del,
        k_decrement=opt_del,
        components_before=len(comps),
        components_after=len(comps) - len(deleted),
        modulator_size=len(x),
        beta=beta,
    )
    new_k = inst.k - opt_del
    if new_k < 0:
        return ModulatorInstance.trivial_no(inst.tag, inst.depth), trace
    gone = [v for h in deleted for v in h]
    g2, remap2 = remove_vertices(g, gone)
    return ModulatorInstance(g2, new_k, tuple(remap2[v] for v in x), inst.tag, inst.depth), trace


def reduce_depth_once(
    inst: ModulatorInstance, oracle: Optional[ClassOracle] = None
) -> tuple[ModulatorInstance, ReductionTrace]:
    """Component rule, then the forest roots of ``g - x`` join the modulator."""
    if inst.depth < 1:
        raise ValueError("depth is already 0")
    oracle = oracle or get_oracle(inst.tag)
    reduced, trace = apply_rule_1(inst, oracle)
    if reduced.is_trivial_no:
        return ModulatorInstance.trivial_no(inst.tag, inst.depth - 1), trace
    rest, remap = reduced.rest()
    if rest.n > MAX_FOREST_VERTICES:
        raise ResourceLimitError(f"g - x has {rest.n} vertices; forest search is limited to {MAX_FOREST_VERTICES}")
    forest = elimination_forest(rest, oracle, reduced.depth)
    if forest is None:
        raise DepthClaimError(f"g - x is not within distance {reduced.depth} of {oracle.tag}")
    back = {new: old for old, new in remap.items()}
    roots = tuple(sorted(back[v] for v in forest.root_vertices()))
    out = ModulatorInstance(reduced.g, reduced.k, reduced.x + roots, inst.tag, inst.depth - 1)
    return out, _with_roots(trace, roots)


def _with_roots(trace: ReductionTrace, roots: tuple[int, ...]) -> ReductionTrace:
    from dataclasses import replace

    return replace(trace, roots_added=roots)


def kernelize_to_base(
    inst: ModulatorInstance, oracle: Optional[ClassOracle] = None
) -> tuple[ModulatorInstance, list[ReductionTrace]]:
    """Depth reductions down to 0, then a last component rule pass."""
    oracle = oracle or get_oracle(inst.tag)
    traces = []
    cur = inst
    while cur.depth > 0:
        cur, t = reduce_depth_once(cur, oracle)
        traces.append(t)
    cur, t = apply_rule_1(cur, oracle)
    traces.append(t)
    return cur, traces


def is_yes(inst: ModulatorInstance) -> bool:
    """Decide the instance exactly."""
    if inst.is_trivial_no:
        return False
    return has_cover_of_size(inst.g, inst.k)


# LP-based modulators

def lp_modulator(g: Graph) -> tuple[int, ...]:
    """A set X of exactly 2(OPT - LP) vertices with OPT(g - X) = LP(g - X).

    Take an optimal half-integral solution and a minimum cover S made of the
    one-valued vertices plus a minimum cover of the half-valued part. Match
    the uncovered half vertices into the covered ones; the covered half
    vertices left unmatched form X.
    """
    sol = lp_half_integral(g)
    half, _ = induced_subgraph(g, sol.v_half)
    inner = solve_vc_exact(half).vertices
    a = [sol.v_half[i] for i in inner]
    aset = set(a)
    b = [v for v in sol.v_half if v not in aset]
    sub, remap = induced_subgraph(g, sol.v_half)
    la = [remap[v] for v in a]
    lb = [remap[v] for v in b]
    bip = Graph.from_edges(sub.n, [(u, v) for u, v in sub.edges() if (u in la) != (v in la)])
    m = max_matching_bipartite(bip, lb, la)
    if len(m) != len(lb):
        raise AssertionError("no matching saturates the uncovered half-valued vertices")
    matched = {v for _, v in m}
    back = {new: old for old, new in remap.items()}
    return tuple(sorted(back[v] for v in la if v not in matched))


@dataclass(frozen=True)
class ModulatorSizes:
    d: int
    treedepth_modulator: int
    lp_depth_modulator: int
    twice_gap: int

    @property
    def holds(self) -> bool:
        return self.lp_depth_modulator <= min(self.treedepth_modulator, self.twice_gap)


def _min_modulator(g: Graph, fits: Callable[[Graph], bool]) -> int:
    for r in range(g.n + 1):
        for x in combinations(range(g.n), r):
            if fits(remove_vertices(g, x)[0]):
                return r
    return g.n


def modulator_size_relations(g: Graph, d: int, max_vertices: int = 12) -> ModulatorSizes:
    """Smallest depth-``d`` modulators to the empty class and to ``lp``,
    compared with twice the integrality gap."""
    if g.n > max_vertices:
        raise ResourceLimitError(f"exhaustive modulator search is limited to {max_vertices} vertices")
    empty, lp = get_oracle("empty"), get_oracle("lp")

    def within(oracle):
        return lambda h: isinstance(elimination_distance(h, oracle, d), int)

    td = _min_modulator(g, within(empty))
    lpm = _min_modulator(g, within(lp))
    gap = 2 * opt_value(g) - lp_doubled_value(g)
    return ModulatorSizes(d, td, lpm, gap)
