"""Seeded random graphs, class members, planted forests and instances."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .classes import ClassOracle
from .exact import opt_value
from .elimination import EliminationForest
from .graph import Graph, Hypergraph
from .instance import ModulatorInstance

DEFAULT_SEED = 20240601


def rng_from(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    pairs = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, pairs)


def random_bipartite(rng: np.random.Generator, n: int, p: float) -> Graph:
    side = rng.random(n) < 0.5
    pairs = [(u, v) for u, v in combinations(range(n), 2) if side[u] != side[v] and rng.random() < p]
    return Graph.from_edges(n, pairs)


def random_forest(rng: np.random.Generator, n: int, attach: float = 0.85) -> Graph:
    pairs = [(int(rng.integers(v)), v) for v in range(1, n) if rng.random() < attach]
    return Graph.from_edges(n, pairs)


def random_cluster(rng: np.random.Generator, n: int, q: int) -> Graph:
    edges = []
    start = 0
    while start < n:
        size = int(rng.integers(1, q + 1))
        block = range(start, min(n, start + size))
        edges += list(combinations(block, 2))
        start += size
    return Graph.from_edges(n, edges)


def random_lp_member(rng: np.random.Generator, n: int, tries: int = 30) -> Graph:
    """Random graph with OPT = LP; falls back to a bipartite graph."""
    from .classes import get_oracle

    lp = get_oracle("lp")
    if n >= 4 and rng.random() < 0.5:
        # odd cycle with one pendant, the rest a path: a non-bipartite member
        c = 3 + 2 * int(rng.integers(0, (n - 2) // 2))
        edges = [(i, (i + 1) % c) for i in range(c)] + [(0, c)]
        edges += [(v, v + 1) for v in range(c + 1, n - 1)]
        return Graph.from_edges(n, edges)
    for _ in range(tries):
        g = random_graph(rng, n, float(rng.uniform(0.1, 0.6)))
        if not _is_bipartite(g) and lp.member(g):
            return g
    return random_bipartite(rng, n, float(rng.uniform(0.2, 0.7)))


def _is_bipartite(g: Graph) -> bool:
    from .classes import two_coloring

    return two_coloring(g) is not None


def random_member(oracle: ClassOracle, rng: np.random.Generator, n: int) -> Graph:
    kind = oracle.tag.split(":")[0]
    if kind == "empty":
        return Graph.empty(0)
    if kind == "indset":
        return Graph.empty(n)
    if kind == "forest":
        return random_forest(rng, n)
    if kind == "bipartite":
        return random_bipartite(rng, n, float(rng.uniform(0.2, 0.7)))
    if kind == "cluster":
        return random_cluster(rng, n, oracle.q)
    if kind == "lp":
        return random_lp_member(rng, n)
    raise ValueError(oracle.tag)


def planted_graph(
    oracle: ClassOracle, rng: np.random.Generator, d: int, n_max: int
) -> tuple[Graph, EliminationForest]:
    """Random graph together with an elimination forest of height at most ``d``.

    A depth-``d`` piece is a root joined to a random set of vertices in one
    to three depth ``d - 1`` pieces below it; depth 0 pieces are class members.
    """
    edges: list[tuple[int, int]] = []
    parent: list[int] = []
    vertex: list = []
    bag: list[tuple[int, ...]] = []
    count = 0

    def node(p: int, v, b: tuple[int, ...]) -> int:
        parent.append(p)
        vertex.append(v)
        bag.append(b)
        return len(parent) - 1

    def piece(depth: int, budget: int, p: int) -> list[int]:
        nonlocal count
        if depth == 0 or budget <= 2:
            size = 0 if oracle.tag == "empty" else min(budget, int(rng.integers(1, 5)))
            h = random_member(oracle, rng, size)
            ids = list(range(count, count + h.n))
            count += h.n
            edges.extend((ids[u], ids[v]) for u, v in h.edges())
            node(p, None, tuple(ids))
            return ids
        r = count
        count += 1
        me = node(p, r, (r,))
        below: list[int] = []
        for _ in range(int(rng.integers(1, 4))):
            left = budget - 1 - len(below)
            if left <= 0:
                break
            below += piece(depth - 1, int(rng.integers(1, left + 1)), me)
        nbrs = [v for v in below if rng.random() < 0.75]
        if below and not nbrs:
            nbrs = [below[int(rng.integers(len(below)))]]
        edges.extend((r, v) for v in nbrs)
        return [r] + below

    while count < n_max:
        made = piece(d, n_max - count, -1)
        if not made or rng.random() < 0.4:
            break
    g = Graph.from_edges(count, edges)
    return g, EliminationForest(tuple(parent), tuple(vertex), tuple(bag))


def random_instance(
    oracle: ClassOracle,
    rng: np.random.Generator,
    d: int = 0,
    n_max: int = 18,
    x_max: int = 5,
) -> ModulatorInstance:
    """Modulator instance: planted rest plus up to ``x_max`` attached vertices."""
    xs = int(rng.integers(1, x_max + 1))
    rest, _ = planted_graph(oracle, rng, d, max(1, n_max - xs))
    n = rest.n + xs
    edges = [(u + xs, v + xs) for u, v in rest.edges()]
    for a, b in combinations(range(xs), 2):
        if rng.random() < 0.3:
            edges.append((a, b))
    p = float(rng.uniform(0.05, 0.35))
    for a in range(xs):
        for v in range(xs, n):
            if rng.random() < p:
                edges.append((a, v))
    g = Graph.from_edges(n, edges)
    k = max(0, opt_value(g) + int(rng.integers(-1, 2)))
    return ModulatorInstance(g, k, tuple(range(xs)), oracle.tag, d)


def random_hypergraph(rng: np.random.Generator, n: int, m: int, d: int) -> Hypergraph:
    pool = list(combinations(range(n), d))
    m = min(m, len(pool))
    picks = rng.choice(len(pool), size=m, replace=False)
    return Hypergraph(n, d, tuple(pool[int(i)] for i in sorted(picks)))


def random_subset(rng: np.random.Generator, n: int, p: float = 0.5) -> tuple[int, ...]:
    return tuple(v for v in range(n) if rng.random() < p)
