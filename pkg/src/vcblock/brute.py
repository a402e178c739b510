"""Exhaustive reference computations, vectorised over all vertex subsets.

These are deliberately naive and share no code with the solvers they check.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Callable, Iterable

import numpy as np

from .graph import Graph, Hypergraph

MAX_BRUTE_N = 22


def _popcounts(n: int) -> np.ndarray:
    masks = np.arange(1 << n, dtype=np.int64)
    pc = np.zeros(1 << n, dtype=np.int16)
    for v in range(n):
        pc += ((masks >> v) & 1).astype(np.int16)
    return pc


def cover_table(g: Graph) -> np.ndarray:
    """Boolean array over all masks: is the mask a vertex cover."""
    if g.n > MAX_BRUTE_N:
        raise ValueError(f"brute force limited to n <= {MAX_BRUTE_N}")
    masks = np.arange(1 << g.n, dtype=np.int64)
    ok = np.ones(1 << g.n, dtype=bool)
    for u, v in g.edges():
        ok &= ((masks >> u) & 1 | (masks >> v) & 1).astype(bool)
    return ok


def opt(g: Graph) -> int:
    if g.n == 0:
        return 0
    return int(_popcounts(g.n)[cover_table(g)].min())


def min_cover_masks(g: Graph) -> np.ndarray:
    pc = _popcounts(g.n)
    ok = cover_table(g)
    best = pc[ok].min()
    return np.nonzero(ok & (pc == best))[0].astype(np.int64)


def _to_mask(s: Iterable[int]) -> int:
    m = 0
    for v in s:
        m |= 1 << v
    return m


def is_blocking(g: Graph, y: Iterable[int], covers: np.ndarray | None = None) -> bool:
    """No minimum cover contains ``y``."""
    if covers is None:
        covers = min_cover_masks(g)
    ym = _to_mask(y)
    return not bool(np.any((covers & ym) == ym))


def is_minimal_blocking_exhaustive(g: Graph, y: Iterable[int]) -> bool:
    y = sorted(y)
    covers = min_cover_masks(g)
    if not is_blocking(g, y, covers):
        return False
    for r in range(len(y)):
        for sub in combinations(y, r):
            if is_blocking(g, sub, covers):
                return False
    return True


def minimal_blocking_sets(g: Graph) -> list[tuple[int, ...]]:
    """Every minimal blocking set, by size then lexicographically."""
    covers = min_cover_masks(g)
    found: list[int] = []
    out = []
    for r in range(1, g.n + 1):
        for y in combinations(range(g.n), r):
            ym = _to_mask(y)
            if any(f & ym == f for f in found):
                continue
            if not np.any((covers & ym) == ym):
                found.append(ym)
                out.append(y)
    return out


def beta(g: Graph) -> int:
    sets = minimal_blocking_sets(g)
    return max((len(s) for s in sets), default=0)


def lp_doubled(g: Graph) -> int:
    """Twice the LP optimum by trying every {0, 1/2, 1} assignment."""
    if g.n > 12:
        raise ValueError("half-integral enumeration limited to n <= 12")
    best = 2 * g.n
    edges = g.edges()
    for x in product((0, 1, 2), repeat=g.n):
        if all(x[u] + x[v] >= 2 for u, v in edges):
            best = min(best, sum(x))
    return best


def half_integral_optima(g: Graph) -> list[tuple[int, ...]]:
    """All optimal half-integral solutions as doubled value tuples."""
    edges = g.edges()
    target = lp_doubled(g)
    return [
        x for x in product((0, 1, 2), repeat=g.n)
        if sum(x) == target and all(x[u] + x[v] >= 2 for u, v in edges)
    ]


def hypergraph_has_cover(h: Hypergraph, k: int) -> bool:
    if k < 0:
        return False
    for r in range(min(k, h.n) + 1):
        for s in combinations(range(h.n), r):
            if h.is_cover(s):
                return True
    return False


def max_matching_size(g: Graph) -> int:
    """Maximum matching by trying edge subsets, for small graphs."""
    edges = g.edges()
    best = 0

    def go(i: int, used: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + (len(edges) - i) <= best:
            return
        for j in range(i, len(edges)):
            u, v = edges[j]
            if not (used >> u & 1 or used >> v & 1):
                go(j + 1, used | 1 << u | 1 << v, size + 1)

    go(0, 0, 0)
    return best


def elimination_distance(g: Graph, member: Callable[[Graph], bool]) -> int:
    """Direct, unmemoised recursion on the definition. Tiny graphs only."""
    from .graph import connected_components, induced_subgraph, remove_vertices

    if member(g):
        return 0
    comps = connected_components(g)
    if len(comps) > 1:
        return max(elimination_distance(induced_subgraph(g, c)[0], member) for c in comps)
    return 1 + min(elimination_distance(remove_vertices(g, [v])[0], member) for v in range(g.n))


def path_treedepth(n: int) -> int:
    """Treedepth of the path on ``n`` vertices, ceil(log2(n + 1))."""
    return (n).bit_length() if n > 0 else 0
