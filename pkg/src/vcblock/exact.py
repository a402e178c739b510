"""Exact vertex cover, bipartite matching, and the half-integral LP."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from . import _kernels
from .graph import Graph, GraphInputError, connected_components, induced_subgraph


@dataclass(frozen=True)
class Cover:
    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


class _Infeasible:
    """Returned by budgeted solves when every cover exceeds the budget."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "INFEASIBLE"

    def __bool__(self) -> bool:
        return False


INFEASIBLE = _Infeasible()


def _mask_to_ids(mask: int, ids: tuple[int, ...]) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(ids[i])
        mask >>= 1
        i += 1
    return out


def solve_vc_exact(g: Graph, budget: Optional[int] = None) -> Union[Cover, _Infeasible]:
    """Minimum vertex cover by branch and bound, one component at a time.

    Branching takes a maximum-degree vertex (smallest id on ties), first into
    the cover, then its whole neighbourhood. With ``budget`` the result is a
    minimum cover if it fits, else ``INFEASIBLE``.
    """
    chosen: list[int] = []
    left = None if budget is None else int(budget)
    if left is not None and left < 0:
        return INFEASIBLE
    for comp in connected_components(g):
        if len(comp) == 1:
            continue
        sub, _ = induced_subgraph(g, comp)
        limit = None if left is None else left - len(chosen) + 1
        res = _kernels.min_cover_masks(sub.masks(), limit)
        if res is None:
            return INFEASIBLE
        chosen.extend(_mask_to_ids(res[1], comp))
    return Cover(tuple(sorted(chosen)))


def opt_value(g: Graph) -> int:
    return solve_vc_exact(g).size


def has_cover_of_size(g: Graph, k: int) -> bool:
    return k >= 0 and solve_vc_exact(g, k) is not INFEASIBLE


# bipartite matching

Matching = tuple[tuple[int, int], ...]


def _check_bipartition(g: Graph, left: Iterable[int], right: Iterable[int]):
    L = sorted(set(left))
    R = sorted(set(right))
    for v in L + R:
        if not 0 <= v < g.n:
            raise GraphInputError(f"vertex {v} out of range for n={g.n}")
    rs = set(R)
    if rs & set(L):
        raise GraphInputError("left and right sides overlap")
    ls = set(L)
    for u, v in g.edges():
        if (u in ls and v in ls) or (u in rs and v in rs):
            raise GraphInputError(f"edge ({u},{v}) lies inside one side")
    nbrs = {u: [v for v in g.adj[u] if v in rs] for u in L}
    return L, R, nbrs


def _hopcroft_karp(L, nbrs):
    """Maximum matching as a left->right dict. Ids are scanned ascending."""
    match_l: dict[int, int] = {}
    match_r: dict[int, int] = {}
    inf = float("inf")
    while True:
        dist: dict[int, float] = {}
        q = deque()
        for u in L:
            if u not in match_l:
                dist[u] = 0
                q.append(u)
        found = False
        while q:
            u = q.popleft()
            for v in nbrs[u]:
                w = match_r.get(v)
                if w is None:
                    found = True
                elif w not in dist:
                    dist[w] = dist[u] + 1
                    q.append(w)
        if not found:
            return match_l

        def augment(u) -> bool:
            for v in nbrs[u]:
                w = match_r.get(v)
                if w is None or (dist.get(w, inf) == dist[u] + 1 and augment(w)):
                    match_l[u] = v
                    match_r[v] = u
                    return True
            dist[u] = inf
            return False

        for u in L:
            if u not in match_l:
                augment(u)


def max_matching_bipartite(g: Graph, left: Iterable[int], right: Iterable[int]) -> Matching:
    """Maximum matching between ``left`` and ``right`` as (left, right) pairs."""
    L, _, nbrs = _check_bipartition(g, left, right)
    m = _hopcroft_karp(L, nbrs)
    return tuple(sorted(m.items()))


@dataclass(frozen=True)
class Saturating:
    matching: Matching


@dataclass(frozen=True)
class Violator:
    """``z`` has fewer neighbours than members; ``matching`` saturates left minus ``z``."""

    z: tuple[int, ...]
    matching: Matching


def _alternating_reach(L, nbrs, match_l):
    match_r = {v: u for u, v in match_l.items()}
    zl = {u for u in L if u not in match_l}
    zr: set[int] = set()
    q = deque(sorted(zl))
    while q:
        u = q.popleft()
        for v in nbrs[u]:
            if v not in zr:
                zr.add(v)
                w = match_r.get(v)
                if w is not None and w not in zl:
                    zl.add(w)
                    q.append(w)
    return zl, zr


def saturate_or_violator(g: Graph, left: Iterable[int], right: Iterable[int]):
    """Either a matching saturating ``left`` or a Hall violator inside it."""
    L, _, nbrs = _check_bipartition(g, left, right)
    m = _hopcroft_karp(L, nbrs)
    if len(m) == len(L):
        return Saturating(tuple(sorted(m.items())))
    zl, _ = _alternating_reach(L, nbrs, m)
    rest = tuple(sorted((u, v) for u, v in m.items() if u not in zl))
    return Violator(tuple(sorted(zl)), rest)


def konig_cover(g: Graph, left: Iterable[int], right: Iterable[int]) -> tuple[int, ...]:
    """Minimum vertex cover of a bipartite graph from a maximum matching."""
    L, R, nbrs = _check_bipartition(g, left, right)
    m = _hopcroft_karp(L, nbrs)
    zl, zr = _alternating_reach(L, nbrs, m)
    return tuple(sorted([u for u in L if u not in zl] + [v for v in R if v in zr]))


# half-integral LP

@dataclass(frozen=True)
class HalfIntegralSolution:
    v0: tuple[int, ...]
    v_half: tuple[int, ...]
    v1: tuple[int, ...]

    @property
    def doubled_value(self) -> int:
        return 2 * len(self.v1) + len(self.v_half)

    def value_of(self, v: int) -> float:
        if v in self.v1:
            return 1.0
        return 0.5 if v in self.v_half else 0.0


def _double_cover(g: Graph) -> Graph:
    n = g.n
    edges = []
    for u, v in g.edges():
        edges.append((u, v + n))
        edges.append((v, u + n))
    return Graph.from_edges(2 * n, edges)


def lp_doubled_value(g: Graph) -> int:
    """Twice the LP optimum, i.e. the maximum matching size of the double cover."""
    n = g.n
    return len(max_matching_bipartite(_double_cover(g), range(n), range(n, 2 * n)))


def _lp_any(g: Graph) -> tuple[list[int], list[int], list[int]]:
    n = g.n
    cov = set(konig_cover(_double_cover(g), range(n), range(n, 2 * n)))
    v0, vh, v1 = [], [], []
    for v in range(n):
        hits = (v in cov) + (v + n in cov)
        (v0, vh, v1)[hits].append(v)
    return v0, vh, v1


# components whose zero-able vertex set exceeds this skip the canonical search
CANONICAL_SEARCH_LIMIT = 26


def _canonical_component(g: Graph) -> Optional[tuple[list[int], list[int]]]:
    """Optimal (V0, V1) of a connected graph with fewest half values.

    In an optimum V1 = N(V0), and the value is n/2 - (|I| - |N(I)|)/2 with
    I = V0. So we want an independent I of maximum surplus, then maximum size,
    then the smallest N(I). Only vertices that are zero in some optimum can be
    in I.
    """
    n = g.n
    target = lp_doubled_value(g)
    cand = []
    for v in range(n):
        rest, _ = induced_subgraph(g, [u for u in range(n) if u != v and u not in g.adj[v]])
        if 2 * g.degree(v) + lp_doubled_value(rest) == target:
            cand.append(v)
    if len(cand) > CANONICAL_SEARCH_LIMIT:
        return None
    masks = g.masks()
    best_key = None
    best = ([], [])

    def visit(i: int, imask: int, nmask: int, size: int) -> None:
        nonlocal best_key, best
        if i == len(cand):
            ncount = bin(nmask).count("1")
            if 2 * ncount + (n - size - ncount) != target:
                return
            nb = [v for v in range(n) if nmask >> v & 1]
            key = (-size, nb)
            if best_key is None or key < best_key:
                best_key = key
                best = ([v for v in range(n) if imask >> v & 1], nb)
            return
        visit(i + 1, imask, nmask, size)
        v = cand[i]
        if not masks[v] & imask:
            visit(i + 1, imask | 1 << v, nmask | masks[v], size + 1)

    visit(0, 0, 0, 0)
    return best


def lp_half_integral(g: Graph) -> HalfIntegralSolution:
    """Optimal half-integral LP solution with the fewest half values.

    Ties go to the lexicographically smallest V1. Components are handled
    separately since the LP splits over them.
    """
    v0: list[int] = []
    v1: list[int] = []
    vh: list[int] = []
    for comp in connected_components(g):
        sub, _ = induced_subgraph(g, comp)
        res = _canonical_component(sub) if sub.n > 1 else ([0], [])
        if res is None:
            a, h, b = _lp_any(sub)
            res = (a, b)
        zs, ones = set(res[0]), set(res[1])
        for i, v in enumerate(comp):
            if i in zs:
                v0.append(v)
            elif i in ones:
                v1.append(v)
            else:
                vh.append(v)
    return HalfIntegralSolution(tuple(sorted(v0)), tuple(sorted(vh)), tuple(sorted(v1)))


def lp_half_integral_fast(g: Graph) -> HalfIntegralSolution:
    """Some optimal half-integral solution, straight from the double cover."""
    v0, vh, v1 = _lp_any(g)
    return HalfIntegralSolution(tuple(v0), tuple(vh), tuple(v1))


class PersistenceError(AssertionError):
    pass


def nemhauser_trotter(g: Graph, check: bool = True):
    """(V0, V1/2, V1) with OPT(g) = |V1| + OPT(g[V1/2]) checked exactly."""
    sol = lp_half_integral(g)
    if check:
        opt = opt_value(g)
        sub, _ = induced_subgraph(g, sol.v_half)
        if opt != len(sol.v1) + opt_value(sub):
            raise PersistenceError("persistence identity failed")
        ones = set(sol.v1)
        if not g.is_independent(sol.v0) or any(u not in ones for v in sol.v0 for u in g.adj[v]):
            raise PersistenceError("zero part is not independent with neighbours at one")
    return sol.v0, sol.v_half, sol.v1
