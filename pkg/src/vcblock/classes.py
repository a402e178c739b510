"""Base graph classes: membership, in-class solving and blocking-set bounds."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Optional

from .exact import (
    Cover,
    konig_cover,
    lp_doubled_value,
    opt_value,
    solve_vc_exact,
)
from .graph import Graph, connected_components


class UnknownClassError(ValueError):
    pass


class UnsupportedClassError(ValueError):
    pass


def two_coloring(g: Graph) -> Optional[list[int]]:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(connected_components(g))


def is_cluster(g: Graph, q: Optional[int] = None) -> bool:
    for comp in connected_components(g):
        if q is not None and len(comp) > q:
            return False
        if any(g.degree(v) != len(comp) - 1 for v in comp):
            return False
    return True


def _in_lp(g: Graph) -> bool:
    return 2 * opt_value(g) == lp_doubled_value(g)


def _solve_forest(g: Graph) -> Cover:
    """Repeatedly put the neighbour of a leaf into the cover."""
    deg = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    cover = []
    leaves = [v for v in range(g.n) if deg[v] == 1]
    while leaves:
        v = leaves.pop()
        if not alive[v] or deg[v] != 1:
            continue
        u = next(w for w in g.adj[v] if alive[w])
        cover.append(u)
        for x in (u, v):
            alive[x] = False
            for w in g.adj[x]:
                if alive[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        leaves.append(w)
    return Cover(tuple(sorted(cover)))


def _solve_bipartite(g: Graph) -> Cover:
    color = two_coloring(g)
    left = [v for v in range(g.n) if color[v] == 0]
    right = [v for v in range(g.n) if color[v] == 1]
    return Cover(konig_cover(g, left, right))


def _solve_cluster(g: Graph) -> Cover:
    return Cover(tuple(sorted(v for comp in connected_components(g) for v in comp[1:])))


def solve_with_lp_bound(g: Graph) -> Cover:
    """Exact solve that first tries the LP lower bound as a budget."""
    lb = (lp_doubled_value(g) + 1) // 2
    res = solve_vc_exact(g, lb)
    return res if res else solve_vc_exact(g)


@dataclass(frozen=True)
class ClassOracle:
    tag: str
    hereditary: bool
    robust: bool
    beta: Optional[int]
    f: Optional[Callable[[int], int]] = None
    q: Optional[int] = None

    def member(self, g: Graph) -> bool:
        kind = self.tag.split(":")[0]
        if kind == "empty":
            return g.n == 0
        if kind == "indset":
            return g.m == 0
        if kind == "forest":
            return is_forest(g)
        if kind == "bipartite":
            return two_coloring(g) is not None
        if kind == "cluster":
            return is_cluster(g, self.q)
        if kind == "lp":
            return _in_lp(g)
        raise UnknownClassError(self.tag)

    def solve(self, g: Graph) -> Cover:
        """Minimum cover; exact fallback when ``g`` is not a member."""
        kind = self.tag.split(":")[0]
        if kind == "lp":
            return solve_with_lp_bound(g)
        if kind != "empty" and self.member(g):
            if kind == "indset":
                return Cover(())
            if kind == "forest":
                return _solve_forest(g)
            if kind == "bipartite":
                return _solve_bipartite(g)
            if kind == "cluster":
                return _solve_cluster(g)
        return solve_vc_exact(g)

    def opt(self, g: Graph) -> int:
        return self.solve(g).size

    def __repr__(self) -> str:
        return f"ClassOracle({self.tag!r})"


_FIXED = {
    "empty": ClassOracle("empty", hereditary=True, robust=True, beta=0),
    "indset": ClassOracle("indset", hereditary=True, robust=True, beta=1),
    "forest": ClassOracle("forest", hereditary=True, robust=True, beta=2),
    "bipartite": ClassOracle("bipartite", hereditary=True, robust=True, beta=2),
    "lp": ClassOracle("lp", hereditary=False, robust=True, beta=2, f=lambda c: 2 * c + 2),
}

TAGS = ("empty", "indset", "forest", "bipartite", "cluster:<q>", "lp")


def get_oracle(tag: str) -> ClassOracle:
    tag = tag.strip()
    if tag in _FIXED:
        return _FIXED[tag]
    if tag.startswith("cluster:"):
        try:
            q = int(tag.split(":", 1)[1])
        except ValueError:
            raise UnknownClassError(f"bad clique size in {tag!r}") from None
        if q < 1:
            raise UnknownClassError(f"clique size must be positive in {tag!r}")
        return ClassOracle(f"cluster:{q}", hereditary=True, robust=True, beta=q, q=q)
    raise UnknownClassError(f"unknown class {tag!r}; expected one of {', '.join(TAGS)}")


def member(oracle: ClassOracle, g: Graph) -> bool:
    return oracle.member(g)


def solve_in_class(oracle: ClassOracle, g: Graph) -> Cover:
    return oracle.solve(g)


def _hereditary_bound(beta: int, d: int) -> int:
    if beta == 1:
        return 1 if d == 0 else 2 ** (d - 1) + 1
    return (beta - 1) * 2**d + 1


def beta_upper_bound(oracle: ClassOracle, d: int) -> int:
    """Largest possible minimal blocking set at elimination distance ``d``.

    Exact for hereditary classes. For the empty class, distance ``d`` is
    treedepth ``d``, i.e. distance ``d - 1`` to independent sets.
    """
    if d < 0:
        raise ValueError("depth must be non-negative")
    if oracle.beta is None:
        raise UnsupportedClassError(f"{oracle.tag} has no bounded blocking-set size")
    if oracle.tag == "empty":
        return 0 if d == 0 else _hereditary_bound(1, d - 1)
    if oracle.hereditary:
        return _hereditary_bound(oracle.beta, d)
    if oracle.f is None:
        raise UnsupportedClassError(f"{oracle.tag} is not hereditary and has no growth bound")
    return sum(comb(d, i) * oracle.f(i) for i in range(d + 1)) - 2**d + 1
