"""Elimination distance to a base class, elimination forests, and exact
vertex cover on graphs of bounded elimination distance.

The distance is 0 for class members, one more than the best single-vertex
deletion for other connected graphs, and the maximum over components for
disconnected graphs. An elimination forest records one such deletion
strategy: internal nodes hold one deleted vertex each and leaves hold the
remaining class members (the base components).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .classes import ClassOracle
from .exact import Cover
from .graph import Graph, connected_components, induced_subgraph


@dataclass(frozen=True)
class Exceeds:
    """The distance is larger than ``limit``."""

    limit: int

    def __bool__(self) -> bool:
        return False


class ForestError(ValueError):
    pass


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class _DistanceSearch:
    """Memoised recursion on vertex masks of one graph."""

    def __init__(self, g: Graph, oracle: ClassOracle):
        self.g = g
        self.oracle = oracle
        self.masks = g.masks()
        self.exact: dict[int, int] = {}
        self.above: dict[int, int] = {}
        self.member_cache: dict[int, bool] = {}

    def member(self, mask: int) -> bool:
        hit = self.member_cache.get(mask)
        if hit is None:
            hit = self.oracle.member(induced_subgraph(self.g, _bits(mask))[0])
            self.member_cache[mask] = hit
        return hit

    def components(self, mask: int) -> list[int]:
        out = []
        rest = mask
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
            while frontier:
                v = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                new = self.masks[v] & mask & ~comp
                comp |= new
                frontier |= new
            out.append(comp)
            rest &= ~comp
        return out

    def distance(self, mask: int, limit: int) -> int:
        """Exact distance of G[mask] if at most ``limit``, else ``limit + 1``."""
        if limit < 0:
            return 0 if mask == 0 or self.member(mask) else limit + 1
        if mask in self.exact:
            e = self.exact[mask]
            return e if e <= limit else limit + 1
        if self.above.get(mask, -1) > limit:
            return limit + 1
        if mask == 0 or self.member(mask):
            self.exact[mask] = 0
            return 0
        comps = self.components(mask)
        if len(comps) > 1:
            worst = 0
            for c in comps:
                worst = max(worst, self.distance(c, limit))
                if worst > limit:
                    break
        else:
            worst = limit + 1
            if limit >= 1:
                for v in _bits(mask):
                    r = self.distance(mask & ~(1 << v), worst - 2)
                    if r + 1 < worst:
                        worst = r + 1
                        if worst == 1:
                            break
        if worst <= limit:
            self.exact[mask] = worst
        else:
            self.above[mask] = max(self.above.get(mask, 0), limit + 1)
        return worst

    def best_root(self, mask: int, d: int) -> int:
        for v in _bits(mask):
            if self.distance(mask & ~(1 << v), d - 1) <= d - 1:
                return v
        raise AssertionError("no root within the claimed depth")


def elimination_distance(g: Graph, oracle: ClassOracle, limit: int) -> Union[int, Exceeds]:
    """Exact distance if it is at most ``limit``, else ``Exceeds(limit)``."""
    if limit < 0:
        raise ValueError("limit must be non-negative")
    s = _DistanceSearch(g, oracle)
    d = s.distance((1 << g.n) - 1, limit)
    return d if d <= limit else Exceeds(limit)


@dataclass(frozen=True)
class EliminationForest:
    """Rooted forest stored as parallel tuples indexed by node id.

    ``parent[i]`` is -1 for roots. ``vertex[i]`` is the deleted vertex of an
    internal node and ``None`` for a leaf, whose vertices are ``bag[i]``.
    """

    parent: tuple[int, ...]
    vertex: tuple[Optional[int], ...]
    bag: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.parent)

    def is_leaf(self, i: int) -> bool:
        return self.vertex[i] is None

    def children(self, i: int) -> list[int]:
        return [j for j, p in enumerate(self.parent) if p == i]

    def roots(self) -> list[int]:
        return [i for i, p in enumerate(self.parent) if p == -1]

    def depth(self, i: int) -> int:
        d = 0
        while self.parent[i] != -1:
            i = self.parent[i]
            d += 1
            if d > self.size:
                raise ForestError("parent pointers contain a cycle")
        return d

    @property
    def height(self) -> int:
        return max((self.depth(i) for i in range(self.size) if self.is_leaf(i)), default=0)

    def internal_vertices(self) -> list[int]:
        return [v for v in self.vertex if v is not None]

    def root_vertices(self) -> list[int]:
        return [self.vertex[i] for i in self.roots() if not self.is_leaf(i)]

    def leaves(self) -> list[int]:
        return [i for i in range(self.size) if self.is_leaf(i)]

    def to_text(self) -> str:
        lines = []
        for i in range(self.size):
            if self.is_leaf(i):
                bag = ",".join(map(str, self.bag[i])) or "-"
                lines.append(f"leaf {i} parent {self.parent[i]} bag {bag}")
            else:
                lines.append(f"node {i} parent {self.parent[i]} vertex {self.vertex[i]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "EliminationForest":
        recs = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            parts = raw.split()
            if not parts or parts[0] == "c":
                continue
            try:
                kind, nid, kw, pid, kw2, val = parts
                if kw != "parent" or (kind, kw2) not in {("node", "vertex"), ("leaf", "bag")}:
                    raise ValueError
                nid, pid = int(nid), int(pid)
                if kind == "node":
                    recs[nid] = (pid, int(val), (int(val),))
                else:
                    bag = () if val == "-" else tuple(sorted(int(x) for x in val.split(",")))
                    recs[nid] = (pid, None, bag)
            except ValueError:
                raise ForestError(f"line {lineno}: malformed forest record {raw!r}") from None
        if sorted(recs) != list(range(len(recs))):
            raise ForestError("node ids must be 0..count-1")
        rows = [recs[i] for i in range(len(recs))]
        return cls(tuple(r[0] for r in rows), tuple(r[1] for r in rows), tuple(r[2] for r in rows))


class _ForestBuilder:
    def __init__(self):
        self.parent: list[int] = []
        self.vertex: list[Optional[int]] = []
        self.bag: list[tuple[int, ...]] = []

    def add(self, parent: int, vertex: Optional[int], bag: tuple[int, ...]) -> int:
        self.parent.append(parent)
        self.vertex.append(vertex)
        self.bag.append(bag)
        return len(self.parent) - 1

    def build(self) -> EliminationForest:
        return EliminationForest(tuple(self.parent), tuple(self.vertex), tuple(self.bag))


def elimination_forest(g: Graph, oracle: ClassOracle, d: int) -> Optional[EliminationForest]:
    """A checked forest of height at most ``d``, or ``None`` if none exists.

    A member graph becomes a single leaf. Otherwise each component that is
    not a member gets the smallest-id root that keeps the remaining depth
    within budget. A deleted vertex with nothing left below it gets an empty
    leaf.
    """
    if g.n == 0:
        return EliminationForest((), (), ())
    s = _DistanceSearch(g, oracle)
    full = (1 << g.n) - 1
    if s.distance(full, d) > d:
        return None
    b = _ForestBuilder()
    if s.member(full):
        b.add(-1, None, tuple(range(g.n)))
    else:
        def grow(mask: int, parent: int, budget: int) -> None:
            if mask == 0:
                b.add(parent, None, ())
                return
            for comp in s.components(mask):
                if s.member(comp):
                    b.add(parent, None, tuple(_bits(comp)))
                    continue
                depth = s.distance(comp, budget)
                v = s.best_root(comp, depth)
                node = b.add(parent, v, (v,))
                grow(comp & ~(1 << v), node, depth - 1)

        grow(full, -1, d)
    forest = b.build()
    if not verify_forest(g, forest, oracle, d):
        raise AssertionError("constructed forest failed its own checks")
    return forest


def forest_problems(g: Graph, forest: EliminationForest, oracle: ClassOracle, d: Optional[int] = None) -> list[str]:
    """Every violated forest condition, as readable strings."""
    probs = []
    k = forest.size
    for i, p in enumerate(forest.parent):
        if not -1 <= p < k or p == i:
            probs.append(f"node {i} has invalid parent {p}")
        elif p != -1 and forest.is_leaf(p):
            probs.append(f"node {i} hangs below leaf {p}")
    if probs:
        return probs
    try:
        depths = [forest.depth(i) for i in range(k)]
    except ForestError as e:
        return [str(e)]
    for i in range(k):
        if forest.is_leaf(i):
            sub, _ = induced_subgraph(g, forest.bag[i]) if all(0 <= v < g.n for v in forest.bag[i]) else (None, None)
            if sub is not None and not oracle.member(sub):
                probs.append(f"leaf {i} bag is not in class {oracle.tag}")
        else:
            if forest.bag[i] != (forest.vertex[i],):
                probs.append(f"internal node {i} must hold exactly its vertex")
            if not forest.children(i):
                probs.append(f"internal node {i} has no children")
    where: dict[int, int] = {}
    for i in range(k):
        for v in forest.bag[i]:
            if v in where:
                probs.append(f"vertex {v} in two bags")
            where[v] = i
    if sorted(where) != list(range(g.n)):
        probs.append("bags do not partition the vertex set")
        return probs

    def related(a: int, b: int) -> bool:
        if a == b:
            return True
        hi, lo = (a, b) if depths[a] < depths[b] else (b, a)
        while lo != -1 and depths[lo] > depths[hi]:
            lo = forest.parent[lo]
        return lo == hi

    for u, v in g.edges():
        if not related(where[u], where[v]):
            probs.append(f"edge ({u},{v}) joins unrelated nodes")
    if d is not None and forest.height > d:
        probs.append(f"height {forest.height} exceeds {d}")
    return probs


def verify_forest(g: Graph, forest: EliminationForest, oracle: ClassOracle, d: Optional[int] = None) -> bool:
    return not forest_problems(g, forest, oracle, d)


# exact solving along a given forest

class _Labelled:
    """Small mutable-free graph over arbitrary hashable labels."""

    __slots__ = ("adj",)

    def __init__(self, adj: dict):
        self.adj = adj

    def restrict(self, keep: set) -> "_Labelled":
        return _Labelled({v: self.adj[v] & keep for v in self.adj if v in keep})

    def components(self) -> list[frozenset]:
        seen: set = set()
        out = []
        for s in sorted(self.adj, key=_label_key):
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                v = stack.pop()
                for u in self.adj[v]:
                    if u not in comp:
                        comp.add(u)
                        stack.append(u)
            seen |= comp
            out.append(frozenset(comp))
        return out

    def to_graph(self) -> tuple[Graph, list]:
        labels = sorted(self.adj, key=_label_key)
        idx = {v: i for i, v in enumerate(labels)}
        edges = [(idx[u], idx[v]) for u in labels for v in self.adj[u] if idx[u] < idx[v]]
        return Graph.from_edges(len(labels), edges), labels


def _label_key(v):
    return (0, v, 0) if isinstance(v, int) else (1, v[1], v[2])


class _BoundedSolver:
    def __init__(self, oracle: ClassOracle, place: dict, use_apex: bool):
        # place[v] is ("int", depth) or ("leaf", leaf id)
        self.oracle = oracle
        self.place = place
        self.use_apex = use_apex
        self.memo: dict[frozenset, frozenset] = {}
        self.apex_count = 0

    def solve(self, h: _Labelled) -> frozenset:
        out: set = set()
        for comp in h.components():
            out |= self.solve_connected(h.restrict(set(comp)) if len(comp) < len(h.adj) else h)
        return frozenset(out)

    def solve_connected(self, h: _Labelled) -> frozenset:
        key = frozenset(h.adj)
        if not self.use_apex and key in self.memo:
            return self.memo[key]
        internal = [v for v in h.adj if self.place[v][0] == "int"]
        if not internal:
            g, labels = h.to_graph()
            res = frozenset(labels[i] for i in self.oracle.solve(g).vertices)
        else:
            r = min(internal, key=lambda v: (self.place[v][1], _label_key(v)))
            keep = set(h.adj) - {r}
            take_r = self.solve(h.restrict(keep)) | {r}
            nbrs = h.adj[r]
            if self.use_apex:
                rest = self.solve_without_neighbourhood(h, r)
            else:
                rest = self.solve(h.restrict(keep - nbrs)) | nbrs
            res = take_r if len(take_r) <= len(rest) else rest
        if not self.use_apex:
            self.memo[key] = res
        return res

    def solve_without_neighbourhood(self, h: _Labelled, r) -> frozenset:
        """Branch where ``r`` stays out of the cover, for non-hereditary classes.

        Tree vertices of N(r) are deleted. Base vertices of N(r) stay, and each
        touched leaf gets one new vertex adjacent to its part of N(r), which
        forces that part into the cover at a cost of at most one per leaf.
        """
        nbrs = h.adj[r]
        z_tree = {v for v in nbrs if self.place[v][0] == "int"}
        z_base = nbrs - z_tree
        keep = set(h.adj) - {r} - z_tree
        adj = {v: set(h.adj[v] & keep) for v in keep}
        by_leaf: dict = {}
        for v in sorted(z_base, key=_label_key):
            by_leaf.setdefault(self.place[v][1], []).append(v)
        apexes = []
        for leaf, zs in sorted(by_leaf.items()):
            self.apex_count += 1
            a = ("apex", self.apex_count, leaf)
            self.place[a] = ("leaf", leaf)
            adj[a] = set(zs)
            for z in zs:
                adj[z].add(a)
            apexes.append(a)
        s_hat = self.solve(_Labelled({v: frozenset(ns) for v, ns in adj.items()}))
        cover = {v for v in s_hat if not isinstance(v, tuple)} | z_tree
        if not z_base <= s_hat:
            cover.add(r)
        return frozenset(cover)


def solve_vc_bounded_ed(g: Graph, forest: EliminationForest, oracle: ClassOracle) -> Cover:
    """Minimum vertex cover by branching on forest roots.

    Each component's topmost forest vertex ``r`` is either in the cover or
    all of N(r) is. Components without forest vertices lie inside one leaf
    and go to the class solver. For non-hereditary classes the second branch
    keeps base vertices and attaches one new vertex per touched leaf instead
    of deleting them, so the leaves stay within one vertex of the class.
    """
    probs = forest_problems(g, forest, oracle)
    if probs:
        raise ForestError("; ".join(probs))
    place: dict = {}
    for i in range(forest.size):
        if forest.is_leaf(i):
            for v in forest.bag[i]:
                place[v] = ("leaf", i)
        else:
            place[forest.vertex[i]] = ("int", forest.depth(i))
    h = _Labelled({v: frozenset(g.adj[v]) for v in range(g.n)})
    res = _BoundedSolver(oracle, place, use_apex=not oracle.hereditary).solve(h)
    cover = tuple(sorted(res))
    if not g.is_cover(cover):
        raise AssertionError("bounded-depth solver produced a non-cover")
    return Cover(cover)
