"""Immutable simple graphs over contiguous integer ids, plus hypergraphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


class GraphInputError(ValueError):
    """A vertex id or edge that does not fit the graph it is applied to."""


def _check_ids(n: int, vs: Iterable[int]) -> tuple[int, ...]:
    out = tuple(sorted(set(int(v) for v in vs)))
    if out and (out[0] < 0 or out[-1] >= n):
        bad = out[0] if out[0] < 0 else out[-1]
        raise GraphInputError(f"vertex {bad} out of range for n={n}")
    return out


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``. Instances are
    immutable and compare by value.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    _masks: tuple[int, ...] = field(default=(), repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphInputError("adjacency length differs from n")
        masks = []
        for v, nb in enumerate(self.adj):
            m = 0
            for u in nb:
                m |= 1 << u
            masks.append(m)
        object.__setattr__(self, "_masks", tuple(masks))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, tuple(() for _ in range(n)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, combinations(range(n), 2))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)] if n >= 3 else [])

    @classmethod
    def petersen(cls) -> "Graph":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    # queries
    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def masks(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks, one Python int per vertex."""
        return self._masks

    def neighborhood(self, s: Iterable[int]) -> set[int]:
        """Open neighbourhood N(S) minus S itself."""
        s = set(s)
        out: set[int] = set()
        for v in s:
            out.update(self.adj[v])
        return out - s

    def is_independent(self, s: Iterable[int]) -> bool:
        s = list(s)
        mask = 0
        for v in s:
            mask |= 1 << v
        return all(not (self._masks[v] & mask) for v in s)

    def is_cover(self, s: Iterable[int]) -> bool:
        mask = 0
        for v in s:
            mask |= 1 << v
        return all(mask >> u & 1 or mask >> v & 1 for u, v in self.edges())


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s`` with vertices renumbered in ascending order.

    Returns the graph and the old-id to new-id map.
    """
    keep = _check_ids(g.n, s)
    remap = {old: new for new, old in enumerate(keep)}
    adj = tuple(tuple(remap[u] for u in g.adj[v] if u in remap) for v in keep)
    return Graph(len(keep), adj), remap


def remove_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    drop = set(_check_ids(g.n, s))
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the components, ordered by smallest member."""
    seen = [False] * g.n
    parts = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], [s]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
                    comp.append(u)
        parts.append(tuple(sorted(comp)))
    return parts


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """``g2`` is appended after ``g1`` with its ids shifted by ``g1.n``."""
    shift = g1.n
    return Graph(g1.n + g2.n, g1.adj + tuple(tuple(u + shift for u in nb) for nb in g2.adj))


def add_vertex(g: Graph, nbrs: Iterable[int]) -> Graph:
    """New vertex ``g.n`` adjacent to ``nbrs``."""
    nbrs = _check_ids(g.n, nbrs)
    return Graph.from_edges(g.n + 1, g.edges() + [(v, g.n) for v in nbrs])


def add_edges(g: Graph, extra: Iterable[Sequence[int]]) -> Graph:
    return Graph.from_edges(g.n, g.edges() + [tuple(e) for e in extra])


@dataclass(frozen=True)
class Hypergraph:
    """``d``-uniform hypergraph; each edge is a sorted tuple of ``d`` ids."""

    n: int
    d: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.d < 2:
            raise GraphInputError("hyperedge arity must be at least 2")
        canon = []
        for e in self.edges:
            t = tuple(sorted(int(v) for v in e))
            if len(set(t)) != self.d or len(t) != self.d:
                raise GraphInputError(f"hyperedge {e} does not have {self.d} distinct vertices")
            if t[0] < 0 or t[-1] >= self.n:
                raise GraphInputError(f"hyperedge {e} out of range for n={self.n}")
            canon.append(t)
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    def is_cover(self, s: Iterable[int]) -> bool:
        s = set(s)
        return all(any(v in s for v in e) for e in self.edges)
