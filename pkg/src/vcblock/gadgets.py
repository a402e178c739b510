"""Graphs with large minimal blocking sets, and the hypergraph reduction.

Three constructions grow a minimal blocking set ``Y`` of ``H``:

* attach: one new vertex adjacent to exactly ``Y``; ``Y`` plus the new vertex
  is minimal blocking and the optimum grows by one;
* glue: two graphs joined by one edge between chosen blocking vertices; the
  remaining blocking vertices form a minimal blocking set and the optima add
  up (the first set needs at least two vertices);
* double: attach, then glue a fresh copy of ``H`` onto the new vertex. The
  new vertex separates the copies, so the elimination distance grows by at
  most one while the blocking set grows to ``2|Y| - 1``.

Repeating ``double`` from a class member gives graphs meeting the largest
possible minimal blocking set size at every depth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .blocking import is_minimal_blocking_set
from .classes import ClassOracle, UnsupportedClassError, get_oracle, is_cluster
from .elimination import elimination_distance
from .exact import opt_value
from .graph import Graph, Hypergraph, add_edges, add_vertex, disjoint_union, remove_vertices
from .instance import ModulatorInstance


class GadgetError(ValueError):
    """A construction input or output failed its checks."""


@dataclass(frozen=True)
class GadgetWitness:
    graph: Graph
    blocking_set: tuple[int, ...]
    claimed_opt: int
    claimed_ed: Optional[int]
    tag: str

    def sidecar(self) -> str:
        ed = "-" if self.claimed_ed is None else str(self.claimed_ed)
        return (
            f"class: {self.tag}\n"
            f"blocking: {' '.join(map(str, self.blocking_set))}\n"
            f"opt: {self.claimed_opt}\n"
            f"ed: {ed}\n"
        )


def verify_witness(w: GadgetWitness, check_ed: bool = True) -> None:
    """Raise ``GadgetError`` unless every claim of ``w`` holds."""
    if not is_minimal_blocking_set(w.graph, w.blocking_set):
        raise GadgetError(f"{list(w.blocking_set)} is not a minimal blocking set")
    opt = opt_value(w.graph)
    if opt != w.claimed_opt:
        raise GadgetError(f"optimum is {opt}, claimed {w.claimed_opt}")
    if check_ed and w.claimed_ed is not None:
        d = elimination_distance(w.graph, get_oracle(w.tag), w.claimed_ed)
        if not isinstance(d, int):
            raise GadgetError(f"elimination distance exceeds {w.claimed_ed}")


def _need_minimal(h: Graph, y: tuple[int, ...], what: str) -> None:
    if not is_minimal_blocking_set(h, y):
        raise GadgetError(f"{what} {list(y)} is not a minimal blocking set")


def _finish(w: GadgetWitness, verify: bool, check_ed: bool) -> GadgetWitness:
    if verify:
        verify_witness(w, check_ed)
    return w


def attach_blocker_apex(
    h: Graph,
    y: Iterable[int],
    tag: str = "indset",
    claimed_ed: Optional[int] = None,
    verify: bool = True,
    check_ed: bool = True,
) -> GadgetWitness:
    """New vertex ``h.n`` adjacent to exactly ``y``."""
    y = tuple(sorted(set(y)))
    _need_minimal(h, y, "y")
    g = add_vertex(h, y)
    w = GadgetWitness(g, y + (h.n,), opt_value(h) + 1, claimed_ed, tag)
    return _finish(w, verify, check_ed)


def glue_on_blockers(
    h1: Graph,
    y1: Iterable[int],
    pick1: int,
    h2: Graph,
    y2: Iterable[int],
    pick2: Optional[int] = None,
    tag: str = "indset",
    claimed_ed: Optional[int] = None,
    verify: bool = True,
    check_ed: bool = True,
) -> GadgetWitness:
    """Disjoint union plus the edge ``pick1``-``pick2``; ``h2`` ids shift by ``h1.n``."""
    y1 = tuple(sorted(set(y1)))
    y2 = tuple(sorted(set(y2)))
    if len(y1) < 2:
        raise GadgetError("the first blocking set needs at least two vertices")
    if pick2 is None:
        pick2 = y2[0] if y2 else -1
    if pick1 not in y1 or pick2 not in y2:
        raise GadgetError("picked vertices must lie in their blocking sets")
    _need_minimal(h1, y1, "y1")
    _need_minimal(h2, y2, "y2")
    s = h1.n
    g = add_edges(disjoint_union(h1, h2), [(pick1, pick2 + s)])
    ys = tuple(sorted([v for v in y1 if v != pick1] + [v + s for v in y2 if v != pick2]))
    w = GadgetWitness(g, ys, opt_value(h1) + opt_value(h2), claimed_ed, tag)
    return _finish(w, verify, check_ed)


def double_blocking_gadget(
    h: Graph,
    y: Iterable[int],
    tag: str = "indset",
    base_ed: Optional[int] = None,
    verify: bool = True,
    check_ed: bool = True,
) -> GadgetWitness:
    """Blocking set of size ``2|y| - 1`` at one more elimination level."""
    y = tuple(sorted(set(y)))
    first = attach_blocker_apex(h, y, tag, verify=False)
    apex = h.n
    ed = None if base_ed is None else base_ed + 1
    return glue_on_blockers(
        first.graph, first.blocking_set, apex, h, y, y[0], tag, ed, verify, check_ed
    )


def base_witness(oracle: ClassOracle) -> GadgetWitness:
    """A class member whose minimal blocking set has the class maximum size."""
    kind = oracle.tag.split(":")[0]
    if kind == "indset":
        g, y = Graph.empty(1), (0,)
    elif kind == "cluster":
        g, y = Graph.complete(oracle.q), tuple(range(oracle.q))
    elif kind == "forest":
        g, y = Graph.path(4), (0, 3)
    elif kind == "bipartite":
        g, y = Graph.cycle(4), (0, 1)
    elif kind == "lp":
        g, y = Graph.complete(2), (0, 1)
    else:
        raise UnsupportedClassError(f"{oracle.tag} has no member with a blocking set")
    return GadgetWitness(g, y, opt_value(g), 0, oracle.tag)


def build_lb_tower(
    oracle: ClassOracle,
    d: int,
    base: Optional[GadgetWitness] = None,
    verify: bool = True,
    check_ed: bool = True,
) -> list[GadgetWitness]:
    """Witnesses for depths ``1..d``; the last one is the tower top.

    With class maximum 1 the first level attaches a vertex to the base; with
    a larger maximum it doubles the base. Every later level doubles the one
    below, so sizes go ``2, 3, 5, 9, ...`` or ``(b - 1) 2^i + 1``.
    """
    if d < 1:
        raise ValueError("tower depth must be at least 1")
    if base is None:
        base = base_witness(oracle)
    if oracle.beta is None or oracle.tag == "empty":
        raise UnsupportedClassError(f"no tower for class {oracle.tag}")
    if len(base.blocking_set) == 1:
        cur = attach_blocker_apex(base.graph, base.blocking_set, oracle.tag, 1, verify, check_ed)
    else:
        cur = double_blocking_gadget(base.graph, base.blocking_set, oracle.tag, 0, verify, check_ed)
    levels = [cur]
    for i in range(2, d + 1):
        prev = len(cur.blocking_set)
        cur = double_blocking_gadget(cur.graph, cur.blocking_set, oracle.tag, i - 1, verify, check_ed)
        if len(cur.blocking_set) != 2 * prev - 1:
            raise GadgetError("blocking set did not double")
        levels.append(cur)
    return levels


def infer_class(g: Graph) -> tuple[str, int]:
    """A registered class and depth that ``g`` fits, smallest depth first."""
    if g.m == 0:
        return "indset", 0
    if is_cluster(g):
        from .graph import connected_components

        return f"cluster:{max(len(c) for c in connected_components(g))}", 0
    for tag in ("forest", "bipartite", "lp"):
        if get_oracle(tag).member(g):
            return tag, 0
    return "indset", elimination_distance(g, get_oracle("indset"), g.n)


def transform_hypergraph_vc(
    hyp: Hypergraph,
    k: int,
    h: Graph,
    b: Iterable[int],
    tag: Optional[str] = None,
    verify: bool = True,
) -> tuple[ModulatorInstance, int]:
    """Vertex cover instance equivalent to hypergraph cover of size ``k``.

    Vertices ``0..n-1`` are the modulator, one per hypergraph vertex. Copy
    ``j`` of ``h`` starts at ``n + j |h|``. The ``q``-th smallest vertex of
    ``b`` in copy ``j`` is joined to the ``q``-th smallest vertex of edge
    ``j``. Returns the instance and ``OPT(h)``; the new budget is
    ``m OPT(h) + k``.
    """
    b = tuple(sorted(set(b)))
    if len(b) != hyp.d:
        raise GadgetError(f"blocking set has {len(b)} vertices, edges have {hyp.d}")
    if verify:
        _need_minimal(h, b, "b")
    n, s = hyp.n, h.n
    g = Graph.empty(n)
    for _ in hyp.edges:
        g = disjoint_union(g, h)
    wires = [(n + j * s + b[q], e[q]) for j, e in enumerate(hyp.edges) for q in range(hyp.d)]
    g = add_edges(g, wires)
    opt_h = opt_value(h)
    if tag is None:
        tag, depth = infer_class(h)
    else:
        depth = 0
    return ModulatorInstance(g, hyp.m * opt_h + k, tuple(range(n)), tag, depth), opt_h


def two_edge_chain_instance() -> tuple[Hypergraph, int]:
    """Six vertices, edges {0,1,2}, {0,2,3}, {3,4,5}, budget 2."""
    return Hypergraph(6, 3, ((0, 1, 2), (0, 2, 3), (3, 4, 5))), 2


def glued_clique_gadget() -> GadgetWitness:
    """A triangle glued to an edge: five vertices, optimum 3, blocking set of size 3."""
    return double_blocking_gadget(Graph.complete(2), (0, 1), "indset", base_ed=1)
