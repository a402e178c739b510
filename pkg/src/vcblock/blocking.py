"""Blocking sets: vertex sets that no minimum vertex cover contains.

``Y`` is blocking iff ``OPT(G - Y) + |Y| > OPT(G)``. The excess is called
the deficit. Blocking sets are closed upwards, so a blocking set is minimal
as soon as dropping any single vertex makes it non-blocking.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Optional

from . import _kernels
from .exact import opt_value
from .graph import Graph, add_vertex, connected_components, remove_vertices

Solver = Callable[[Graph], int]

# largest free set handled by the subset table kernel
TABLE_LIMIT = 24


class NotBlockingError(ValueError):
    pass


class InvariantViolation(AssertionError):
    def __init__(self, message: str, graph: Graph, y: tuple[int, ...]):
        super().__init__(f"{message}: graph n={graph.n} edges={graph.edges()} y={list(y)}")
        self.graph = graph
        self.y = y


@dataclass(frozen=True)
class BlockingVerdict:
    y: tuple[int, ...]
    is_blocking: bool
    deficit: int
    is_minimal: Optional[bool] = None


def _norm(y: Iterable[int], g: Graph) -> tuple[int, ...]:
    out = tuple(sorted(set(y)))
    for v in out:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return out


def deficit(g: Graph, y: Iterable[int], solver: Solver = opt_value, opt: Optional[int] = None) -> int:
    y = _norm(y, g)
    base = solver(g) if opt is None else opt
    d = solver(remove_vertices(g, y)[0]) + len(y) - base
    if d < 0:
        raise InvariantViolation("negative deficit, solver is not exact", g, y)
    return d


def is_blocking_set(g: Graph, y: Iterable[int], solver: Solver = opt_value) -> BlockingVerdict:
    y = _norm(y, g)
    d = deficit(g, y, solver)
    return BlockingVerdict(y, d >= 1, d)


def is_blocking_set_apex(g: Graph, y: Iterable[int], solver: Solver = opt_value) -> bool:
    """Blocking test through one extra vertex adjacent to exactly ``y``.

    The apex is either in an optimum cover (cost 1) or forces all of ``y``
    in, so the optimum grows iff no optimum cover contains ``y``. Only needs a
    solver that handles one vertex beyond the class.
    """
    y = _norm(y, g)
    return solver(add_vertex(g, y)) > solver(g)


def is_minimal_blocking_set(g: Graph, y: Iterable[int], solver: Solver = opt_value) -> bool:
    y = _norm(y, g)
    if not y:
        return False
    opt = solver(g)
    if deficit(g, y, solver, opt) < 1:
        return False
    return all(deficit(g, [u for u in y if u != v], solver, opt) == 0 for v in y)


def verdict(g: Graph, y: Iterable[int], solver: Solver = opt_value) -> BlockingVerdict:
    """Blocking verdict that also settles minimality."""
    v = is_blocking_set(g, y, solver)
    minimal = v.is_blocking and is_minimal_blocking_set(g, v.y, solver)
    return BlockingVerdict(v.y, v.is_blocking, v.deficit, minimal)


def shrink_to_minimal(g: Graph, y: Iterable[int], solver: Solver = opt_value) -> tuple[int, ...]:
    """Minimal blocking subset of ``y``.

    Vertices are tried for removal from the largest id down, repeating until
    nothing can go, so small ids survive.
    """
    cur = list(_norm(y, g))
    opt = solver(g)
    if deficit(g, cur, solver, opt) < 1:
        raise NotBlockingError(f"{cur} is not a blocking set")
    changed = True
    while changed:
        changed = False
        for v in sorted(cur, reverse=True):
            rest = [u for u in cur if u != v]
            if deficit(g, rest, solver, opt) >= 1:
                cur = rest
                changed = True
                break
    return tuple(cur)


@dataclass(frozen=True)
class BlockingProfile:
    """Result of the largest-minimal-blocking-set search.

    ``truncated`` means sets above ``cap + 1`` were never examined, so
    ``beta`` is only a lower bound. ``empty_graph`` flags the graph without
    vertices, where no blocking set exists and ``beta`` is 0 by convention.
    """

    beta: int
    witness: tuple[int, ...]
    forced: tuple[int, ...]
    truncated: bool = False
    empty_graph: bool = False


def _profile_levels(g: Graph, free: list[int], max_size: int, solver: Solver, opt: int):
    """Level-by-level search with an arbitrary solver."""
    prev: set[tuple[int, ...]] = set()
    best: tuple[int, ...] = ()
    for k in range(1, max_size + 1):
        cur: set[tuple[int, ...]] = set()
        for y in combinations(free, k):
            if any(y[:i] + y[i + 1:] in prev for i in range(k)):
                cur.add(y)
                continue
            if solver(remove_vertices(g, y)[0]) + k > opt:
                cur.add(y)
                if k > len(best):
                    best = y
        prev = cur
    return best


def blocking_profile(g: Graph, solver: Optional[Solver] = None, cap: Optional[int] = None) -> BlockingProfile:
    """Exact largest minimal blocking set, optionally capped.

    Vertices in every minimum cover never appear in a minimal blocking set,
    so only the remaining ones are enumerated. Subsets go by size; a subset
    with a blocking one-smaller subset is blocking but not minimal and costs
    no solver call.
    """
    if g.n == 0:
        return BlockingProfile(0, (), (), False, True)
    if solver is None:
        opt = opt_value(g)
        fmask = _kernels.forced_vertices_mask(g.masks(), opt)
        forced = [v for v in range(g.n) if fmask >> v & 1]
    else:
        opt = solver(g)
        forced = [
            v for v in range(g.n)
            if solver(remove_vertices(g, (v,) + g.adj[v])[0]) + g.degree(v) > opt
        ]
    fs = set(forced)
    free = [v for v in range(g.n) if v not in fs]
    max_size = len(free) if cap is None else min(len(free), cap + 1)
    truncated = max_size < len(free)
    if solver is None and len(free) <= TABLE_LIMIT:
        size, mask = _kernels.blocking_table(g.masks(), opt, free, max_size)
        witness = tuple(v for v in range(g.n) if mask >> v & 1)
    else:
        if cap is None and len(free) > TABLE_LIMIT:
            raise ValueError(f"{len(free)} candidate vertices; pass a cap")
        witness = _profile_levels(g, free, max_size, solver or opt_value, opt)
    return BlockingProfile(len(witness), witness, tuple(forced), truncated)


def max_minimal_blocking_set_size(g: Graph, solver: Optional[Solver] = None, cap: Optional[int] = None) -> int:
    return blocking_profile(g, solver, cap).beta


def verify_blocking_basics(g: Graph, y: Iterable[int], solver: Solver = opt_value) -> dict[str, bool]:
    """Check the four basic facts about a minimal blocking set ``y``.

    1. no vertex of ``y`` lies in every minimum cover;
    2. a vertex of ``y`` in no minimum cover makes ``y`` a singleton;
    3. ``y`` meets exactly one component;
    4. the deficit of ``y`` is exactly one.

    Raises ``InvariantViolation`` on the first failure.
    """
    y = _norm(y, g)
    if not is_minimal_blocking_set(g, y, solver):
        raise NotBlockingError(f"{list(y)} is not a minimal blocking set")
    opt = solver(g)
    report = {}
    report["no_forced_vertex"] = all(
        solver(remove_vertices(g, (v,) + g.adj[v])[0]) + g.degree(v) == opt for v in y
    )
    excluded = [v for v in y if solver(remove_vertices(g, [v])[0]) + 1 > opt]
    report["excluded_vertex_alone"] = not excluded or len(y) == 1
    touched = {i for i, comp in enumerate(connected_components(g)) if set(comp) & set(y)}
    report["single_component"] = len(touched) == 1
    report["deficit_one"] = deficit(g, y, solver, opt) == 1
    for name, ok in report.items():
        if not ok:
            raise InvariantViolation(f"property {name} failed", g, y)
    return report
