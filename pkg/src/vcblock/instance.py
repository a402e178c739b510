"""Parameterized vertex cover instances (G, k, X) with a base class and depth."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, remove_vertices

NO_K = -1


@dataclass(frozen=True)
class ModulatorInstance:
    """Does ``g`` have a vertex cover of size at most ``k``?

    ``x`` is a modulator: every component of ``g - x`` has elimination
    distance at most ``depth`` to the class named by ``tag``. The trivial
    no-instance is the empty graph with ``k = -1``.
    """

    g: Graph
    k: int
    x: tuple[int, ...]
    tag: str
    depth: int = 0

    def __post_init__(self) -> None:
        xs = tuple(sorted(set(int(v) for v in self.x)))
        if xs and (xs[0] < 0 or xs[-1] >= self.g.n):
            raise ValueError("modulator vertex out of range")
        if self.depth < 0:
            raise ValueError("depth must be non-negative")
        if self.k < 0 and (self.k != NO_K or self.g.n or xs):
            raise ValueError("negative k is only allowed for the trivial no-instance")
        object.__setattr__(self, "x", xs)

    @classmethod
    def trivial_no(cls, tag: str, depth: int = 0) -> "ModulatorInstance":
        return cls(Graph.empty(0), NO_K, (), tag, depth)

    @property
    def is_trivial_no(self) -> bool:
        return self.k == NO_K

    def rest(self) -> tuple[Graph, dict[int, int]]:
        """``g - x`` with its id map."""
        return remove_vertices(self.g, self.x)

    def check(self, max_vertices: int = 24) -> bool:
        """Verify the depth claim when ``g - x`` is small enough to search."""
        from .classes import get_oracle
        from .elimination import elimination_distance

        h, _ = self.rest()
        if h.n > max_vertices:
            return True
        return isinstance(elimination_distance(h, get_oracle(self.tag), self.depth), int)
