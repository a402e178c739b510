"""Text formats for graphs, hypergraphs and modulator instances.

Graph::

    p vc <n> <m>
    e <u> <v>          (m lines, 0-based ids)

Hypergraph::

    p hvc <n> <m> <d>
    h <v1> ... <vd>

Modulator instance (one ``key: value`` per line, keys fixed)::

    graph: <n> <u>-<v> <u>-<v> ...
    k: <int>
    modulator: <id> <id> ...
    class: <tag>
    depth: <int>

Lines starting with ``c`` (graph formats) or ``#`` (instances) are comments.
"""

from __future__ import annotations

from typing import Union

from .graph import Graph, Hypergraph
from .instance import ModulatorInstance


class ParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class HeaderError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


class OutOfRangeError(ParseError):
    pass


class SelfLoopError(ParseError):
    pass


class MalformedLineError(ParseError):
    pass


class UnknownKeyError(ParseError):
    pass


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise MalformedLineError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _parse_graph_lines(lines, lineno: int, n: int, m: int) -> Graph:
    seen: set[tuple[int, int]] = set()
    for ln, parts in lines:
        if parts[0] != "e" or len(parts) != 3:
            raise MalformedLineError(f"expected 'e <u> <v>', got {' '.join(parts)!r}", ln)
        u, v = _ints(parts[1:], ln)
        _edge_ok(n, u, v, seen, ln)
    if len(seen) != m:
        raise HeaderError(f"header announces {m} edges, found {len(seen)}", lineno)
    return Graph.from_edges(n, seen)


def _edge_ok(n: int, u: int, v: int, seen: set, ln: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise OutOfRangeError(f"vertex id out of range [0, {n})", ln)
    if u == v:
        raise SelfLoopError(f"self-loop at {u}", ln)
    key = (min(u, v), max(u, v))
    if key in seen:
        raise DuplicateEdgeError(f"duplicate edge {key}", ln)
    seen.add(key)


def _parse_instance(lines: list[tuple[int, str]]) -> ModulatorInstance:
    keys = ("graph", "k", "modulator", "class", "depth")
    vals: dict[str, tuple[int, str]] = {}
    for ln, raw in lines:
        if ":" not in raw:
            raise MalformedLineError("expected 'key: value'", ln)
        key, val = (s.strip() for s in raw.split(":", 1))
        if key not in keys:
            raise UnknownKeyError(f"unknown key {key!r}", ln)
        if key in vals:
            raise MalformedLineError(f"key {key!r} given twice", ln)
        vals[key] = (ln, val)
    for key in keys:
        if key not in vals:
            raise MalformedLineError(f"missing key {key!r}", lines[-1][0] if lines else 1)
    ln, gtext = vals["graph"]
    toks = gtext.split()
    if not toks:
        raise MalformedLineError("graph needs a vertex count", ln)
    n = _ints(toks[:1], ln)[0]
    if n < 0:
        raise HeaderError("negative vertex count", ln)
    seen: set = set()
    for tok in toks[1:]:
        ends = tok.split("-")
        if len(ends) != 2:
            raise MalformedLineError(f"bad edge token {tok!r}", ln)
        u, v = _ints(ends, ln)
        _edge_ok(n, u, v, seen, ln)
    g = Graph.from_edges(n, seen)
    kln, ktext = vals["k"]
    k = _ints([ktext], kln)[0]
    mln, mtext = vals["modulator"]
    x = _ints(mtext.split(), mln)
    for v in x:
        if not 0 <= v < n:
            raise OutOfRangeError(f"modulator vertex {v} out of range", mln)
    if len(set(x)) != len(x):
        raise MalformedLineError("repeated modulator vertex", mln)
    cln, tag = vals["class"]
    from .classes import UnknownClassError, get_oracle

    try:
        tag = get_oracle(tag).tag
    except UnknownClassError as e:
        raise MalformedLineError(str(e), cln) from None
    dln, dtext = vals["depth"]
    depth = _ints([dtext], dln)[0]
    if depth < 0:
        raise MalformedLineError("depth must be non-negative", dln)
    try:
        return ModulatorInstance(g, k, tuple(x), tag, depth)
    except ValueError as e:
        raise MalformedLineError(str(e), kln) from None


def parse_instance(data: Union[bytes, str]) -> Union[Graph, Hypergraph, ModulatorInstance]:
    """Parse any of the three formats, chosen by the first content line."""
    text = data.decode() if isinstance(data, bytes) else data
    content = []
    for ln, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s or s.startswith("#") or s == "c" or s.startswith("c "):
            continue
        content.append((ln, s))
    if not content:
        raise HeaderError("empty input", 1)
    ln, first = content[0]
    if ":" in first and not first.startswith("p "):
        return _parse_instance(content)
    parts = first.split()
    if parts[0] != "p" or len(parts) < 2:
        raise HeaderError(f"expected a 'p vc' or 'p hvc' header, got {first!r}", ln)
    body = [(l2, s.split()) for l2, s in content[1:]]
    if parts[1] == "vc":
        if len(parts) != 4:
            raise HeaderError("expected 'p vc <n> <m>'", ln)
        n, m = _ints(parts[2:], ln)
        if n < 0 or m < 0:
            raise HeaderError("negative count in header", ln)
        return _parse_graph_lines(body, ln, n, m)
    if parts[1] == "hvc":
        if len(parts) != 5:
            raise HeaderError("expected 'p hvc <n> <m> <d>'", ln)
        n, m, d = _ints(parts[2:], ln)
        if n < 0 or m < 0 or d < 2:
            raise HeaderError("bad counts in header", ln)
        edges = []
        seen = set()
        for l2, p in body:
            if p[0] != "h":
                raise MalformedLineError(f"expected 'h <v1> ... <v{d}>'", l2)
            vs = _ints(p[1:], l2)
            if len(vs) != d:
                raise MalformedLineError(f"hyperedge needs exactly {d} vertices", l2)
            if any(not 0 <= v < n for v in vs):
                raise OutOfRangeError(f"vertex id out of range [0, {n})", l2)
            if len(set(vs)) != d:
                raise SelfLoopError("repeated vertex inside a hyperedge", l2)
            key = tuple(sorted(vs))
            if key in seen:
                raise DuplicateEdgeError(f"duplicate hyperedge {key}", l2)
            seen.add(key)
            edges.append(key)
        if len(edges) != m:
            raise HeaderError(f"header announces {m} hyperedges, found {len(edges)}", ln)
        return Hypergraph(n, d, tuple(edges))
    raise HeaderError(f"unknown format {parts[1]!r}", ln)


def emit_instance(obj: Union[Graph, Hypergraph, ModulatorInstance]) -> bytes:
    """Canonical text: edges sorted, ids ascending inside each edge."""
    if isinstance(obj, Graph):
        lines = [f"p vc {obj.n} {obj.m}"] + [f"e {u} {v}" for u, v in obj.edges()]
    elif isinstance(obj, Hypergraph):
        lines = [f"p hvc {obj.n} {obj.m} {obj.d}"]
        lines += ["h " + " ".join(map(str, e)) for e in sorted(obj.edges)]
    elif isinstance(obj, ModulatorInstance):
        g = obj.g
        lines = [
            "graph: " + " ".join([str(g.n)] + [f"{u}-{v}" for u, v in g.edges()]),
            f"k: {obj.k}",
            "modulator: " + " ".join(map(str, obj.x)),
            f"class: {obj.tag}",
            f"depth: {obj.depth}",
        ]
        lines = [ln.rstrip() for ln in lines]
    else:
        raise TypeError(f"cannot emit {type(obj).__name__}")
    return ("\n".join(lines) + "\n").encode()
