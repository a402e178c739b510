"""``vcblock`` command line.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
Every report is a function of the arguments alone, so repeated runs print the
same bytes.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .blocking import NotBlockingError, blocking_profile, verdict
from .classes import TAGS, UnknownClassError, UnsupportedClassError, beta_upper_bound, get_oracle
from .elimination import Exceeds, elimination_distance, elimination_forest, solve_vc_bounded_ed
from .exact import solve_vc_exact
from .gadgets import GadgetError, base_witness, build_lb_tower, transform_hypergraph_vc
from .generators import DEFAULT_SEED
from .graph import Graph, GraphInputError, Hypergraph
from .instance import ModulatorInstance
from .io import ParseError, emit_instance, parse_instance
from .kernelize import DepthClaimError, ResourceLimitError, is_yes, kernelize_to_base
from .verify import SUITES, UnknownSuiteError, run_suite

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Report:
    """Ordered key/value lines, printed as text or as ``key=value`` records."""

    def __init__(self, kind: str):
        self.kind = kind
        self.items: list[tuple[str, str]] = []

    def add(self, key: str, value) -> None:
        if isinstance(value, (tuple, list)):
            value = " ".join(map(str, value)) or "-"
        elif isinstance(value, bool):
            value = "yes" if value else "no"
        self.items.append((key, str(value)))

    def render(self, fmt: str) -> str:
        if fmt == "record":
            return "".join(f"{self.kind}.{k}={v}\n" for k, v in self.items)
        return "".join(f"{k} {v}\n" for k, v in self.items)


def _read(path: str):
    try:
        data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return parse_instance(data)


def _graph_of(obj, what: str) -> Graph:
    if isinstance(obj, ModulatorInstance):
        return obj.g
    if isinstance(obj, Graph):
        return obj
    raise UsageError(f"{what} expects a graph or instance file, got a hypergraph")


def _vertex_list(text: str, n: int) -> tuple[int, ...]:
    if text in ("", "-"):
        return ()
    try:
        vs = [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad vertex list {text!r}") from None
    for v in vs:
        if not 0 <= v < n:
            raise UsageError(f"vertex {v} out of range [0, {n})")
    return tuple(sorted(set(vs)))


def _write(path: Path, data: bytes) -> None:
    try:
        path.write_bytes(data)
    except OSError as e:
        raise UsageError(f"cannot write {path}: {e.strerror}") from None


# Subcommands

def cmd_solve(args) -> int:
    obj = _read(args.input)
    g = _graph_of(obj, "solve")
    rep = Report("solve")
    tag = args.oracle
    depth = args.depth if args.depth is not None else 0
    method = "exact"
    cover = None
    if tag is not None:
        oracle = get_oracle(tag)
        if depth == 0 and oracle.member(g):
            cover, method = oracle.solve(g), "class"
        elif depth > 0:
            forest = elimination_forest(g, oracle, depth)
            if forest is None:
                raise UsageError(f"graph is not within distance {depth} of {oracle.tag}")
            cover, method = solve_vc_bounded_ed(g, forest, oracle), "bounded-ed"
    if cover is None:
        cover = solve_vc_exact(g)
    rep.add("opt", cover.size)
    rep.add("cover", cover.vertices)
    rep.add("method", method)
    if isinstance(obj, ModulatorInstance):
        rep.add("k", obj.k)
        rep.add("answer", not obj.is_trivial_no and cover.size <= obj.k)
    sys.stdout.write(rep.render(args.format))
    return OK


def cmd_blocking(args) -> int:
    g = _graph_of(_read(args.input), "blocking")
    y = _vertex_list(args.set, g.n)
    v = verdict(g, y)
    rep = Report("blocking")
    rep.add("set", y)
    rep.add("blocking", v.is_blocking)
    rep.add("deficit", v.deficit)
    rep.add("minimal", bool(v.is_minimal))
    sys.stdout.write(rep.render(args.format))
    return OK


def cmd_beta(args) -> int:
    g = _graph_of(_read(args.input), "beta")
    try:
        prof = blocking_profile(g, cap=args.cap)
    except ValueError as e:
        raise UsageError(str(e)) from None
    rep = Report("beta")
    rep.add("beta", prof.beta)
    rep.add("witness", prof.witness)
    rep.add("forced", prof.forced)
    rep.add("lower_bound_only", prof.truncated)
    if prof.empty_graph:
        rep.add("note", "graph has no vertices")
    if args.oracle is not None and args.depth is not None:
        oracle = get_oracle(args.oracle)
        if oracle.beta is not None:
            bound = beta_upper_bound(oracle, args.depth)
            rep.add("class_bound", bound)
            rep.add("within_bound", prof.beta <= bound)
    sys.stdout.write(rep.render(args.format))
    return OK


def cmd_ed(args) -> int:
    g = _graph_of(_read(args.input), "ed")
    oracle = get_oracle(args.oracle or "empty")
    limit = g.n if args.depth is None else args.depth
    d = elimination_distance(g, oracle, limit)
    rep = Report("ed")
    rep.add("class", oracle.tag)
    if isinstance(d, Exceeds):
        rep.add("distance", f">{limit}")
        sys.stdout.write(rep.render(args.format))
        return OK
    rep.add("distance", d)
    forest = elimination_forest(g, oracle, d)
    assert forest is not None
    out = rep.render(args.format)
    if args.format == "record":
        out += "".join(f"ed.forest={ln}\n" for ln in forest.to_text().splitlines())
    else:
        out += "forest\n" + forest.to_text()
    sys.stdout.write(out)
    return OK


def cmd_gadget(args) -> int:
    if args.oracle is None or args.depth is None:
        raise UsageError("gadget needs --oracle and --depth")
    if args.depth < 1:
        raise UsageError("gadget depth must be at least 1")
    oracle = get_oracle(args.oracle)
    w = build_lb_tower(oracle, args.depth, verify=not args.no_verify)[-1]
    bound = beta_upper_bound(oracle, args.depth)
    rep = Report("gadget")
    rep.add("class", oracle.tag)
    rep.add("depth", args.depth)
    rep.add("vertices", w.graph.n)
    rep.add("blocking_size", len(w.blocking_set))
    rep.add("class_bound", bound)
    rep.add("verified", not args.no_verify)
    if not oracle.hereditary:
        rep.add("note", "class is not hereditary; the bound is not reached by this tower")
    if args.out:
        prefix = Path(args.out)
        _write(prefix.with_name(prefix.name + ".vc"), emit_instance(w.graph))
        _write(prefix.with_name(prefix.name + ".witness"), w.sidecar().encode())
        sys.stdout.write(rep.render(args.format))
    else:
        sys.stdout.write(rep.render(args.format))
        sys.stdout.write(emit_instance(w.graph).decode())
        sys.stdout.write(w.sidecar())
    return OK


def _gadget_for(arity: int, tag: Optional[str]):
    """A graph with a minimal blocking set of exactly ``arity`` vertices."""
    if tag is None:
        return Graph.complete(arity), tuple(range(arity))
    oracle = get_oracle(tag)
    cands = [base_witness(oracle)]
    d = 1
    while len(cands[-1].blocking_set) < arity and d <= 6:
        cands.append(build_lb_tower(oracle, d, check_ed=False)[-1])
        d += 1
    for w in cands:
        if len(w.blocking_set) == arity:
            return w.graph, w.blocking_set
    raise UsageError(f"no {oracle.tag} gadget with a blocking set of size {arity}")


def cmd_transform(args) -> int:
    hyp = _read(args.input)
    if not isinstance(hyp, Hypergraph):
        raise UsageError("transform expects a hypergraph file")
    if args.k is None:
        raise UsageError("transform needs --k")
    if not 0 <= args.k <= hyp.n:
        raise UsageError(f"--k must lie in [0, {hyp.n}]")
    h, b = _gadget_for(hyp.d, args.oracle)
    inst, opt_h = transform_hypergraph_vc(hyp, args.k, h, b, verify=not args.no_verify)
    sys.stdout.write(emit_instance(inst).decode())
    return OK


def cmd_kernelize(args) -> int:
    inst = _read(args.input)
    if not isinstance(inst, ModulatorInstance):
        raise UsageError("kernelize expects an instance file")
    if not args.no_verify:
        if not inst.check():
            sys.stderr.write(f"vcblock: g - x is not within distance {inst.depth} of {inst.tag}\n")
            return FAILED
    out, traces = kernelize_to_base(inst)
    sys.stdout.write(emit_instance(out).decode())
    if args.trace:
        for i, t in enumerate(traces):
            text = t.to_text()
            if args.format == "record":
                sys.stdout.write("".join(f"trace.{i}.{ln.replace(' ', '_', 1)}\n" for ln in text.splitlines()))
            else:
                sys.stdout.write(f"trace {i}\n" + "".join(f"  {ln}\n" for ln in text.splitlines()))
    if args.no_verify:
        return OK
    ok = is_yes(inst) == is_yes(out) and out.depth == 0 and all(t.bound_ok for t in traces)
    rep = Report("kernelize")
    rep.add("verified", ok)
    sys.stdout.write(rep.render(args.format))
    return OK if ok else FAILED


def cmd_verify(args) -> int:
    try:
        results = run_suite(args.suite, args.seed)
    except UnknownSuiteError:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)} or all") from None
    for r in results:
        sys.stdout.write(r.to_record() if args.format == "record" else r.to_text())
    failed = sum(not r.passed for r in results)
    if args.format == "record":
        sys.stdout.write(f"summary suites={len(results)} failed={failed}\n")
    else:
        sys.stdout.write(f"{len(results) - failed}/{len(results)} suites passed\n")
    return FAILED if failed else OK


# Parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--oracle", help=f"base class: {', '.join(TAGS)}")
    common.add_argument("--depth", type=int, help="elimination distance d")
    common.add_argument("--k", type=int, help="budget")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for generated instances")
    common.add_argument("--trace", action="store_true", help="print reduction traces")
    common.add_argument("--format", choices=("text", "record"), default="text")
    common.add_argument("--no-verify", action="store_true", help="skip self-checks")
    common.add_argument("--cap", type=int, help="largest blocking set size examined is cap + 1")

    p = argparse.ArgumentParser(prog="vcblock", description="Blocking sets and vertex cover kernelization.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, *inputs):
        sp = sub.add_parser(name, parents=[common], help=help_)
        for arg, h in inputs:
            sp.add_argument(arg, help=h)
        sp.set_defaults(func=fn)
        return sp

    add("solve", cmd_solve, "minimum vertex cover", ("input", "graph or instance file, - for stdin"))
    add("blocking", cmd_blocking, "is a vertex set blocking",
        ("input", "graph file"), ("set", "vertices, comma separated; - for the empty set"))
    add("beta", cmd_beta, "largest minimal blocking set", ("input", "graph file"))
    add("ed", cmd_ed, "elimination distance to a class", ("input", "graph file"))
    g = add("gadget", cmd_gadget, "extremal blocking-set gadget")
    g.add_argument("--out", help="write PREFIX.vc and PREFIX.witness instead of stdout")
    add("transform", cmd_transform, "hypergraph cover to vertex cover", ("input", "hypergraph file"))
    add("kernelize", cmd_kernelize, "reduce an instance to depth 0", ("input", "instance file"))
    add("verify", cmd_verify, "run verification suites", ("suite", f"one of {', '.join(SUITES)} or all"))
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.func(args)
    except ParseError as e:
        sys.stderr.write(f"vcblock: parse error: {e}\n")
    except (UsageError, GraphInputError, UnknownClassError, UnsupportedClassError,
            NotBlockingError, DepthClaimError, ResourceLimitError) as e:
        sys.stderr.write(f"vcblock: {e}\n")
    except GadgetError as e:
        sys.stderr.write(f"vcblock: verification failed: {e}\n")
        return FAILED
    return USAGE


if __name__ == "__main__":
    sys.exit(main())
