"""Complexes, patterns and Markov equivalence of chain graphs.

A complex is an induced path u -> w1 -- ... -- wr <- v whose parents u, v are
not adjacent. Two chain graphs are Markov equivalent exactly when they share
the underlying graph and the set of complexes, so the pattern (skeleton plus
complex arrows) fingerprints an equivalence class. The class enumerator and
the largest-chain-graph oracle are brute force and meant for small graphs.
"""
import logging
from dataclasses import dataclass
from itertools import product

from scripts.config import pick
from scripts.errors import BoundExceededError, GraphValidationError, OracleInvariantError
from scripts.hybrid_graph import (
    EdgeKind,
    HybridGraph,
    is_chain_graph,
    require_chain_graph,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Complex:
    path: tuple

    @classmethod
    def canonical(cls, path) -> "Complex":
        path = tuple(path)
        if path[0] > path[-1]:
            path = path[::-1]
        return cls(path)

    @property
    def parents(self) -> tuple:
        return (self.path[0], self.path[-1])

    @property
    def region(self) -> frozenset:
        return frozenset(self.path[1:-1])

    @property
    def degree(self) -> int:
        return len(self.path) - 2

    def arrows(self) -> tuple:
        return ((self.path[0], self.path[1]), (self.path[-1], self.path[-2]))

    def sort_key(self):
        return (self.parents, tuple(sorted(self.region)), self.path)

    def __str__(self) -> str:
        inner = " -- ".join(self.path[1:-1])
        return f"{self.path[0]} -> {inner} <- {self.path[-1]}"


def enumerate_complexes(graph: HybridGraph) -> tuple:
    """Every complex of the graph, canonically oriented and sorted."""
    found = set()
    for u, w in graph.arrows():
        # line paths from w that stay chordless and away from u
        stack = [(w,)]
        while stack:
            path = stack.pop()
            last = path[-1]
            for v in graph.neighbors(last):
                if v in path or v == u or not graph.is_arrow(v, last):
                    continue
                if graph.adjacent(u, v):
                    continue
                if any(graph.adjacent(v, p) for p in path[:-1]):
                    continue
                found.add(Complex.canonical((u,) + path + (v,)))
            for nxt in graph.neighbors(last):
                if nxt in path or nxt == u or not graph.is_line(last, nxt):
                    continue
                if graph.adjacent(u, nxt) or any(graph.adjacent(nxt, p) for p in path[:-1]):
                    continue
                stack.append(path + (nxt,))
    return tuple(sorted(found, key=Complex.sort_key))


def pattern_of(graph: HybridGraph) -> HybridGraph:
    """Underlying graph with exactly the complex arrows kept."""
    require_chain_graph(graph)
    kinds = {(u, v): EdgeKind.LINE for u, v, _ in graph.edges}
    for cx in enumerate_complexes(graph):
        for tail, head in cx.arrows():
            if tail < head:
                kinds[(tail, head)] = EdgeKind.FORWARD
            else:
                kinds[(head, tail)] = EdgeKind.BACKWARD
    return HybridGraph.from_kinds(graph.nodes, kinds)


def _same_nodes(g: HybridGraph, h: HybridGraph) -> None:
    if g.node_set != h.node_set:
        raise GraphValidationError("graphs are over different node sets")


def markov_equivalent(g: HybridGraph, h: HybridGraph) -> bool:
    _same_nodes(g, h)
    require_chain_graph(g)
    require_chain_graph(h)
    return g.skeleton() == h.skeleton() and enumerate_complexes(g) == enumerate_complexes(h)


def is_larger(h: HybridGraph, g: HybridGraph) -> bool:
    """True when g is larger than h: every arrow of g is an arrow of h."""
    _same_nodes(g, h)
    if g.skeleton() != h.skeleton():
        raise GraphValidationError("graphs have different underlying graphs")
    return set(g.arrows()) <= set(h.arrows())


def equivalence_class(graph: HybridGraph, edge_bound=None) -> tuple:
    """All chain graphs Markov equivalent to graph, sorted by edge list."""
    require_chain_graph(graph)
    edge_bound = pick(edge_bound, "class_edge_bound")
    if len(graph.edges) > edge_bound:
        raise BoundExceededError(
            f"{len(graph.edges)} edges exceed the equivalence-class bound {edge_bound}"
        )
    target = enumerate_complexes(graph)
    pinned = {(u, v): kind for u, v, kind in pattern_of(graph).edges if kind is not EdgeKind.LINE}
    free = [(u, v) for u, v, _ in graph.edges if (u, v) not in pinned]
    options = (EdgeKind.LINE, EdgeKind.FORWARD, EdgeKind.BACKWARD)

    members = []
    for choice in product(options, repeat=len(free)):
        kinds = dict(pinned)
        kinds.update(zip(free, choice))
        candidate = HybridGraph.from_kinds(graph.nodes, kinds)
        if is_chain_graph(candidate) and enumerate_complexes(candidate) == target:
            members.append(candidate)
    logger.debug("equivalence class of %s: %d members over %d free edges",
                 graph, len(members), len(free))
    if graph not in members:
        raise OracleInvariantError("equivalence class does not contain its generator")
    return tuple(sorted(members, key=lambda m: m.edges))


def largest_cg_oracle(graph: HybridGraph, edge_bound=None) -> HybridGraph:
    """The class member whose arrows are exactly the arrows shared by all members."""
    members = equivalence_class(graph, edge_bound=edge_bound)
    common = set(members[0].arrows())
    for member in members[1:]:
        common &= set(member.arrows())
    for member in members:
        if set(member.arrows()) == common:
            return member
    raise OracleInvariantError(f"no largest chain graph in the class of {graph}")


def line_count(graph: HybridGraph) -> int:
    return len(graph.lines())


__all__ = [
    "Complex", "enumerate_complexes", "equivalence_class", "is_larger",
    "largest_cg_oracle", "line_count", "markov_equivalent", "pattern_of",
]
