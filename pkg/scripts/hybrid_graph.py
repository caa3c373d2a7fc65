"""Hybrid graphs (lines and arrows) and the structural operations on them.

A graph is an immutable value: nodes are kept in label order and every edge is
stored once, under its endpoint-sorted pair, with an orientation tag relative
to that pair. Every transformation returns a new graph.
"""
import logging
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import Iterable, Mapping

import networkx as nx

from scripts.errors import ChainError, GraphValidationError, NotAChainGraphError

logger = logging.getLogger(__name__)

LABEL_RE = re.compile(r"[A-Za-z0-9_]+")


class EdgeKind(str, Enum):
    LINE = "--"
    FORWARD = "->"
    BACKWARD = "<-"

    def reversed(self) -> "EdgeKind":
        if self is EdgeKind.FORWARD:
            return EdgeKind.BACKWARD
        if self is EdgeKind.BACKWARD:
            return EdgeKind.FORWARD
        return self


@dataclass(frozen=True)
class HybridGraph:
    nodes: tuple
    edges: tuple  # (u, v, kind) with u < v, sorted by (u, v)

    @classmethod
    def from_kinds(cls, nodes: Iterable[str], kinds: Mapping) -> "HybridGraph":
        """Build from a {(u, v): kind} map without label validation."""
        edges = []
        for (u, v), kind in kinds.items():
            if u > v:
                u, v, kind = v, u, kind.reversed()
            edges.append((u, v, kind))
        return cls(tuple(sorted(set(nodes))), tuple(sorted(edges)))

    @cached_property
    def _kinds(self) -> dict:
        kinds = {}
        for u, v, kind in self.edges:
            kinds[(u, v)] = kind
            kinds[(v, u)] = kind.reversed()
        return kinds

    @cached_property
    def _adjacency(self) -> dict:
        adjacency = {node: [] for node in self.nodes}
        for u, v, _ in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        return {node: tuple(sorted(nbrs)) for node, nbrs in adjacency.items()}

    @cached_property
    def node_set(self) -> frozenset:
        return frozenset(self.nodes)

    def has_node(self, u) -> bool:
        return u in self.node_set

    def kind(self, u, v):
        """Edge kind read in the direction u -> v, or None for a non-edge."""
        return self._kinds.get((u, v))

    def adjacent(self, u, v) -> bool:
        return (u, v) in self._kinds

    def is_arrow(self, u, v) -> bool:
        return self._kinds.get((u, v)) is EdgeKind.FORWARD

    def is_line(self, u, v) -> bool:
        return self._kinds.get((u, v)) is EdgeKind.LINE

    def neighbors(self, u) -> tuple:
        return self._adjacency[u]

    def arrows(self) -> tuple:
        """All arrows as (tail, head), sorted."""
        out = []
        for u, v, kind in self.edges:
            if kind is EdgeKind.FORWARD:
                out.append((u, v))
            elif kind is EdgeKind.BACKWARD:
                out.append((v, u))
        return tuple(sorted(out))

    def lines(self) -> tuple:
        return tuple((u, v) for u, v, kind in self.edges if kind is EdgeKind.LINE)

    def skeleton(self) -> frozenset:
        return frozenset((u, v) for u, v, _ in self.edges)

    def with_kinds(self, updates: Mapping) -> "HybridGraph":
        """Copy with the listed existing edges re-typed."""
        kinds = {(u, v): kind for u, v, kind in self.edges}
        for (u, v), kind in updates.items():
            if u > v:
                u, v, kind = v, u, kind.reversed()
            if (u, v) not in kinds:
                raise GraphValidationError(f"no edge {u} {v} to re-type")
            kinds[(u, v)] = kind
        return HybridGraph.from_kinds(self.nodes, kinds)

    def __str__(self) -> str:
        parts = [f"{u}{kind.value}{v}" for u, v, kind in self.edges]
        return "HybridGraph(" + " ".join(self.nodes) + " | " + ", ".join(parts) + ")"


@dataclass(frozen=True)
class Chain:
    blocks: tuple  # tuple of frozensets

    def block_index(self, u) -> int:
        for index, block in enumerate(self.blocks):
            if u in block:
                return index
        raise ChainError(f"node {u} is not covered by the chain")

    def validate_for(self, graph: HybridGraph) -> None:
        seen = set()
        for block in self.blocks:
            if not block:
                raise ChainError("chain blocks must be nonempty")
            if seen & block:
                raise ChainError("chain blocks must be disjoint")
            seen |= block
        if seen != graph.node_set:
            raise ChainError("chain blocks must cover the node set")
        position = {u: i for i, block in enumerate(self.blocks) for u in block}
        for u, v, kind in graph.edges:
            if position[u] == position[v]:
                if kind is not EdgeKind.LINE:
                    raise ChainError(f"edge {u} {v} inside a block must be a line")
            else:
                tail, head = (u, v) if position[u] < position[v] else (v, u)
                if not graph.is_arrow(tail, head):
                    raise ChainError(f"edge {u} {v} across blocks must be {tail} -> {head}")


def build_graph(nodes, edge_specs=()) -> HybridGraph:
    """Validated graph from node labels and (u, v, kind) specs, kind read from u to v."""
    node_list = list(nodes)
    if not node_list:
        raise GraphValidationError("a graph needs at least one node")
    seen = set()
    for label in node_list:
        if not isinstance(label, str) or not LABEL_RE.fullmatch(label):
            raise GraphValidationError(f"invalid node label {label!r}")
        if label in seen:
            raise GraphValidationError(f"duplicate node {label}")
        seen.add(label)

    kinds = {}
    for u, v, kind in edge_specs:
        kind = EdgeKind(kind)
        for end in (u, v):
            if end not in seen:
                raise GraphValidationError(f"edge endpoint {end} is not a declared node")
        if u == v:
            raise GraphValidationError(f"self-loop at {u}")
        key = (u, v) if u < v else (v, u)
        if key in kinds:
            raise GraphValidationError(f"duplicate edge {key[0]} {key[1]}")
        kinds[key] = kind if u < v else kind.reversed()
    return HybridGraph.from_kinds(node_list, kinds)


def _check_nodes(graph: HybridGraph, nodes) -> frozenset:
    nodes = frozenset(nodes)
    unknown = nodes - graph.node_set
    if unknown:
        raise GraphValidationError("unknown node(s): " + ", ".join(sorted(unknown)))
    return nodes


def underlying(graph: HybridGraph) -> HybridGraph:
    return HybridGraph(graph.nodes, tuple((u, v, EdgeKind.LINE) for u, v, _ in graph.edges))


def is_undirected(graph: HybridGraph) -> bool:
    return all(kind is EdgeKind.LINE for _, _, kind in graph.edges)


def induced_subgraph(graph: HybridGraph, nodes) -> HybridGraph:
    keep = _check_nodes(graph, nodes)
    if not keep:
        raise GraphValidationError("induced subgraph needs a nonempty node set")
    edges = tuple(e for e in graph.edges if e[0] in keep and e[1] in keep)
    return HybridGraph(tuple(sorted(keep)), edges)


def parents(graph: HybridGraph, u) -> frozenset:
    _check_nodes(graph, [u])
    return frozenset(v for v in graph.neighbors(u) if graph.is_arrow(v, u))


def children(graph: HybridGraph, u) -> frozenset:
    _check_nodes(graph, [u])
    return frozenset(v for v in graph.neighbors(u) if graph.is_arrow(u, v))


def siblings(graph: HybridGraph, u) -> frozenset:
    _check_nodes(graph, [u])
    return frozenset(v for v in graph.neighbors(u) if graph.is_line(u, v))


def boundary(graph: HybridGraph, u) -> frozenset:
    return parents(graph, u) | siblings(graph, u)


@lru_cache(maxsize=4096)
def _line_graph(graph: HybridGraph) -> nx.Graph:
    lines = nx.Graph()
    lines.add_nodes_from(graph.nodes)
    lines.add_edges_from(graph.lines())
    return lines


@lru_cache(maxsize=4096)
def _descending_digraph(graph: HybridGraph) -> nx.DiGraph:
    """Arrows forward and lines both ways: reachability = descending paths."""
    descending = nx.DiGraph()
    descending.add_nodes_from(graph.nodes)
    descending.add_edges_from(graph.arrows())
    for u, v in graph.lines():
        descending.add_edge(u, v)
        descending.add_edge(v, u)
    return descending


def components(graph: HybridGraph) -> tuple:
    """Connectivity components, ordered by smallest member label."""
    found = [frozenset(c) for c in nx.connected_components(_line_graph(graph))]
    return tuple(sorted(found, key=min))


@lru_cache(maxsize=4096)
def _component_structure(graph: HybridGraph):
    comps = components(graph)
    index = {u: i for i, comp in enumerate(comps) for u in comp}
    condensation = nx.DiGraph()
    condensation.add_nodes_from(range(len(comps)))
    representative = {}
    inner_arrow = None
    for tail, head in graph.arrows():
        ci, cj = index[tail], index[head]
        if ci == cj:
            if inner_arrow is None:
                inner_arrow = (tail, head)
            continue
        condensation.add_edge(ci, cj)
        representative.setdefault((ci, cj), (tail, head))
    acyclic = inner_arrow is None and nx.is_directed_acyclic_graph(condensation)
    return comps, condensation, representative, inner_arrow, acyclic


def is_chain_graph(graph: HybridGraph) -> bool:
    return _component_structure(graph)[4]


def directed_pseudocycle(graph: HybridGraph):
    """A directed pseudocycle as a closed node route, or None for a chain graph."""
    comps, condensation, representative, inner_arrow, acyclic = _component_structure(graph)
    if acyclic:
        return None
    lines = _line_graph(graph)
    if inner_arrow is not None:
        tail, head = inner_arrow
        return (tail,) + tuple(nx.shortest_path(lines, head, tail))
    cycle = nx.find_cycle(condensation)
    arrows = [representative[(ci, cj)] for ci, cj, *_ in cycle]
    route = [arrows[0][0]]
    for i, (_, head) in enumerate(arrows):
        next_tail = arrows[(i + 1) % len(arrows)][0]
        route.extend(nx.shortest_path(lines, head, next_tail))
    return tuple(route)


def require_chain_graph(graph: HybridGraph) -> None:
    cycle = directed_pseudocycle(graph)
    if cycle is not None:
        raise NotAChainGraphError(cycle)


def component_chain(graph: HybridGraph) -> Chain:
    """The chain of connectivity components; ties go to the smallest member label."""
    require_chain_graph(graph)
    comps, condensation, *_ = _component_structure(graph)
    order = nx.lexicographical_topological_sort(condensation, key=lambda i: i)
    return Chain(tuple(comps[i] for i in order))


def ancestral_set(graph: HybridGraph, nodes) -> frozenset:
    targets = _check_nodes(graph, nodes)
    descending = _descending_digraph(graph)
    found = set(targets)
    for target in targets:
        found |= nx.ancestors(descending, target)
    return frozenset(found)


def descendants(graph: HybridGraph, u) -> frozenset:
    _check_nodes(graph, [u])
    return frozenset(nx.descendants(_descending_digraph(graph), u)) | {u}
