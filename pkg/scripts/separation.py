"""Independence criteria for chain graphs.

Two criteria live here: the three-step moralization criterion (ancestral
restriction, moral graph, undirected separation) and c-separation, which
inspects every trail between X and Y section by section.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

import networkx as nx

from scripts.complexes import enumerate_complexes
from scripts.config import pick
from scripts.errors import GraphValidationError, TripletError
from scripts.hybrid_graph import (
    EdgeKind,
    HybridGraph,
    ancestral_set,
    components,
    descendants,
    induced_subgraph,
    is_undirected,
    parents,
    require_chain_graph,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Triplet:
    x: frozenset
    y: frozenset
    z: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "x", frozenset(self.x))
        object.__setattr__(self, "y", frozenset(self.y))
        object.__setattr__(self, "z", frozenset(self.z))
        if not self.x or not self.y:
            raise TripletError("X and Y must be nonempty")
        if self.x & self.y or self.x & self.z or self.y & self.z:
            raise TripletError("X, Y and Z must be pairwise disjoint")

    @property
    def nodes(self) -> frozenset:
        return self.x | self.y | self.z

    def symmetric(self) -> "Triplet":
        return Triplet(self.y, self.x, self.z)

    def check_over(self, nodes) -> None:
        unknown = self.nodes - frozenset(nodes)
        if unknown:
            raise TripletError("unknown node(s) in triplet: " + ", ".join(sorted(unknown)))

    def sort_key(self):
        return (tuple(sorted(self.x)), tuple(sorted(self.y)), tuple(sorted(self.z)))

    def __str__(self) -> str:
        return " | ".join(",".join(sorted(part)) for part in (self.x, self.y, self.z)).rstrip()


class Delimiter(str, Enum):
    INCOMING = "incoming"
    OUTGOING = "outgoing"
    END = "end"


class SectionKind(str, Enum):
    HEAD_TO_HEAD = "head-to-head"
    HEAD_TO_TAIL = "head-to-tail"
    TAIL_TO_TAIL = "tail-to-tail"


@dataclass(frozen=True)
class Trail:
    nodes: tuple
    steps: tuple  # EdgeKind of (nodes[i], nodes[i+1]) read along the trail

    def __str__(self) -> str:
        out = [self.nodes[0]]
        for kind, node in zip(self.steps, self.nodes[1:]):
            out.extend((kind.value, node))
        return " ".join(out)


@dataclass(frozen=True)
class Section:
    nodes: tuple
    start: int  # index of nodes[0] within the trail
    left: Delimiter
    right: Delimiter

    @property
    def kind(self) -> SectionKind:
        incoming = (self.left is Delimiter.INCOMING) + (self.right is Delimiter.INCOMING)
        if incoming == 2:
            return SectionKind.HEAD_TO_HEAD
        if incoming == 1:
            return SectionKind.HEAD_TO_TAIL
        return SectionKind.TAIL_TO_TAIL

    def tail_terminal_nodes(self) -> tuple:
        found = []
        if self.left is not Delimiter.INCOMING:
            found.append(self.nodes[0])
        if self.right is not Delimiter.INCOMING and self.nodes[-1] not in found:
            found.append(self.nodes[-1])
        return tuple(found)


@dataclass(frozen=True)
class Slide:
    path: tuple

    def meets(self, z, include_terminal: bool = True) -> bool:
        nodes = self.path if include_terminal else self.path[:-1]
        return any(node in z for node in nodes)


def _check_triplet(graph: HybridGraph, triplet: Triplet) -> None:
    triplet.check_over(graph.node_set)


# ======================
# MORALIZATION
# ======================

def _join(graph: HybridGraph, pairs) -> HybridGraph:
    kinds = {(u, v): EdgeKind.LINE for u, v, _ in graph.edges}
    for u, v in pairs:
        if u != v:
            kinds[(min(u, v), max(u, v))] = EdgeKind.LINE
    return HybridGraph.from_kinds(graph.nodes, kinds)


def moral_graph(graph: HybridGraph) -> HybridGraph:
    """Skeleton plus a line between the two parents of every complex."""
    require_chain_graph(graph)
    return _join(graph, [(c.path[0], c.path[-1]) for c in enumerate_complexes(graph)])


def moral_graph_component_variant(graph: HybridGraph) -> HybridGraph:
    """Skeleton plus lines among the parents of every connectivity component."""
    require_chain_graph(graph)
    pairs = []
    for comp in components(graph):
        comp_parents = set()
        for u in comp:
            comp_parents |= parents(graph, u)
        pairs.extend(combinations(sorted(comp_parents), 2))
    return _join(graph, pairs)


def ug_separated(ug: HybridGraph, triplet: Triplet) -> bool:
    """Every path from X to Y in an undirected graph meets Z."""
    if not is_undirected(ug):
        raise GraphValidationError("undirected separation needs an all-line graph")
    _check_triplet(ug, triplet)
    pruned = nx.Graph()
    pruned.add_nodes_from(u for u in ug.nodes if u not in triplet.z)
    pruned.add_edges_from(
        (u, v) for u, v in ug.lines() if u not in triplet.z and v not in triplet.z
    )
    reached = set()
    for x in sorted(triplet.x):
        if x not in reached:
            reached |= nx.node_connected_component(pruned, x)
    return not (reached & triplet.y)


def moralization_represented(graph: HybridGraph, triplet: Triplet) -> bool:
    require_chain_graph(graph)
    _check_triplet(graph, triplet)
    ancestral = induced_subgraph(graph, ancestral_set(graph, triplet.nodes))
    return ug_separated(moral_graph(ancestral), triplet)


# ======================
# C-SEPARATION
# ======================

def iter_trails(graph: HybridGraph, x, y):
    """Yield every trail from x to y in depth-first, label-sorted order."""
    if x == y:
        raise GraphValidationError("trail endpoints must differ")
    for end in (x, y):
        if not graph.has_node(end):
            raise GraphValidationError(f"unknown node {end}")

    nodes = [x]
    steps = []
    used_arrows = set()

    def extend(current, section):
        for nxt in graph.neighbors(current):
            kind = graph.kind(current, nxt)
            if kind is EdgeKind.LINE:
                if nxt in section:
                    continue
                next_section = section | {nxt}
                arrow = None
            else:
                arrow = (current, nxt) if kind is EdgeKind.FORWARD else (nxt, current)
                if arrow in used_arrows:
                    continue
                used_arrows.add(arrow)
                next_section = frozenset([nxt])
            nodes.append(nxt)
            steps.append(kind)
            if nxt == y:
                yield Trail(tuple(nodes), tuple(steps))
            yield from extend(nxt, next_section)
            nodes.pop()
            steps.pop()
            if arrow is not None:
                used_arrows.discard(arrow)

    yield from extend(x, frozenset([x]))


def enumerate_trails(graph: HybridGraph, x, y) -> list:
    return list(iter_trails(graph, x, y))


def sections_of(trail: Trail) -> list:
    """Maximal line runs of the trail with their delimiting arrows."""
    out = []
    start = 0
    left = Delimiter.END
    for i, kind in enumerate(trail.steps):
        if kind is EdgeKind.LINE:
            continue
        # nodes[i] -> nodes[i+1] is FORWARD: outgoing at this section's right end
        right = Delimiter.OUTGOING if kind is EdgeKind.FORWARD else Delimiter.INCOMING
        out.append(Section(trail.nodes[start:i + 1], start, left, right))
        start = i + 1
        left = Delimiter.INCOMING if kind is EdgeKind.FORWARD else Delimiter.OUTGOING
    out.append(Section(trail.nodes[start:], start, left, Delimiter.END))
    return out


def slides_to(graph: HybridGraph, u) -> list:
    """All slides v1 -> v2 -- ... -- vk with vk = u."""
    if not graph.has_node(u):
        raise GraphValidationError(f"unknown node {u}")
    found = []

    # chain holds u = vk, v(k-1), ..., v2 along lines of one component
    def extend(chain):
        last = chain[-1]
        for p in sorted(parents(graph, last)):
            if p not in chain:
                found.append(Slide((p,) + tuple(reversed(chain))))
        for n in sorted(graph.neighbors(last)):
            if n not in chain and graph.is_line(last, n):
                extend(chain + [n])

    extend([u])
    return found


def section_blocked(graph: HybridGraph, trail: Trail, section: Section, z,
                    include_terminal=None) -> bool:
    end = section.start + len(section.nodes)
    if trail.nodes[section.start:end] != section.nodes:
        raise GraphValidationError("section is not part of the trail")
    z = frozenset(z)
    if section.kind is SectionKind.HEAD_TO_HEAD:
        return all(not (descendants(graph, n) & z) for n in section.nodes)
    if not z.intersection(section.nodes):
        return False
    include_terminal = pick(include_terminal, "slide_includes_terminal")
    return any(
        all(s.meets(z, include_terminal) for s in slides_to(graph, u))
        for u in section.tail_terminal_nodes()
    )


def trail_active(graph: HybridGraph, trail: Trail, z, include_terminal=None) -> bool:
    return not any(
        section_blocked(graph, trail, s, z, include_terminal) for s in sections_of(trail)
    )


def c_represented(graph: HybridGraph, triplet: Triplet, include_terminal=None) -> bool:
    require_chain_graph(graph)
    _check_triplet(graph, triplet)
    for x in sorted(triplet.x):
        for y in sorted(triplet.y):
            for trail in iter_trails(graph, x, y):
                if trail_active(graph, trail, triplet.z, include_terminal):
                    logger.debug("active trail %s given %s", trail, sorted(triplet.z))
                    return False
    return True


def is_represented(graph: HybridGraph, triplet: Triplet, criterion: str = "moral") -> bool:
    if criterion == "moral":
        return moralization_represented(graph, triplet)
    if criterion == "c":
        return c_represented(graph, triplet)
    raise ValueError(f"unknown criterion {criterion!r}")


__all__ = [
    "Delimiter", "Section", "SectionKind", "Slide", "Trail", "Triplet",
    "c_represented", "enumerate_trails", "is_represented", "iter_trails",
    "moral_graph", "moral_graph_component_variant", "moralization_represented",
    "section_blocked", "sections_of", "slides_to", "trail_active", "ug_separated",
]
