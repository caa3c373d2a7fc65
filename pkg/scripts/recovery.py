"""Two-stage structure recovery for chain graphs.

Stage one rebuilds the pattern of the unknown chain graph from a dependency
model, level by level, using only the pairwise predicates dep_all/dep_plus.
Stage two turns a pattern into the largest chain graph of its class: lines
collect orientation bans (transitivity) and are directed by the necessity and
doublecycle principles, bans first.

Ban (u, v) on the line u -- v forbids the orientation u <- v. The auxiliary
relation D used by every principle holds u -> v for arrows and for lines
carrying ban (u, v).
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations

import networkx as nx

from scripts.complexes import pattern_of
from scripts.depmodel import DependencyModel, dep_all, dep_plus
from scripts.errors import (
    GraphValidationError,
    InvalidPatternError,
    OracleInvariantError,
    RecoveryConflictError,
)
from scripts.hybrid_graph import EdgeKind, HybridGraph, directed_pseudocycle

logger = logging.getLogger(__name__)

DEFAULT_RULE_ORDER = ("necessity", "doublecycle")


@dataclass(frozen=True)
class TraceEvent:
    rule: str
    change: str
    witness: tuple = ()

    def __str__(self) -> str:
        line = f"{self.rule}: {self.change}"
        if self.witness:
            line += " via " + " ".join(self.witness)
        return line


def _emit(trace, event: TraceEvent) -> None:
    logger.debug("%s", event)
    if trace is not None:
        trace(event)


@dataclass(frozen=True)
class Directing:
    tail: str
    head: str
    rule: str
    witness: tuple


@dataclass(frozen=True)
class AnnotatedPattern:
    graph: HybridGraph
    bans: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "bans", frozenset(self.bans))
        for u, v in self.bans:
            if not self.graph.is_line(u, v):
                raise GraphValidationError(f"ban on {u} {v} does not refer to a line")

    @cached_property
    def relation(self) -> nx.DiGraph:
        d = nx.DiGraph()
        d.add_nodes_from(self.graph.nodes)
        d.add_edges_from(self.graph.arrows())
        d.add_edges_from(self.bans)
        return d

    def banned(self, u, v) -> bool:
        """True when u <- v is forbidden."""
        return (u, v) in self.bans

    def with_ban(self, u, v) -> "AnnotatedPattern":
        return AnnotatedPattern(self.graph, self.bans | {(u, v)})

    def direct(self, tail, head) -> "AnnotatedPattern":
        if not self.graph.is_line(tail, head):
            raise InvalidPatternError(f"{tail} -- {head} is not a line")
        if self.banned(head, tail):
            raise InvalidPatternError(f"orientation {tail} -> {head} is banned")
        graph = self.graph.with_kinds({(tail, head): EdgeKind.FORWARD})
        bans = self.bans - {(tail, head), (head, tail)}
        return AnnotatedPattern(graph, bans)


# ======================
# STAGE 1: PATTERN
# ======================

def _apply_demands(graph: HybridGraph, demands: dict, level: int) -> HybridGraph:
    updates = {}
    for tail, head in sorted(demands):
        if (head, tail) in demands:
            raise RecoveryConflictError(
                f"level {level} demands both {tail} -> {head} and {head} -> {tail}"
            )
        if graph.is_arrow(head, tail):
            raise RecoveryConflictError(
                f"level {level} demands {tail} -> {head} against the arrow {head} -> {tail}"
            )
        if graph.is_line(tail, head):
            updates[(tail, head)] = EdgeKind.FORWARD
    return graph.with_kinds(updates) if updates else graph


def _level_sequences(graph: HybridGraph, length: int):
    """Chordless w1..w_length: w1 -> w2 or line, line interior, w_{l+1} <- w_l+2 or line."""
    for w1 in graph.nodes:
        for w2 in graph.neighbors(w1):
            if graph.is_arrow(w2, w1):
                continue
            stack = [(w1, w2)]
            while stack:
                seq = stack.pop()
                last = seq[-1]
                for nxt in graph.neighbors(last):
                    if nxt in seq or any(graph.adjacent(nxt, p) for p in seq[:-1]):
                        continue
                    if len(seq) == length - 1:
                        if not graph.is_arrow(last, nxt):
                            yield seq + (nxt,)
                    elif graph.is_line(last, nxt):
                        stack.append(seq + (nxt,))


def recover_pattern(model: DependencyModel, trace=None, on_level=None) -> HybridGraph:
    """Pattern of the chain graph behind model, built from dep_all/dep_plus only."""
    nodes = model.nodes
    kinds = {}
    for i, u in enumerate(nodes):
        for v in nodes[i + 1:]:
            if dep_all(model, u, v):
                kinds[(u, v)] = EdgeKind.LINE
    graph = HybridGraph.from_kinds(nodes, kinds)
    if on_level is not None:
        on_level(0, graph)

    demands = {}
    for w in nodes:
        for u, v in permutations(graph.neighbors(w), 2):
            if graph.adjacent(u, v):
                continue
            if dep_plus(model, u, v, w):
                demands.setdefault((u, w), (u, w, v))
                demands.setdefault((v, w), (u, w, v))
    graph = _apply_demands(graph, demands, 1)
    for (tail, head), witness in sorted(demands.items()):
        _emit(trace, TraceEvent("pattern level 1", f"{tail} -> {head}", witness))
    if on_level is not None:
        on_level(1, graph)

    for level in range(2, len(nodes) - 1):
        demands = {}
        for seq in _level_sequences(graph, level + 2):
            first, last = seq[0], seq[-1]
            if dep_plus(model, first, last, seq[1]) and dep_plus(model, first, last, seq[-2]):
                demands.setdefault((seq[0], seq[1]), seq)
                demands.setdefault((seq[-1], seq[-2]), seq)
        graph = _apply_demands(graph, demands, level)
        for (tail, head), witness in sorted(demands.items()):
            _emit(trace, TraceEvent(f"pattern level {level}", f"{tail} -> {head}", witness))
        if on_level is not None:
            on_level(level, graph)
    return graph


# ======================
# STAGE 2: LARGEST CHAIN GRAPH
# ======================

def _find_semislide(state: AnnotatedPattern, target, excluded):
    """A feasible semislide ending at target with no node adjacent to excluded."""
    graph = state.graph
    allowed = {
        n for n in graph.nodes
        if n != excluded and not graph.adjacent(n, excluded)
    }
    region = state.relation.subgraph(allowed | {target})
    reach = nx.ancestors(region, target) | {target}
    for w1, w2 in graph.arrows():
        if w1 in allowed and w2 in reach:
            return (w1,) + tuple(nx.shortest_path(region, w2, target))
    return None


def feasible_semislide_exists(state: AnnotatedPattern, target, excluded_neighbor) -> bool:
    if target == excluded_neighbor:
        raise GraphValidationError("target and excluded neighbor must differ")
    if not state.graph.is_line(target, excluded_neighbor):
        raise GraphValidationError(f"{target} -- {excluded_neighbor} is not a line")
    return _find_semislide(state, target, excluded_neighbor) is not None


def transitivity_fixpoint(state: AnnotatedPattern, trace=None) -> AnnotatedPattern:
    changed = True
    while changed:
        changed = False
        for u, v in state.graph.lines():
            for x, y in ((u, v), (v, u)):
                if state.banned(x, y):
                    continue
                witness = _find_semislide(state, x, y)
                if witness is None:
                    continue
                state = state.with_ban(x, y)
                changed = True
                _emit(trace, TraceEvent("transitivity", f"ban {x} <- {y}", witness + (y,)))
    return state


def necessity_step(state: AnnotatedPattern):
    """Pseudocycle r0 -> r1 ... rj -- rj+1 ... r0 with every other step in D."""
    graph = state.graph
    relation = state.relation
    for r0, r1 in graph.arrows():
        from_r1 = nx.descendants(relation, r1) | {r1}
        to_r0 = nx.ancestors(relation, r0) | {r0}
        for u, v in graph.lines():
            for p, q in ((u, v), (v, u)):
                if p not in from_r1 or q not in to_r0:
                    continue
                if state.banned(p, q):
                    raise InvalidPatternError(
                        f"necessity demands {q} -> {p} but {p} <- {q} is banned"
                    )
                witness = (
                    (r0,)
                    + tuple(nx.shortest_path(relation, r1, p))
                    + tuple(nx.shortest_path(relation, q, r0))
                )
                return Directing(q, p, "necessity", witness)
    return None


def _semislide_starts(state: AnnotatedPattern, r0, r1):
    """s_n candidates: (s_n, route s0..s_m) for feasible semislides to r1 avoiding r0 up to s_n."""
    graph = state.graph
    relation = state.relation
    to_r1 = nx.ancestors(relation, r1) | {r1}
    outside = {n for n in graph.nodes if n != r0 and not graph.adjacent(n, r0)}
    inner = relation.subgraph(outside)
    found = {}
    for s0, s1 in graph.arrows():
        if s0 not in outside:
            continue
        # n = 0
        if s1 in to_r1 and s0 not in found:
            found[s0] = (s0,) + tuple(nx.shortest_path(relation, s1, r1))
        # n >= 1: s1..sn inside the r0-free region, then at least one step on to r1
        if s1 not in outside:
            continue
        for sn in sorted(nx.descendants(inner, s1) | {s1}):
            if sn in found:
                continue
            for t in sorted(relation.successors(sn)):
                if t in to_r1:
                    found[sn] = (
                        (s0,)
                        + tuple(nx.shortest_path(inner, s1, sn))
                        + tuple(nx.shortest_path(relation, t, r1))
                    )
                    break
    return found


def doublecycle_step(state: AnnotatedPattern):
    """Pseudocycle r0 -> r1 ... r(k-1) -- rk -- r0 plus a semislide s0..sm to r1 touching rk."""
    graph = state.graph
    relation = state.relation
    for r0, r1 in graph.arrows():
        from_r1 = nx.descendants(relation, r1) | {r1}
        starts = None
        for rk in graph.neighbors(r0):
            if not graph.is_line(rk, r0):
                continue
            for prev in graph.neighbors(rk):
                if prev == r0 or prev not in from_r1 or not graph.is_line(prev, rk):
                    continue
                if starts is None:
                    starts = _semislide_starts(state, r0, r1)
                touching = [sn for sn in sorted(starts) if graph.adjacent(rk, sn)]
                if not touching:
                    break
                if state.banned(prev, rk):
                    raise InvalidPatternError(
                        f"doublecycle demands {rk} -> {prev} but {prev} <- {rk} is banned"
                    )
                witness = (
                    (r0,)
                    + tuple(nx.shortest_path(relation, r1, prev))
                    + (rk, r0, "|")
                    + starts[touching[0]]
                )
                return Directing(rk, prev, "doublecycle", witness)
    return None


RULES = {
    "necessity": necessity_step,
    "doublecycle": doublecycle_step,
}


def recover_largest(pattern: HybridGraph, rule_order=DEFAULT_RULE_ORDER, trace=None,
                    on_step=None) -> HybridGraph:
    """Largest chain graph of the class whose pattern is given."""
    for name in rule_order:
        if name not in RULES:
            raise ValueError(f"unknown directing rule {name!r}")
    state = AnnotatedPattern(pattern)
    budget = len(pattern.lines())
    for _ in range(budget + 1):
        state = transitivity_fixpoint(state, trace)
        for name in rule_order:
            directing = RULES[name](state)
            if directing is not None:
                break
        else:
            break
        state = state.direct(directing.tail, directing.head)
        _emit(trace, TraceEvent(directing.rule, f"{directing.tail} -> {directing.head}",
                                directing.witness))
        if on_step is not None:
            on_step(state)
    else:
        raise OracleInvariantError("largest chain graph recovery did not terminate")

    result = state.graph
    cycle = directed_pseudocycle(result)
    if cycle is not None:
        raise InvalidPatternError(
            "input is not a realizable pattern: result has the directed pseudocycle "
            + " ".join(cycle)
        )
    if pattern_of(result) != pattern:
        raise InvalidPatternError("input is not a realizable pattern: its recovery has another pattern")
    return result


def recover_end_to_end(model: DependencyModel, rule_order=DEFAULT_RULE_ORDER,
                       trace=None) -> HybridGraph:
    return recover_largest(recover_pattern(model, trace=trace), rule_order=rule_order, trace=trace)
