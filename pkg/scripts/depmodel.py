"""Dependency models over a finite node set.

A dependency model splits every triplet <X, Y | Z> into an independency part
and a dependency part. Models are either backed by a chain graph (answers
come from a separation criterion) or explicit (a closed-world list of the
independencies). The pairwise predicates used by structure recovery, the
input list of a chain and the (semi)graphoid closure engine live here too.
"""
import logging
from itertools import combinations, product

import numpy as np

from scripts.config import pick
from scripts.errors import BoundExceededError, GraphValidationError
from scripts.hybrid_graph import Chain, HybridGraph, boundary, require_chain_graph
from scripts.separation import Triplet, c_represented, moralization_represented

logger = logging.getLogger(__name__)

CRITERIA = {
    "moral": moralization_represented,
    "c": c_represented,
}


class DependencyModel:
    """Base class; subclasses answer _lookup(triplet)."""

    def __init__(self, nodes):
        self.nodes = tuple(sorted(set(nodes)))
        self.node_set = frozenset(self.nodes)
        self._memo = {}

    def _lookup(self, triplet: Triplet) -> bool:
        raise NotImplementedError

    def is_independent(self, triplet: Triplet) -> bool:
        answer = self._memo.get(triplet)
        if answer is None:
            triplet.check_over(self.node_set)
            answer = self._lookup(triplet)
            self._memo[triplet] = answer
        return answer

    def independencies(self) -> frozenset:
        return frozenset(t for t in all_triplets(self.nodes) if self.is_independent(t))


class CGBackedModel(DependencyModel):
    def __init__(self, graph: HybridGraph, criterion: str = "moral"):
        require_chain_graph(graph)
        if criterion not in CRITERIA:
            raise ValueError(f"unknown criterion {criterion!r}")
        super().__init__(graph.nodes)
        self.graph = graph
        self.criterion = criterion

    def _lookup(self, triplet: Triplet) -> bool:
        return CRITERIA[self.criterion](self.graph, triplet)

    def __repr__(self) -> str:
        return f"CGBackedModel({self.graph}, criterion={self.criterion!r})"


class ExplicitModel(DependencyModel):
    """Closed world: every unlisted triplet is a dependency."""

    def __init__(self, nodes, independencies=()):
        super().__init__(nodes)
        listed = frozenset(independencies)
        for triplet in listed:
            triplet.check_over(self.node_set)
        self.listed = listed

    def _lookup(self, triplet: Triplet) -> bool:
        return triplet in self.listed

    def validate(self, node_bound=None):
        """Warn (and return False) when the listed part is not semigraphoid-closed.

        Models over more nodes than the closure bound are not checked; None is returned.
        """
        node_bound = pick(node_bound, "closure_node_bound")
        if len(self.nodes) > node_bound:
            logger.info("skipping semigraphoid check: %d nodes exceed the closure bound %d",
                        len(self.nodes), node_bound)
            return None
        closed = semigraphoid_closure(self.listed, self.nodes, node_bound=node_bound)
        missing = closed - self.listed
        if missing:
            logger.warning("explicit model is not semigraphoid-closed: %d implied triplets "
                           "missing, e.g. %s", len(missing), min(missing, key=Triplet.sort_key))
            return False
        return True


def is_independent(model: DependencyModel, triplet: Triplet) -> bool:
    return model.is_independent(triplet)


# ======================
# PAIRWISE PREDICATES
# ======================

def _conditioning_sets(model: DependencyModel, u, v, strict):
    rest = [n for n in model.nodes if n != u and n != v]
    top = len(rest) - 1 if strict else len(rest)
    for size in range(0, top + 1):
        for z in combinations(rest, size):
            yield frozenset(z)


def dep_all(model: DependencyModel, u, v, strict=None) -> bool:
    """D<u, v | Z> for every Z outside {u, v}."""
    if u == v:
        raise GraphValidationError("dep_all needs two distinct nodes")
    strict = pick(strict, "strict_subsets")
    return not any(
        model.is_independent(Triplet({u}, {v}, z))
        for z in _conditioning_sets(model, u, v, strict)
    )


def dep_plus(model: DependencyModel, u, v, w, strict=None) -> bool:
    """D<u, v | Z> for every Z outside {u, v} that contains w."""
    if len({u, v, w}) != 3:
        raise GraphValidationError("dep_plus needs three distinct nodes")
    strict = pick(strict, "strict_subsets")
    return not any(
        model.is_independent(Triplet({u}, {v}, z))
        for z in _conditioning_sets(model, u, v, strict)
        if w in z
    )


def cg_fast_dep_all(graph: HybridGraph, u, v) -> bool:
    if u == v:
        raise GraphValidationError("dep_all needs two distinct nodes")
    require_chain_graph(graph)
    return graph.adjacent(u, v)


def cg_fast_complex_test(graph: HybridGraph, u, w, v) -> bool:
    """u -> w <- v is a complex; needs u, w and v, w adjacent and u, v not."""
    if len({u, v, w}) != 3:
        raise GraphValidationError("complex test needs three distinct nodes")
    require_chain_graph(graph)
    if not (graph.adjacent(u, w) and graph.adjacent(v, w)) or graph.adjacent(u, v):
        raise GraphValidationError(
            f"complex test needs {u}-{w} and {v}-{w} edges and no {u}-{v} edge"
        )
    return graph.is_arrow(u, w) and graph.is_arrow(v, w)


# ======================
# INPUT LIST
# ======================

def input_list(graph: HybridGraph, chain: Chain) -> list:
    """<u, (B1 u ... u Bk(u)) minus (bd(u) u {u}) | bd(u)> for every node u with a nonempty middle."""
    chain.validate_for(graph)
    entries = []
    for u in graph.nodes:
        k = chain.block_index(u)
        earlier = frozenset().union(*chain.blocks[:k + 1])
        bd = boundary(graph, u)
        rest = earlier - bd - {u}
        if rest:
            entries.append(Triplet({u}, rest, bd))
    return entries


# ======================
# TRIPLETS AND CLOSURE
# ======================

def all_triplets(nodes, node_bound=None):
    """Every triplet over nodes: each node is in X, Y, Z or outside."""
    nodes = tuple(sorted(set(nodes)))
    node_bound = pick(node_bound, "triplet_node_bound")
    if len(nodes) > node_bound:
        raise BoundExceededError(f"{len(nodes)} nodes exceed the triplet bound {node_bound}")
    for roles in product(range(4), repeat=len(nodes)):
        x = frozenset(n for n, r in zip(nodes, roles) if r == 0)
        y = frozenset(n for n, r in zip(nodes, roles) if r == 1)
        if x and y:
            z = frozenset(n for n, r in zip(nodes, roles) if r == 2)
            yield Triplet(x, y, z)


def _nonempty_proper_subsets(items):
    items = sorted(items)
    for size in range(1, len(items)):
        for sub in combinations(items, size):
            yield frozenset(sub)


def _unary_consequences(t: Triplet):
    yield t.symmetric()
    # decomposition and weak union on the second component
    for y in _nonempty_proper_subsets(t.y):
        yield Triplet(t.x, y, t.z)
        yield Triplet(t.x, y, t.z | (t.y - y))


def _binary_consequences(t: Triplet, other: Triplet, with_intersection: bool):
    """Consequences of t and other (same X) in both premise orders."""
    for a, b in ((t, other), (other, t)):
        # contraction: <X,Y|Z> & <X,W|Y u Z> => <X, Y u W | Z>
        if b.z == a.y | a.z and not (b.y & a.y):
            yield Triplet(a.x, a.y | b.y, a.z)
        # intersection: <X,Y|Z u W> & <X,W|Z u Y> => <X, Y u W | Z>
        if with_intersection and not (a.y & b.y) and b.y <= a.z and a.y <= b.z:
            z = a.z - b.y
            if z == b.z - a.y:
                yield Triplet(a.x, a.y | b.y, z)


def graphoid_closure(triplets, nodes, with_intersection=True, node_bound=None, seed=None):
    """Least superset closed under the semigraphoid (and intersection) axioms."""
    nodes = frozenset(nodes)
    node_bound = pick(node_bound, "closure_node_bound")
    if len(nodes) > node_bound:
        raise BoundExceededError(f"{len(nodes)} nodes exceed the closure bound {node_bound}")
    start = sorted(set(triplets), key=Triplet.sort_key)
    for triplet in start:
        triplet.check_over(nodes)

    rng = np.random.default_rng(seed) if seed is not None else None
    closure = set()
    by_x = {}
    pending = list(start)
    while pending:
        if rng is not None:
            t = pending.pop(int(rng.integers(len(pending))))
        else:
            t = pending.pop()
        if t in closure:
            continue
        closure.add(t)
        peers = by_x.setdefault(t.x, [])
        derived = list(_unary_consequences(t))
        for other in peers:
            derived.extend(_binary_consequences(t, other, with_intersection))
        peers.append(t)
        pending.extend(d for d in derived if d not in closure)
    logger.debug("closure of %d triplets has %d members", len(start), len(closure))
    return frozenset(closure)


def semigraphoid_closure(triplets, nodes, node_bound=None) -> frozenset:
    return graphoid_closure(triplets, nodes, with_intersection=False, node_bound=node_bound)


__all__ = [
    "CGBackedModel", "DependencyModel", "ExplicitModel",
    "all_triplets", "cg_fast_complex_test", "cg_fast_dep_all", "dep_all", "dep_plus",
    "graphoid_closure", "input_list", "is_independent", "semigraphoid_closure",
]
