"""Graph and triplet generators for the exhaustive and random test families."""
import string
from itertools import combinations, product

import numpy as np

from scripts.hybrid_graph import EdgeKind, HybridGraph, is_chain_graph
from scripts.separation import Triplet

EDGE_CHOICES = (None, EdgeKind.LINE, EdgeKind.FORWARD, EdgeKind.BACKWARD)


def labels(n: int) -> tuple:
    if not 1 <= n <= len(string.ascii_lowercase):
        raise ValueError(f"node count must be between 1 and 26, got {n}")
    return tuple(string.ascii_lowercase[:n])


def _rng(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def iter_hybrid_graphs(nodes):
    """Every hybrid graph over nodes: each pair is absent, a line or an arrow either way."""
    nodes = tuple(sorted(nodes))
    pairs = list(combinations(nodes, 2))
    for choice in product(EDGE_CHOICES, repeat=len(pairs)):
        kinds = {pair: kind for pair, kind in zip(pairs, choice) if kind is not None}
        yield HybridGraph.from_kinds(nodes, kinds)


def iter_chain_graphs(nodes):
    for graph in iter_hybrid_graphs(nodes):
        if is_chain_graph(graph):
            yield graph


def random_chain_graph(nodes, seed=None, edge_prob: float = 0.5, max_blocks=None) -> HybridGraph:
    """Random chain graph: nodes shuffled into ordered blocks, then each pair kept with edge_prob."""
    rng = _rng(seed)
    nodes = tuple(sorted(nodes))
    order = list(rng.permutation(len(nodes)))
    max_blocks = max_blocks or len(nodes)
    block_count = int(rng.integers(1, max_blocks + 1))
    block_of = {}
    for position, index in enumerate(order):
        # first block_count positions open one block each, the rest join a random one
        block = position if position < block_count else int(rng.integers(block_count))
        block_of[nodes[index]] = block

    kinds = {}
    for u, v in combinations(nodes, 2):
        if rng.random() >= edge_prob:
            continue
        if block_of[u] == block_of[v]:
            kinds[(u, v)] = EdgeKind.LINE
        elif block_of[u] < block_of[v]:
            kinds[(u, v)] = EdgeKind.FORWARD
        else:
            kinds[(u, v)] = EdgeKind.BACKWARD
    return HybridGraph.from_kinds(nodes, kinds)


def random_triplet(nodes, seed=None) -> Triplet:
    """Uniform role assignment (X, Y, Z, outside), redrawn until X and Y are nonempty."""
    rng = _rng(seed)
    nodes = tuple(sorted(nodes))
    if len(nodes) < 2:
        raise ValueError("a triplet needs at least two nodes")
    while True:
        roles = rng.integers(0, 4, size=len(nodes))
        x = [n for n, r in zip(nodes, roles) if r == 0]
        y = [n for n, r in zip(nodes, roles) if r == 1]
        if x and y:
            z = [n for n, r in zip(nodes, roles) if r == 2]
            return Triplet(x, y, z)
