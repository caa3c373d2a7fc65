"""Property sweeps over exhaustive or random chain-graph families.

Each property takes one chain graph (plus a numpy Generator for any extra
sampling) and returns (checks, mismatches). run_sweep collects a pandas table
with one row per property.
"""
import logging
import time
from itertools import combinations

import numpy as np
import pandas as pd

from scripts.complexes import (
    equivalence_class,
    largest_cg_oracle,
    markov_equivalent,
    pattern_of,
)
from scripts.config import get_settings
from scripts.depmodel import (
    CGBackedModel,
    all_triplets,
    dep_all,
    dep_plus,
    graphoid_closure,
    input_list,
)
from scripts.generate import (
    EDGE_CHOICES,
    iter_chain_graphs,
    labels,
    random_chain_graph,
    random_triplet,
)
from scripts.hybrid_graph import HybridGraph, boundary, component_chain, is_chain_graph
from scripts.recovery import recover_largest, recover_pattern
from scripts.separation import (
    Triplet,
    c_represented,
    moral_graph,
    moral_graph_component_variant,
    moralization_represented,
)

logger = logging.getLogger(__name__)

EXHAUSTIVE_TRIPLET_NODES = 5
RANDOM_TRIPLETS_PER_GRAPH = 20


def _triplets(graph: HybridGraph, rng):
    if len(graph.nodes) <= EXHAUSTIVE_TRIPLET_NODES:
        return list(all_triplets(graph.nodes))
    return [random_triplet(graph.nodes, rng) for _ in range(RANDOM_TRIPLETS_PER_GRAPH)]


def check_criteria(graph, rng):
    checks = mismatches = 0
    if len(graph.nodes) < 2:
        return 0, 0
    for triplet in _triplets(graph, rng):
        checks += 1
        if c_represented(graph, triplet) != moralization_represented(graph, triplet):
            mismatches += 1
            logger.warning("criteria disagree on %s for %s", triplet, graph)
    return checks, mismatches


def _random_reorientation(graph: HybridGraph, rng) -> HybridGraph:
    while True:
        kinds = {(u, v): EDGE_CHOICES[int(rng.integers(1, 4))] for u, v, _ in graph.edges}
        candidate = HybridGraph.from_kinds(graph.nodes, kinds)
        if is_chain_graph(candidate):
            return candidate


def check_markov_equivalence(graph, rng):
    if len(graph.nodes) < 2:
        return 0, 0
    other = _random_reorientation(graph, rng)
    same_model = all(
        moralization_represented(graph, t) == moralization_represented(other, t)
        for t in all_triplets(graph.nodes)
    )
    agree = markov_equivalent(graph, other) == same_model
    if not agree:
        logger.warning("Markov equivalence disagrees with induced models: %s vs %s", graph, other)
    return 1, int(not agree)


def check_pattern_recovery(graph, rng):
    recovered = recover_pattern(CGBackedModel(graph))
    ok = recovered == pattern_of(graph)
    if not ok:
        logger.warning("pattern recovery mismatch for %s", graph)
    return 1, int(not ok)


def check_largest_recovery(graph, rng):
    if len(graph.edges) > get_settings().class_edge_bound:
        return 0, 0
    expected = largest_cg_oracle(graph)
    pattern = pattern_of(graph)
    mismatches = 0
    for order in (("necessity", "doublecycle"), ("doublecycle", "necessity")):
        if recover_largest(pattern, rule_order=order) != expected:
            mismatches += 1
            logger.warning("largest recovery (%s) mismatch for %s", ",".join(order), graph)
    return 2, mismatches


def check_input_list(graph, rng):
    if len(graph.nodes) < 2 or len(graph.nodes) > get_settings().closure_node_bound:
        return 0, 0
    closure = graphoid_closure(input_list(graph, component_chain(graph)), graph.nodes)
    represented = {t for t in all_triplets(graph.nodes) if moralization_represented(graph, t)}
    ok = closure == represented
    if not ok:
        logger.warning("input list closure mismatch for %s", graph)
    return 1, int(not ok)


def check_moral_variants(graph, rng):
    ok = moral_graph(graph) == moral_graph_component_variant(graph)
    return 1, int(not ok)


def check_class_members(graph, rng):
    """Every class member induces the generator's model."""
    if len(graph.edges) > get_settings().class_edge_bound:
        return 0, 0
    checks = mismatches = 0
    triplets = list(all_triplets(graph.nodes)) if len(graph.nodes) > 1 else []
    for member in equivalence_class(graph):
        checks += 1
        if any(moralization_represented(graph, t) != moralization_represented(member, t)
               for t in triplets):
            mismatches += 1
    return checks, mismatches


def induced_paths(graph: HybridGraph, u, v):
    """Chordless paths from u to v with at least three nodes."""
    def extend(path):
        last = path[-1]
        for nxt in graph.neighbors(last):
            if nxt in path or any(graph.adjacent(nxt, p) for p in path[:-1]):
                continue
            if nxt == v:
                if len(path) >= 2:
                    yield path + (nxt,)
                continue
            yield from extend(path + (nxt,))

    yield from extend((u,))


def is_complex_run(graph: HybridGraph, path) -> bool:
    """path[0] -> path[1] -- ... -- path[-2] <- path[-1] on an induced path."""
    interior = zip(path[1:-2], path[2:-1])
    return (graph.is_arrow(path[0], path[1]) and graph.is_arrow(path[-1], path[-2])
            and all(graph.is_line(a, b) for a, b in interior))


def _has_shorter_complex(graph: HybridGraph, path) -> bool:
    k = len(path)
    return any(
        is_complex_run(graph, path[i:j + 1])
        for i in range(k) for j in range(i + 2, k) if j - i < k - 1
    )


def check_lemmas(graph, rng):
    """Boundary separation, dep_all on edges and dep_plus on complexes of every degree."""
    if len(graph.nodes) < 2:
        return 0, 0
    model = CGBackedModel(graph)
    checks = mismatches = 0

    def record(ok, what):
        nonlocal checks, mismatches
        checks += 1
        if not ok:
            mismatches += 1
            logger.warning("%s fails for %s", what, graph)

    for u, v in combinations(graph.nodes, 2):
        adjacent = graph.adjacent(u, v)
        record(dep_all(model, u, v) == adjacent, f"edge test on {u},{v}")
        if adjacent:
            continue
        z = (boundary(graph, u) | boundary(graph, v)) - {u, v}
        record(model.is_independent(Triplet({u}, {v}, z)), f"boundary separation of {u},{v}")
        for path in induced_paths(graph, u, v):
            if len(path) == 3:
                w = path[1]
                record(dep_plus(model, u, v, w) == is_complex_run(graph, path),
                       f"complex test on {u},{w},{v}")
            elif not _has_shorter_complex(graph, path):
                both = dep_plus(model, u, v, path[1]) and dep_plus(model, u, v, path[-2])
                record(both == is_complex_run(graph, path),
                       "complex test on " + ",".join(path))
    return checks, mismatches


PROPERTIES = {
    "criteria": check_criteria,
    "markov": check_markov_equivalence,
    "pattern": check_pattern_recovery,
    "largest": check_largest_recovery,
    "inputlist": check_input_list,
    "moral": check_moral_variants,
    "class": check_class_members,
    "lemmas": check_lemmas,
}


def family(n: int, samples=None, seed=None):
    """All chain graphs on n nodes, or `samples` random ones."""
    nodes = labels(n)
    if samples is None:
        yield from iter_chain_graphs(nodes)
        return
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        yield random_chain_graph(nodes, rng)


def run_sweep(n: int, properties=None, samples=None, seed=0) -> pd.DataFrame:
    properties = list(properties or PROPERTIES)
    for name in properties:
        if name not in PROPERTIES:
            raise ValueError(f"unknown property {name!r}")
    graphs = list(family(n, samples, seed))
    rng = np.random.default_rng(seed)

    rows = []
    for name in properties:
        check = PROPERTIES[name]
        started = time.perf_counter()
        checks = mismatches = 0
        for graph in graphs:
            c, m = check(graph, rng)
            checks += c
            mismatches += m
        seconds = time.perf_counter() - started
        logger.info("%s: %d checks, %d mismatches in %.2fs", name, checks, mismatches, seconds)
        rows.append({
            "property": name,
            "graphs": len(graphs),
            "checks": checks,
            "mismatches": mismatches,
            "seconds": seconds,
        })
    return pd.DataFrame(rows, columns=["property", "graphs", "checks", "mismatches", "seconds"])
