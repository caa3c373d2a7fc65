"""Exhaustive small-graph suites and large random runs; run with `pytest -m slow`."""
from itertools import combinations

import numpy as np
import pytest

from scripts.complexes import (
    equivalence_class,
    is_larger,
    largest_cg_oracle,
    line_count,
    markov_equivalent,
    pattern_of,
)
from scripts.depmodel import CGBackedModel, all_triplets, graphoid_closure, input_list
from scripts.generate import iter_chain_graphs, labels, random_chain_graph, random_triplet
from scripts.hybrid_graph import component_chain
from scripts.recovery import recover_largest, recover_pattern
from scripts.separation import (
    c_represented,
    moral_graph,
    moral_graph_component_variant,
    moralization_represented,
)
from scripts.sweep import run_sweep

pytestmark = pytest.mark.slow

SWAPPED = ("doublecycle", "necessity")
LARGEST_EDGE_LIMIT = 8


def _random_graphs(count, sizes, seed):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield random_chain_graph(labels(int(rng.choice(sizes))), rng)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_criteria_agree_on_every_small_chain_graph(n):
    triplets = list(all_triplets(labels(n)))
    for g in iter_chain_graphs(labels(n)):
        for t in triplets:
            assert c_represented(g, t) == moralization_represented(g, t), (str(g), str(t))


def test_criteria_agree_on_random_larger_graphs():
    rng = np.random.default_rng(2024)
    for _ in range(10_000):
        nodes = labels(int(rng.integers(6, 8)))
        g = random_chain_graph(nodes, rng)
        t = random_triplet(nodes, rng)
        assert c_represented(g, t) == moralization_represented(g, t), (str(g), str(t))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_markov_equivalence_is_model_equality(n):
    triplets = list(all_triplets(labels(n)))
    by_skeleton = {}
    for g in iter_chain_graphs(labels(n)):
        model = frozenset(t for t in triplets if moralization_represented(g, t))
        by_skeleton.setdefault(g.skeleton(), []).append((g, model))
    for group in by_skeleton.values():
        for (g, gm), (h, hm) in combinations(group, 2):
            assert markov_equivalent(g, h) == (gm == hm), (str(g), str(h))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_pattern_recovery_on_every_small_chain_graph(n):
    for g in iter_chain_graphs(labels(n)):
        assert recover_pattern(CGBackedModel(g)) == pattern_of(g), str(g)


def test_pattern_recovery_on_random_larger_graphs():
    for g in _random_graphs(500, (6, 7), seed=41):
        assert recover_pattern(CGBackedModel(g)) == pattern_of(g), str(g)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_largest_recovery_on_every_small_chain_graph(n):
    for g in iter_chain_graphs(labels(n)):
        expected = largest_cg_oracle(g)
        p = pattern_of(g)
        assert recover_largest(p) == expected, str(g)
        assert recover_largest(p, rule_order=SWAPPED) == expected, str(g)


def _check_largest_against_class(g):
    members = equivalence_class(g)
    p = pattern_of(g)
    largest = recover_largest(p)
    assert recover_largest(p, rule_order=SWAPPED) == largest, str(g)
    assert largest in members, str(g)
    assert all(is_larger(m, largest) for m in members), str(g)
    assert line_count(largest) == max(line_count(m) for m in members), str(g)


def test_largest_recovery_on_five_node_classes():
    # the recovered graph depends on the pattern alone, so one graph per pattern covers the suite
    seen = set()
    for g in iter_chain_graphs(labels(5)):
        if len(g.edges) > LARGEST_EDGE_LIMIT:
            continue
        p = pattern_of(g)
        if p not in seen:
            seen.add(p)
            _check_largest_against_class(g)


def test_largest_recovery_on_random_larger_graphs():
    seen = set()
    for g in _random_graphs(500, (6, 7), seed=41):
        if len(g.edges) > LARGEST_EDGE_LIMIT:
            continue
        p = pattern_of(g)
        if p not in seen:
            seen.add(p)
            _check_largest_against_class(g)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_input_list_closure_on_every_small_chain_graph(n):
    triplets = list(all_triplets(labels(n)))
    for g in iter_chain_graphs(labels(n)):
        closure = graphoid_closure(input_list(g, component_chain(g)), g.nodes)
        assert closure == {t for t in triplets if moralization_represented(g, t)}, str(g)


def test_input_list_closure_on_random_five_node_graphs():
    triplets = list(all_triplets(labels(5)))
    for g in _random_graphs(200, (5,), seed=17):
        closure = graphoid_closure(input_list(g, component_chain(g)), g.nodes)
        assert closure == {t for t in triplets if moralization_represented(g, t)}, str(g)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_lemmas_on_every_small_chain_graph(n):
    table = run_sweep(n, properties=["lemmas"])
    assert table["checks"].sum() > 0
    assert table["mismatches"].sum() == 0


def test_moral_graph_variants_on_random_graphs():
    for g in _random_graphs(10_000, (1, 2, 3, 4, 5, 6), seed=3):
        assert moral_graph(g) == moral_graph_component_variant(g), str(g)


def test_random_sweep_on_six_nodes():
    table = run_sweep(6, properties=["criteria", "pattern", "moral", "inputlist", "lemmas"],
                      samples=100, seed=5)
    assert table["mismatches"].sum() == 0
