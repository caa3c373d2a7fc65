import pytest
from hypothesis import given, settings

from scripts.complexes import (
    Complex,
    enumerate_complexes,
    equivalence_class,
    is_larger,
    largest_cg_oracle,
    line_count,
    markov_equivalent,
    pattern_of,
)
from scripts.depmodel import all_triplets
from scripts.errors import BoundExceededError, GraphValidationError, NotAChainGraphError
from scripts.separation import moralization_represented
from tests.strategies import chain_graphs, graph


def test_complexes_of_g_a(g_a):
    assert enumerate_complexes(g_a) == (Complex(("a", "d", "c")),)
    assert str(enumerate_complexes(g_a)[0]) == "a -> d <- c"


def test_complexes_of_g_e(g_e):
    found = enumerate_complexes(g_e)
    assert found == (Complex(("a", "c", "d", "e", "b")), Complex(("b", "g", "d")))
    assert found[0].degree == 3
    assert found[0].region == frozenset("cde")
    assert found[0].parents == ("a", "b")
    assert str(found[0]) == "a -> c -- d -- e <- b"


def test_complex_of_degree_two(g_c):
    assert enumerate_complexes(g_c) == (Complex(("u", "p", "q", "v")),)


def test_chord_or_adjacent_parents_spoil_a_complex():
    assert enumerate_complexes(graph("abc", "a->b", "c->b", "a--c")) == ()
    # a -> b -- c <- d with the chord b -- d
    assert enumerate_complexes(graph("abcd", "a->b", "b--c", "d->c", "b--d")) == ()


def test_pattern_keeps_only_complex_arrows(g_a, g_a_lines, g_e):
    assert pattern_of(g_a) == g_a_lines
    assert pattern_of(g_e) == graph(
        "abcdefg", "a->c", "c--d", "d--e", "b->e", "b->g", "d->g", "d--f",
    )


def test_pattern_needs_chain_graph():
    with pytest.raises(NotAChainGraphError):
        pattern_of(graph("abc", "a->b", "b->c", "c->a"))


def test_markov_equivalence_examples(g_a, g_a_lines):
    assert markov_equivalent(g_a, g_a_lines)
    assert not markov_equivalent(graph("abc", "a->b", "c->b"), graph("abc", "a--b", "b--c"))
    assert markov_equivalent(graph("ab", "a->b"), graph("ab", "a--b"))
    assert not markov_equivalent(graph("ab", "a->b"), graph("ab"))


def test_markov_equivalence_needs_same_nodes():
    with pytest.raises(GraphValidationError):
        markov_equivalent(graph("ab"), graph("abc"))


def test_is_larger(g_a, g_a_lines):
    assert is_larger(g_a, g_a_lines)
    assert not is_larger(g_a_lines, g_a)
    with pytest.raises(GraphValidationError, match="underlying"):
        is_larger(g_a, graph("abcd", "a->d"))


def test_equivalence_class_of_g_a(g_a, g_a_lines):
    members = equivalence_class(g_a)
    assert len(members) == 8
    assert g_a in members and g_a_lines in members
    assert all(m.is_arrow("a", "d") and m.is_arrow("c", "d") for m in members)
    assert not any(m.is_arrow("a", "b") and m.is_arrow("c", "b") for m in members)
    assert list(members) == sorted(members, key=lambda m: m.edges)


def test_equivalence_class_members_share_the_model(g_a):
    triplets = list(all_triplets(g_a.nodes))
    for member in equivalence_class(g_a):
        assert all(
            moralization_represented(member, t) == moralization_represented(g_a, t)
            for t in triplets
        )


def test_degree_two_complex_class_is_a_singleton(g_c):
    assert equivalence_class(g_c) == (g_c,)
    assert largest_cg_oracle(g_c) == g_c


def test_largest_of_g_a_is_its_pattern(g_a, g_a_lines):
    assert largest_cg_oracle(g_a) == g_a_lines
    assert line_count(largest_cg_oracle(g_a)) == 2


def test_largest_needs_an_arrow_outside_the_pattern(g_n):
    largest = largest_cg_oracle(g_n)
    assert largest == graph("abcd", "a->c", "b->c", "a->d", "c--d")
    assert pattern_of(g_n) == graph("abcd", "a->c", "b->c", "c--d", "a--d")


def test_class_bound(g_e):
    with pytest.raises(BoundExceededError):
        equivalence_class(g_e, edge_bound=3)


def test_class_bound_from_environment(g_e, monkeypatch):
    monkeypatch.setenv("CHAINGRAPH_CLASS_EDGE_BOUND", "2")
    with pytest.raises(BoundExceededError, match="bound 2"):
        equivalence_class(g_e)


@settings(max_examples=25)
@given(chain_graphs(max_nodes=4))
def test_largest_is_larger_than_every_member(g):
    largest = largest_cg_oracle(g)
    for member in equivalence_class(g):
        assert is_larger(member, largest)
        assert markov_equivalent(member, largest)
        assert line_count(member) <= line_count(largest)


@given(chain_graphs(max_nodes=5))
def test_pattern_is_class_invariant(g):
    p = pattern_of(g)
    assert p.skeleton() == g.skeleton()
    assert set(p.arrows()) <= set(g.arrows())
