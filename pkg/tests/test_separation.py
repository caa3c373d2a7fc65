from itertools import combinations

import pytest
from hypothesis import given

from scripts.errors import GraphValidationError, TripletError
from scripts.hybrid_graph import EdgeKind, is_undirected
from scripts.separation import (
    Delimiter,
    SectionKind,
    Slide,
    Trail,
    Triplet,
    c_represented,
    enumerate_trails,
    is_represented,
    moral_graph,
    moral_graph_component_variant,
    moralization_represented,
    section_blocked,
    sections_of,
    slides_to,
    trail_active,
    ug_separated,
)
from tests.strategies import chain_graphs, graph, graph_and_triplet

F, B, L = EdgeKind.FORWARD, EdgeKind.BACKWARD, EdgeKind.LINE
Z_CEG = frozenset("ceg")


def test_triplet_validation_and_format():
    t = Triplet({"a"}, {"f"}, {"c", "e", "g"})
    assert str(t) == "a | f | c,e,g"
    assert str(Triplet({"a"}, {"b"})) == "a | b |"
    assert t.symmetric() == Triplet({"f"}, {"a"}, {"c", "e", "g"})
    with pytest.raises(TripletError, match="nonempty"):
        Triplet(set(), {"a"})
    with pytest.raises(TripletError, match="disjoint"):
        Triplet({"a"}, {"a", "b"})


def test_moral_graph_of_g_e(g_e):
    m = moral_graph(g_e)
    assert is_undirected(m)
    assert m.skeleton() == g_e.skeleton() | {("a", "b"), ("b", "d")}


def test_moral_graph_variants_agree_on_g_e(g_e):
    assert moral_graph(g_e) == moral_graph_component_variant(g_e)


def test_ug_separation():
    ug = graph("abc", "a--b", "b--c")
    assert ug_separated(ug, Triplet({"a"}, {"c"}, {"b"}))
    assert not ug_separated(ug, Triplet({"a"}, {"c"}))
    with pytest.raises(GraphValidationError, match="all-line"):
        ug_separated(graph("ab", "a->b"), Triplet({"a"}, {"b"}))


def test_example_triplet_is_connected_by_both_criteria(g_e):
    t = Triplet({"a"}, {"f"}, Z_CEG)
    assert not moralization_represented(g_e, t)
    assert not c_represented(g_e, t)


def test_g_a_separating_set(g_a):
    assert not moralization_represented(g_a, Triplet({"a"}, {"c"}))
    assert moralization_represented(g_a, Triplet({"a"}, {"c"}, {"b"}))
    assert not moralization_represented(g_a, Triplet({"a"}, {"c"}, {"b", "d"}))
    for z in ((), ("b",), ("b", "d")):
        t = Triplet({"a"}, {"c"}, z)
        assert c_represented(g_a, t) == moralization_represented(g_a, t)


def test_degree_two_complex(g_c):
    assert is_represented(g_c, Triplet({"u"}, {"v"}), "moral")
    assert is_represented(g_c, Triplet({"u"}, {"v"}), "c")
    assert not is_represented(g_c, Triplet({"u"}, {"v"}, {"p"}), "moral")
    assert not is_represented(g_c, Triplet({"u"}, {"v"}, {"p"}), "c")
    with pytest.raises(ValueError, match="criterion"):
        is_represented(g_c, Triplet({"u"}, {"v"}), "d")


def test_unknown_triplet_node(g_c):
    with pytest.raises(TripletError, match="unknown"):
        moralization_represented(g_c, Triplet({"u"}, {"z"}))


def test_trails_of_degree_two_complex(g_c):
    trails = enumerate_trails(g_c, "u", "v")
    assert trails == [Trail(("u", "p", "q", "v"), (F, L, B))]
    assert str(trails[0]) == "u -> p -- q <- v"


def test_trails_may_revisit_a_node_in_another_section(g_e):
    trails = enumerate_trails(g_e, "a", "f")
    nodes = {t.nodes for t in trails}
    assert ("a", "c", "d", "f") in nodes
    assert ("a", "c", "d", "g", "b", "e", "d", "f") in nodes
    assert ("a", "c", "d", "e", "b", "g", "d", "f") in nodes
    for trail in trails:
        arrows = [
            (u, v) if k is F else (v, u)
            for u, v, k in zip(trail.nodes, trail.nodes[1:], trail.steps) if k is not L
        ]
        assert len(arrows) == len(set(arrows))
        for section in sections_of(trail):
            assert len(set(section.nodes)) == len(section.nodes)


def test_trail_endpoints_must_differ(g_e):
    with pytest.raises(GraphValidationError):
        enumerate_trails(g_e, "a", "a")


def test_sections_of_degree_two_trail(g_c):
    sections = sections_of(Trail(("u", "p", "q", "v"), (F, L, B)))
    assert [s.nodes for s in sections] == [("u",), ("p", "q"), ("v",)]
    assert [s.kind for s in sections] == [
        SectionKind.TAIL_TO_TAIL, SectionKind.HEAD_TO_HEAD, SectionKind.TAIL_TO_TAIL,
    ]
    assert (sections[1].left, sections[1].right) == (Delimiter.INCOMING, Delimiter.INCOMING)
    assert sections[0].tail_terminal_nodes() == ("u",)
    assert sections[1].tail_terminal_nodes() == ()


def test_slides():
    assert slides_to(graph("ab", "a->b"), "b") == [Slide(("a", "b"))]
    g = graph(["p", "q", "u"], "p->q", "q--u")
    assert slides_to(g, "u") == [Slide(("p", "q", "u"))]
    # an arrow out of u never starts a slide to u
    assert slides_to(graph(["p", "q", "u"], "p->q", "u->q"), "u") == []


def test_slides_to_d_in_g_e_all_meet_z(g_e):
    slides = slides_to(g_e, "d")
    assert slides == [Slide(("a", "c", "d")), Slide(("b", "e", "d"))]
    assert all(s.meets(Z_CEG) for s in slides)
    assert not slides[0].meets({"d"}, include_terminal=False)
    assert slides[0].meets({"d"}, include_terminal=True)


def test_line_component_with_shared_child_is_separated_by_its_middle():
    g = graph("abcd", "a--c", "a--d", "c->b", "d->b")
    t = Triplet({"c"}, {"d"}, {"a"})
    assert slides_to(g, "c") == []
    assert c_represented(g, t)
    assert moralization_represented(g, t)


def test_path_section_is_blocked(g_e):
    trail = Trail(("a", "c", "d", "f"), (F, L, F))
    sections = sections_of(trail)
    assert [s.kind for s in sections] == [
        SectionKind.TAIL_TO_TAIL, SectionKind.HEAD_TO_TAIL, SectionKind.HEAD_TO_TAIL,
    ]
    assert not section_blocked(g_e, trail, sections[0], Z_CEG)
    assert section_blocked(g_e, trail, sections[1], Z_CEG)
    assert not section_blocked(g_e, trail, sections[2], Z_CEG)
    assert not trail_active(g_e, trail, Z_CEG)


def test_long_trail_is_active(g_e):
    trail = Trail(("a", "c", "d", "e", "b", "g", "d", "f"), (F, L, L, B, F, B, F))
    sections = sections_of(trail)
    assert sections[1].nodes == ("c", "d", "e")
    assert sections[1].kind is SectionKind.HEAD_TO_HEAD
    assert not section_blocked(g_e, trail, sections[1], Z_CEG)
    assert section_blocked(g_e, trail, sections[1], set())
    assert trail_active(g_e, trail, Z_CEG)


def test_section_must_lie_on_trail(g_e):
    trail = Trail(("a", "c", "d", "f"), (F, L, F))
    other = sections_of(Trail(("b", "e"), (F,)))[0]
    with pytest.raises(GraphValidationError, match="not part"):
        section_blocked(g_e, trail, other, Z_CEG)


def test_criteria_agree_on_every_pairwise_triplet_of_g_e(g_e):
    for u, v in combinations(g_e.nodes, 2):
        rest = [n for n in g_e.nodes if n not in (u, v)]
        for size in range(len(rest) + 1):
            for z in combinations(rest, size):
                t = Triplet({u}, {v}, z)
                assert c_represented(g_e, t) == moralization_represented(g_e, t), str(t)
    assert c_represented(g_e, Triplet({"a"}, {"d"}, {"c", "e"}))


@given(graph_and_triplet(max_nodes=5))
def test_criteria_agree(data):
    g, t = data
    assert c_represented(g, t) == moralization_represented(g, t)


@given(chain_graphs(max_nodes=6))
def test_moral_graph_variants_agree(g):
    assert moral_graph(g) == moral_graph_component_variant(g)


@given(graph_and_triplet(max_nodes=5))
def test_represented_triplets_are_symmetric(data):
    g, t = data
    assert moralization_represented(g, t) == moralization_represented(g, t.symmetric())
