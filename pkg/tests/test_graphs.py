from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given

from ceilab.errors import GraphError
from ceilab.generators import complete, cycle, disjoint, path, star
from ceilab.graphs import (
    Graph,
    canonical_form,
    component_profile,
    connected_elimination_order,
    format_graph,
    induced_cycles,
    is_connected,
    is_elimination_order,
    isomorphism_classes,
    koszul_necessary_conditions,
    maximum_matching,
    odd_cycle_condition,
    parse_graph,
    removable_off_cycle_vertex,
    simple_cycles,
    unicyclic_labeling,
    unicyclic_profile,
)

from conftest import graphs, to_nx

TRIANGLE = cycle(3)
TWO_TRIANGLES = disjoint(cycle(3), cycle(3))


def test_graph_normalizes_edges():
    g = Graph(3, ((2, 1), (3, 2)))
    assert g.edges == ((1, 2), (2, 3))
    assert g.degree(2) == 2 and g.has_edge(2, 1)


@pytest.mark.parametrize("edges", [((1, 1),), ((1, 4),), ((1, 2), (2, 1))])
def test_graph_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        Graph(3, edges)


def test_component_profile_examples():
    assert component_profile(TRIANGLE)[1:3] == (1, 0)
    assert component_profile(path(3))[1:3] == (1, 1)
    # an isolated vertex counts as a bipartite component
    assert component_profile(Graph(4, TRIANGLE.edges))[1:3] == (1, 1)


@given(graphs())
def test_component_profile_matches_networkx(g):
    h = to_nx(g)
    comps = list(nx.connected_components(h))
    prof = component_profile(g)
    assert prof.c == sum(len(c) > 1 for c in comps)
    assert prof.b == sum(nx.is_bipartite(h.subgraph(c)) for c in comps)
    assert is_connected(g) == (g.n > 0 and nx.is_connected(h))


def test_elimination_order_examples():
    assert is_elimination_order(path(3), (1, 2, 3))
    assert is_elimination_order(Graph(4, ((1, 2), (3, 4))), (1, 2, 3, 4))
    # a valid order of K_{1,3} keeps the centre among the last two positions
    s = star(4)
    for order in permutations(range(1, 5)):
        if is_elimination_order(s, order):
            assert 1 in order[2:]


@given(graphs(max_n=7))
def test_connected_elimination_order_is_valid(g):
    eo = connected_elimination_order(g)
    assert sorted(eo.order) == list(g.vertices)
    assert is_elimination_order(g, eo.order)
    h = eo.relabeled()
    assert is_elimination_order(h, tuple(h.vertices))


def test_unicyclic_profile_examples():
    assert unicyclic_profile(cycle(4)) == (True, [1, 2, 3, 4])
    assert unicyclic_profile(path(5)) == (False, None)
    ok, cyc = unicyclic_profile(Graph(4, ((1, 2), (2, 3), (1, 3), (1, 4))))
    assert ok and sorted(cyc) == [1, 2, 3]
    assert unicyclic_profile(disjoint(cycle(3), cycle(3)))[0] is False


@given(graphs(min_n=3, max_n=7))
def test_unicyclic_profile_matches_edge_count(g):
    ok, cyc = unicyclic_profile(g)
    assert ok == (is_connected(g) and g.m == g.n)
    if ok:
        assert len(cyc) >= 3
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
        order = unicyclic_labeling(g)
        assert is_elimination_order(g, order)
        assert set(order[g.n - len(cyc):]) == set(cyc)


def test_simple_and_induced_cycles_against_networkx():
    for g in (complete(5), disjoint(cycle(4), cycle(3)), Graph(5, ((1, 2), (2, 3), (3, 4), (4, 1), (1, 3), (4, 5)))):
        ours = {frozenset(c) for c in simple_cycles(g)}
        theirs = {frozenset(c) for c in nx.simple_cycles(to_nx(g))}
        assert ours == theirs
        chordless = {frozenset(c) for c in nx.chordless_cycles(to_nx(g)) if len(c) >= 3}
        assert {frozenset(c) for c in induced_cycles(g)} == chordless


def test_odd_cycle_condition_examples():
    assert odd_cycle_condition(path(6))
    assert odd_cycle_condition(cycle(6))
    assert not odd_cycle_condition(TWO_TRIANGLES)
    bowtie = Graph(5, ((1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)))
    assert odd_cycle_condition(bowtie)
    # one bridge joins two disjoint triangles
    bridged = Graph(6, TWO_TRIANGLES.edges + ((3, 4),))
    assert odd_cycle_condition(bridged)


@given(graphs(max_n=6))
def test_bipartite_graphs_satisfy_odd_cycle_condition(g):
    if nx.is_bipartite(to_nx(g)):
        assert odd_cycle_condition(g)


def test_koszul_examples():
    assert koszul_necessary_conditions(cycle(6)).violated == ("i",)
    joined = Graph(5, ((1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5), (2, 4)))
    assert "ii" not in koszul_necessary_conditions(joined).violated
    one_bridge = Graph(6, TWO_TRIANGLES.edges + ((3, 4),))
    chk = koszul_necessary_conditions(one_bridge)
    assert not chk.holds and chk.violated == ("iii",)
    assert koszul_necessary_conditions(path(5)).holds
    # two components with edges
    assert "c" in koszul_necessary_conditions(disjoint(path(2), path(2))).violated


def test_removable_off_cycle_vertex():
    g = Graph(4, ((1, 2), (2, 3), (1, 3), (1, 4)))
    assert removable_off_cycle_vertex(g, [1, 2, 3]) == 4
    g = Graph(5, ((1, 2), (2, 3), (1, 3), (3, 4), (4, 5)))
    assert removable_off_cycle_vertex(g, [1, 2, 3]) == 5
    with pytest.raises(GraphError):
        removable_off_cycle_vertex(cycle(4), [1, 2, 3, 4])


def test_maximum_matching_examples():
    assert maximum_matching(path(4)) == 2
    assert maximum_matching(cycle(5)) == 2
    assert maximum_matching(complete(4)) == 2


@given(graphs(max_n=7))
def test_maximum_matching_matches_networkx(g):
    assert maximum_matching(g) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))


@given(graphs(max_n=6), graphs(max_n=6))
def test_canonical_form_decides_isomorphism(g, h):
    same = g.n == h.n and nx.is_isomorphic(to_nx(g), to_nx(h))
    assert (canonical_form(g) == canonical_form(h)) == same


def test_isomorphism_class_counts():
    # numbers of unlabeled graphs on n vertices
    assert [len(isomorphism_classes(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_graph_text_round_trip():
    g = Graph(5, ((1, 2), (2, 5), (3, 4)))
    text = format_graph(g)
    assert text.splitlines()[0] == "n 5"
    assert parse_graph("# comment\n" + text) == g


@pytest.mark.parametrize("text", ["", "n x\n", "n 3\n1 4\n", "n 3\n1\n", "3\n1 2\n"])
def test_parse_graph_rejects_malformed(text):
    with pytest.raises(GraphError):
        parse_graph(text)
