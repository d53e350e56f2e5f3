import pytest
from hypothesis import given, settings

from ceilab.depth import (
    DepthEvaluator,
    depth_disjoint_union,
    depth_of_power,
    depth_table,
    dstab,
    dstab_bound,
)
from ceilab.errors import GraphError, IdealError
from ceilab.generators import build, cycle, disjoint, path, star
from ceilab.graphs import Graph, component_profile
from ceilab.monomials import complementary_edge_ideal, ideal_power
from ceilab.resolution import depth_oracle

from conftest import graphs


def oracle_table(g, kmax):
    base = complementary_edge_ideal(g)
    return {k: depth_oracle(ideal_power(base, k)) for k in range(1, kmax + 1)}


def test_path_tables():
    for n in (5, 6, 7):
        assert depth_table(path(n), n - 1) == [(k, max(n - k - 1, 1)) for k in range(1, n)]


def test_dstab_examples():
    st = dstab(path(5))
    assert (st.dstab, st.limit) == (3, 1)
    assert [d for _, d in st.table] == [3, 2, 1, 1]
    st = dstab(cycle(3))
    assert (st.dstab, st.limit) == (1, 0)
    assert dstab(cycle(4)).limit == 1


def test_dstab_preconditions():
    with pytest.raises(GraphError):
        dstab(Graph(2, ((1, 2),)))
    with pytest.raises(GraphError):
        dstab(Graph(4))


def test_oracle_route_and_crosscheck_agree():
    g = star(5)
    auto = DepthEvaluator(crosscheck=True)
    forced = DepthEvaluator(prefer="oracle")
    for k in range(1, 4):
        v = auto(g, k)
        assert v.method == "linear-quotients" and v.oracle_depth == v.depth
        assert forced(g, k) == (v.depth, "oracle", None)
    assert auto.counts["crosschecked"] == 3


def test_oracle_fallback_is_used_without_linear_quotients():
    # two disjoint edges: (x1 x2, x3 x4) after relabeling, no linear quotients
    ev = DepthEvaluator()
    g = Graph(4, ((1, 4), (2, 3)))
    v = ev(g, 1)
    assert v.method == "oracle"
    assert v.depth == depth_oracle(complementary_edge_ideal(g)) == 2
    assert ev.counts["oracle"] == 1


@settings(max_examples=40)
@given(graphs(min_n=3, max_n=5, min_edges=1))
def test_evaluator_matches_oracle(g):
    ev = DepthEvaluator(crosscheck=True)
    expected = oracle_table(g, 2)
    assert {k: ev(g, k).depth for k in (1, 2)} == expected


@settings(max_examples=40)
@given(graphs(min_n=3, max_n=5, min_edges=1))
def test_dstab_limit_is_number_of_bipartite_components(g):
    st = dstab(g, DepthEvaluator(share_isomorphic=True))
    prof = component_profile(g)
    assert st.limit == prof.b
    assert st.dstab <= dstab_bound(g) == g.n - prof.c - 1


@pytest.mark.parametrize("spec1,spec2", [
    ("path3", "path3"), ("path4", "path3"), ("cycle3", "path3"), ("path2", "path3"),
    ("path2", "path2"), ("cycle4", "path2"), ("star4", "cycle3"),
])
def test_disjoint_union_formula_against_oracle(spec1, spec2):
    g1, g2 = build(spec1), build(spec2)
    g = disjoint(g1, g2)
    kmax = 3 if g.n <= 6 else 2
    t1 = None if g1.n == 2 else oracle_table(g1, kmax)
    t2 = None if g2.n == 2 else oracle_table(g2, kmax)
    expected = oracle_table(g, kmax)
    for k in range(1, kmax + 1):
        assert depth_disjoint_union(t1, t2, g1.n, g2.n, k) == expected[k]


def test_disjoint_union_of_two_paths_at_k1():
    t = {1: 1, 2: 1}
    assert depth_disjoint_union(t, t, 3, 3, 1) == 4
    assert depth_oracle(complementary_edge_ideal(build("path3+path3"))) == 4


def test_disjoint_union_large_k_reaches_sum_of_limits():
    # each factor stabilizes at its own b, the union at b(G1) + b(G2)
    t1 = {k: max(5 - k - 1, 1) for k in range(1, 9)}
    t2 = {k: 0 for k in range(1, 9)}
    assert depth_disjoint_union(t1, t2, 5, 3, 8) == 1 + 0


def test_disjoint_union_rejects_bad_input():
    with pytest.raises(IdealError):
        depth_disjoint_union({1: 1}, {1: 1}, 3, 3, 0)
    with pytest.raises(IdealError):
        depth_disjoint_union({1: 1}, {1: 1}, 3, 3, 2)


def test_depth_of_power_default_evaluator():
    assert depth_of_power(path(6), 2) == 3
    assert depth_of_power(cycle(5), 2) == 0
