from itertools import product

import pytest
from hypothesis import given, strategies as st

from ceilab.errors import IdealError
from ceilab.generators import build, complete, cycle, path
from ceilab.graphs import Graph
from ceilab.monomials import (
    MonomialIdeal,
    colon_by_monomial,
    complementary_edge_ideal,
    depth_via_linear_quotients,
    divides,
    edge_ideal,
    format_ideal,
    ideal_power,
    ideal_product,
    is_max_ideal_associated,
    linear_quotients_sets,
    minimalize,
    parse_ideal,
    set_union_of_generators,
)

from conftest import graphs


def x(n, *idx):
    """Monomial x_idx[0] x_idx[1] ... in n variables (repeats allowed)."""
    out = [0] * n
    for i in idx:
        out[i - 1] += 1
    return tuple(out)


monomials3 = st.tuples(*(st.integers(0, 3) for _ in range(3)))
ideals3 = st.lists(monomials3, min_size=1, max_size=5).map(lambda g: MonomialIdeal(3, tuple(g)))


def test_complementary_edge_ideal_examples():
    assert set(complementary_edge_ideal(path(3)).gens) == {x(3, 1), x(3, 3)}
    assert set(complementary_edge_ideal(cycle(3)).gens) == {x(3, 1), x(3, 2), x(3, 3)}
    assert set(complementary_edge_ideal(path(4)).gens) == {x(4, 3, 4), x(4, 1, 4), x(4, 1, 2)}


def test_edge_ideal_examples():
    assert set(edge_ideal(path(3)).gens) == {x(3, 1, 2), x(3, 2, 3)}
    assert len(edge_ideal(cycle(3))) == 3
    assert edge_ideal(Graph(2, ((1, 2),))).gens == (x(2, 1, 2),)


def test_edgeless_graph_has_no_ideal():
    with pytest.raises(IdealError):
        complementary_edge_ideal(Graph(3))


@given(graphs(min_n=2, max_n=7, min_edges=1))
def test_complementary_generators_are_edge_complements(g):
    ic = complementary_edge_ideal(g)
    assert len(ic) == g.m
    assert ic.is_equigenerated and ic.generator_degrees[0] == g.n - 2
    full = (1,) * g.n
    assert sorted(tuple(1 - a for a in u) for u in ic.gens) == sorted(edge_ideal(g).gens)
    assert all(divides(u, full) for u in ic.gens)


def test_generators_are_lex_decreasing_and_minimal():
    ideal = MonomialIdeal(3, (x(3, 3), x(3, 1, 3), x(3, 1), x(3, 2, 2)))
    assert ideal.gens == (x(3, 1), x(3, 2, 2), x(3, 3))


def test_ideal_power_examples():
    assert set(ideal_power(MonomialIdeal(3, (x(3, 1), x(3, 3))), 2).gens) == {x(3, 1, 1), x(3, 1, 3), x(3, 3, 3)}
    sq = ideal_power(complementary_edge_ideal(cycle(3)), 2)
    assert len(sq) == 6 and sq.generator_degrees == [2] * 6
    assert len(ideal_power(complementary_edge_ideal(path(4)), 2)) == 6
    with pytest.raises(IdealError):
        ideal_power(sq, 0)


@given(ideals3, ideals3)
def test_product_is_minimalized_brute_force(a, b):
    prod = ideal_product(a, b)
    raw = [tuple(p + q for p, q in zip(u, v)) for u in a.gens for v in b.gens]
    # membership agrees on every monomial in a box
    for m in product(range(7), repeat=3):
        assert (m in prod) == any(divides(r, m) for r in raw)
    assert set(minimalize(raw)) == set(prod.gens)


def test_colon_examples():
    ideal = MonomialIdeal(3, (x(3, 1, 2), x(3, 2, 3)))
    assert set(colon_by_monomial(ideal, x(3, 2)).gens) == {x(3, 1), x(3, 3)}
    assert colon_by_monomial(ideal, (0, 0, 0)).gens == ideal.gens
    c5 = ideal_power(complementary_edge_ideal(cycle(5)), 2)
    assert set(colon_by_monomial(c5, (1,) * 5).gens) == {x(5, i) for i in range(1, 6)}


@given(ideals3, monomials3)
def test_colon_membership(ideal, u):
    col = colon_by_monomial(ideal, u)
    for m in product(range(5), repeat=3):
        assert (m in col) == (tuple(a + b for a, b in zip(m, u)) in ideal)


def test_linear_quotients_examples():
    qs = linear_quotients_sets(MonomialIdeal(3, (x(3, 1), x(3, 3))))
    assert qs.has_lq and qs.sets == (frozenset(), frozenset({1}))
    assert not linear_quotients_sets(MonomialIdeal(4, (x(4, 1, 2), x(4, 3, 4)))).has_lq
    for n in range(3, 8):
        base = complementary_edge_ideal(path(n))
        for k in range(1, 4):
            assert linear_quotients_sets(ideal_power(base, k)).has_lq


def test_depth_via_linear_quotients_examples():
    assert depth_via_linear_quotients(complementary_edge_ideal(path(3))) == 1
    assert depth_via_linear_quotients(complementary_edge_ideal(cycle(3))) == 0
    assert depth_via_linear_quotients(complementary_edge_ideal(path(5))) == 3
    with pytest.raises(IdealError):
        depth_via_linear_quotients(MonomialIdeal(4, (x(4, 1, 2), x(4, 3, 4))))


def test_set_union_examples():
    assert set_union_of_generators(complementary_edge_ideal(path(3))) == {1}
    assert set_union_of_generators(complementary_edge_ideal(path(5))) == {1, 2, 3}
    assert set_union_of_generators(complementary_edge_ideal(cycle(4))) == {1, 2}


def _max_ideal_associated_brute(ideal):
    top = ideal.lcm()
    for u in product(*(range(a + 1) for a in top)):
        if u not in ideal and all(tuple(e + (t == i) for t, e in enumerate(u)) in ideal
                                  for i in range(ideal.ring_size)):
            return True
    return False


def test_max_ideal_associated_examples():
    assert is_max_ideal_associated(MonomialIdeal(3, (x(3, 1), x(3, 2), x(3, 3)))) == (True, (0, 0, 0))
    assert is_max_ideal_associated(MonomialIdeal(3, (x(3, 1), x(3, 3)))) == (False, None)
    ok, w = is_max_ideal_associated(ideal_power(complementary_edge_ideal(cycle(5)), 2))
    assert ok and w == (1,) * 5


@given(ideals3)
def test_max_ideal_associated_matches_brute_force(ideal):
    ok, w = is_max_ideal_associated(ideal)
    assert ok == _max_ideal_associated_brute(ideal)
    if ok:
        assert w not in ideal


def test_ideal_text_round_trip():
    ideal = ideal_power(complementary_edge_ideal(build("path3+path2")), 2)
    assert parse_ideal(format_ideal(ideal)).gens == ideal.gens
    with pytest.raises(IdealError):
        MonomialIdeal(2, ((1, 0, 0),))
    with pytest.raises(IdealError):
        MonomialIdeal(2, ((-1, 0),))


def test_complete_graph_gives_squarefree_veronese():
    ic = complementary_edge_ideal(complete(5))
    assert len(ic) == 10 and all(max(u) == 1 for u in ic.gens)
