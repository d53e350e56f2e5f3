import pytest

from ceilab.errors import GraphError
from ceilab.generators import (
    all_labeled_graphs,
    build,
    erdos,
    leaf_labeled_trees,
    load_graph,
    path,
    prufer_decode,
    prufer_trees,
    random_tree,
    random_unicyclic,
    star,
    unicyclic_labeled,
)
from ceilab.graphs import (
    canonical_form,
    format_graph,
    is_connected,
    is_elimination_order,
    unicyclic_profile,
)


def test_builders():
    assert path(5).edges == ((1, 2), (2, 3), (3, 4), (4, 5))
    assert build("path5") == build("path:5") == path(5)
    assert star(4).edges == ((1, 2), (1, 3), (1, 4))
    assert build("complete:4").m == 6
    u = build("path3+cycle3")
    assert u.n == 6 and u.edges == ((1, 2), (2, 3), (4, 5), (4, 6), (5, 6))


def test_unicyclic_builder():
    g = random_unicyclic(6, 4, 7)
    ok, cyc = unicyclic_profile(g)
    assert is_connected(g) and ok and len(cyc) == 4
    assert build("unicyclic:6:4:7") == g


def test_seeded_builders_are_deterministic():
    assert erdos(7, 0.5, 3) == erdos(7, 0.5, 3)
    assert random_tree(8, 11) == random_tree(8, 11)
    assert random_tree(8, 11).m == 7 and is_connected(random_tree(8, 11))


@pytest.mark.parametrize("spec", ["bogus", "path:x", "cycle:2", "unicyclic:5:6:1", "erdos:5:2:1", "path:"])
def test_bad_specs(spec):
    with pytest.raises(GraphError):
        build(spec)


def test_exhaustive_enumeration_counts():
    assert sum(1 for _ in all_labeled_graphs(4)) == 64
    assert sum(1 for _ in all_labeled_graphs(4, min_edges=1)) == 63
    assert all(min(g.degree(v) for v in g.vertices) >= 1 for g in all_labeled_graphs(4, min_degree=1))


def test_prufer_enumeration_gives_every_tree_once():
    for n in range(2, 7):
        trees = list(prufer_trees(n))
        assert len(trees) == len(set(trees)) == n ** (n - 2) if n > 1 else 1
        assert all(t.m == n - 1 and is_connected(t) for t in trees)
    with pytest.raises(GraphError):
        prufer_decode([1], 4)


def test_leaf_labeled_trees():
    for n in range(2, 7):
        trees = list(leaf_labeled_trees(n))
        assert len(set(trees)) == len(trees) == __import__("math").factorial(n - 1)
        assert all(is_elimination_order(t, tuple(t.vertices)) for t in trees)
    # every tree shape occurs
    shapes = {canonical_form(t) for t in leaf_labeled_trees(6)}
    assert len(shapes) == 6


def test_unicyclic_labeled_family():
    from math import factorial

    for n in range(3, 7):
        for d in range(3, n + 1):
            gs = list(unicyclic_labeled(n, d))
            assert len(gs) == factorial(n - 1) // factorial(d - 1)
            for g in gs:
                ok, cyc = unicyclic_profile(g)
                assert ok and sorted(cyc) == list(range(n - d + 1, n + 1))


def test_load_graph_from_file(tmp_path):
    f = tmp_path / "c3.txt"
    f.write_text(format_graph(build("cycle3")))
    assert load_graph(str(f)) == build("cycle3")
    assert load_graph("star4") == star(4)
