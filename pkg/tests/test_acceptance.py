"""Acceptance criteria, each checked exactly (no tolerances).

Heavy sweeps go through the same suites the command line runs, and each
test also asserts the instance counts so that no criterion passes vacuously.
"""

import time
from math import factorial

from ceilab.depth import DepthEvaluator, depth_table, dstab
from ceilab.generators import build, cycle, leaf_labeled_trees, path
from ceilab.monomials import complementary_edge_ideal, ideal_power, is_max_ideal_associated
from ceilab.rees import is_quadratic, reduced_gb_lex
from ceilab.resolution import regularity_oracle
from ceilab.suites import Params, run_suite


def passed(verdict):
    assert verdict.status == "pass", (verdict.reason, verdict.failures)
    assert verdict.failure_count == 0
    assert verdict.instances >= verdict.min_instances > 0
    return dict(verdict.tables)


def test_criterion_01_path_depth_table():
    start = time.monotonic()
    for n in (5, 6, 7):
        ev = DepthEvaluator()
        table = depth_table(path(n), n + 1, ev)
        assert table == [(k, n - k - 1 if k <= n - 3 else 1) for k in range(1, n + 2)]
        assert dstab(path(n), ev).dstab == n - 2
    passed(run_suite("path", Params(nmax=7)))
    assert time.monotonic() - start < 60


def test_criterion_02_limit_depth():
    start = time.monotonic()
    tables = passed(run_suite("limit-depth", Params(nmax=5)))
    # 2^3 - 1 + 2^6 - 1 + 2^10 - 1 graphs with at least one edge
    assert sum(v for k, v in tables.items() if k.startswith("dstab=")) == 1093
    # the oracle confirmed every linear-quotient depth
    assert tables["crosschecked"] == tables["linear-quotients"] > 0
    assert tables.get("oracle", 0) > 0
    assert time.monotonic() - start < 15 * 60


def test_criterion_03_x_degree_bound():
    tables = passed(run_suite("degx", Params(nmax=6)))
    for tag in tables:
        kind, mx = tag.split(" max_x_degree=")
        assert int(mx) <= (1 if kind == "connected" else 2)
    assert sum(tables.values()) > 10000
    assert "disconnected max_x_degree=2" in tables


def test_criterion_04_tree_quadratic_gb():
    tables = passed(run_suite("tree-gb", Params(nmax=7)))
    assert all(tag.endswith("max_degree=2") for tag in tables)
    assert any(tag.startswith("n=7") for tag in tables)
    # every tree with every leaf labeling on at most seven vertices
    count = 0
    for n in range(3, 8):
        for g in leaf_labeled_trees(n):
            assert is_quadratic(reduced_gb_lex(g, labeling=tuple(g.vertices)))
            count += 1
    assert count == sum(factorial(n - 1) for n in range(3, 8))


def test_criterion_05_unicyclic_dichotomy():
    tables = passed(run_suite("unicyclic-gb", Params(nmax=7)))
    seen = {}
    for tag, cnt in tables.items():
        d, q = tag.split()
        seen[(int(d[2:]), q == "quadratic=True")] = cnt
    for d in (3, 4):
        assert seen.get((d, True), 0) > 0 and (d, False) not in seen
    for d in (5, 6, 7):
        assert seen.get((d, False), 0) > 0 and (d, True) not in seen


def test_criterion_06_regularity_bound():
    tables = passed(run_suite("reg-bound", Params(nmax=6)))
    for tag in tables:
        family, n, reg = tag.split()
        assert int(reg[4:]) <= int(n[2:])
    assert any(t.startswith("tree n=6") for t in tables)
    assert any(t.startswith("unicyclic n=6") for t in tables)


def test_criterion_07_analytic_spread():
    start = time.monotonic()
    tables = passed(run_suite("spread", Params(nmax=8)))
    # unlabeled graphs on 3..8 vertices, minus the edgeless one for each n
    assert sum(tables.values()) == (4 + 11 + 34 + 156 + 1044 + 12346) - 6
    assert time.monotonic() - start < 120


def test_criterion_08_rank_lemma():
    tables = passed(run_suite("rank-lemma", Params(seed=0)))
    assert tables["holds"] >= 1000
    assert tables["rejected"] >= 1000


def test_criterion_09_odd_cycle_associated_prime():
    passed(run_suite("odd-ass", Params(nmax=7)))
    for s in (2, 3):
        g = cycle(2 * s + 1)
        ok, witness = is_max_ideal_associated(ideal_power(complementary_edge_ideal(g), s))
        assert ok and witness == (s - 1,) * (2 * s + 1)
        ev = DepthEvaluator()
        assert [ev(g, k).depth for k in range(s, s + 3)] == [0, 0, 0]


def test_criterion_10_power_regularity_witness():
    passed(run_suite("reg-powers", Params()))
    for spec in ("path3+path3", "path4+path3"):
        g = build(spec)
        base = complementary_edge_ideal(g)
        diffs = [regularity_oracle(ideal_power(base, k)) - (g.n - 2) * k for k in (1, 2, 3)]
        assert diffs == [1, 1, 1]


def test_criterion_11_oracle_coherence():
    tables = passed(run_suite("coherence", Params(nmax=5)))
    assert tables["linear-quotients"] >= 500
