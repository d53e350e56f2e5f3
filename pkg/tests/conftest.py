from itertools import combinations

from hypothesis import settings, strategies as st

from ceilab.graphs import Graph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=7, min_edges=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min(min_edges, len(pairs)))
                  if pairs else st.just([]))
    return Graph(n, tuple(chosen))


def to_nx(g):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion, whatever the verbosity."""
    reports = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            if rep.when == "call" and "test_acceptance.py::test_criterion_" in rep.nodeid:
                reports.append(rep)
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for rep in sorted(reports, key=lambda r: r.nodeid):
        name = rep.nodeid.split("::test_criterion_", 1)[1]
        num, _, title = name.partition("_")
        verdict = "PASS" if rep.passed else "FAIL"
        terminalreporter.write_line(f"criterion {int(num):>2} {title.replace('_', ' '):<28} {verdict}")
