"""Graph builders and enumerators used by the command line and the suites.

Random builders take an explicit seed and use a private ``random.Random``,
so the same arguments always give the same graph.
"""

from __future__ import annotations

import os
import random
import re
from itertools import combinations, product
from typing import Iterator, List, Sequence

from .errors import GraphError
from .graphs import Graph, isomorphism_classes, parse_graph

__all__ = [
    "path",
    "cycle",
    "star",
    "complete",
    "random_tree",
    "random_unicyclic",
    "disjoint",
    "erdos",
    "all_labeled_graphs",
    "prufer_decode",
    "prufer_trees",
    "leaf_labeled_trees",
    "unicyclic_labeled",
    "isomorphism_classes",
    "build",
    "load_graph",
]


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("a path needs at least one vertex")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least three vertices")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 1."""
    if n < 2:
        raise GraphError("a star needs at least two vertices")
    return Graph(n, tuple((1, j) for j in range(2, n + 1)))


def complete(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(1, n + 1), 2)))


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    """The labeled tree on [n] with Prüfer sequence ``seq`` (length n - 2)."""
    if n < 2 or len(seq) != n - 2:
        raise GraphError(f"a Prüfer sequence for {n} vertices has length {n - 2}")
    degree = [1] * (n + 1)
    for v in seq:
        if not 1 <= v <= n:
            raise GraphError(f"Prüfer entry {v} outside 1..{n}")
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = next(u for u in range(1, n + 1) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    last = [u for u in range(1, n + 1) if degree[u] == 1]
    edges.append((last[0], last[1]))
    return Graph(n, tuple(edges))


def prufer_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees on [n]."""
    if n == 1:
        yield Graph(1)
        return
    for seq in product(range(1, n + 1), repeat=n - 2):
        yield prufer_decode(seq, n)


def random_tree(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    if n <= 2:
        return path(n)
    return prufer_decode([rng.randint(1, n) for _ in range(n - 2)], n)


def random_unicyclic(n: int, d: int, seed: int) -> Graph:
    """Connected graph on n vertices whose only cycle has length d, randomly labeled."""
    if not 3 <= d <= n:
        raise GraphError(f"cycle length must satisfy 3 <= d <= n, got d={d}, n={n}")
    rng = random.Random(seed)
    edges = [(i, i + 1) for i in range(1, d)] + [(1, d)]
    for v in range(d + 1, n + 1):
        edges.append((rng.randint(1, v - 1), v))
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return Graph(n, tuple((perm[i - 1], perm[j - 1]) for i, j in edges))


def disjoint(g1: Graph, g2: Graph) -> Graph:
    """G1 on 1..n followed by G2 shifted to n+1..n+m."""
    s = g1.n
    return Graph(g1.n + g2.n, g1.edges + tuple((i + s, j + s) for i, j in g2.edges))


def erdos(n: int, p: float, seed: int) -> Graph:
    if not 0 <= p <= 1:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    return Graph(n, tuple(e for e in combinations(range(1, n + 1), 2) if rng.random() < p))


def all_labeled_graphs(n: int, min_degree: int = 0, min_edges: int = 0) -> Iterator[Graph]:
    """Every graph on the labeled vertex set [n], by edge-subset iteration."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        edges = tuple(p for i, p in enumerate(pairs) if mask >> i & 1)
        if len(edges) < min_edges:
            continue
        g = Graph(n, edges)
        if min_degree and any(g.degree(v) < min_degree for v in g.vertices):
            continue
        yield g


def _parent_graphs(n: int, top_edges: List[tuple], free: int) -> Iterator[Graph]:
    # vertex i <= free gets exactly one neighbour among i+1..n
    for parents in product(*(range(i + 1, n + 1) for i in range(1, free + 1))):
        yield Graph(n, tuple(top_edges) + tuple((i + 1, p) for i, p in enumerate(parents)))


def leaf_labeled_trees(n: int) -> Iterator[Graph]:
    """Trees on [n] in which every vertex r < n is a leaf of G[r..n].

    Each labeled tree together with such a labeling is one of these
    (n - 1)! graphs after relabeling.
    """
    if n < 2:
        raise GraphError("need at least two vertices")
    yield from _parent_graphs(n, [], n - 1)


def unicyclic_labeled(n: int, d: int) -> Iterator[Graph]:
    """Connected unicyclic graphs on [n] carrying the unicyclic lex labeling.

    Vertices 1..n-d are leaves of G[i..n] and the cycle is
    n-d+1, ..., n in this order.  Every connected unicyclic graph with cycle
    length d, with every such labeling, appears here once.
    """
    if not 3 <= d <= n:
        raise GraphError(f"cycle length must satisfy 3 <= d <= n, got d={d}, n={n}")
    c = list(range(n - d + 1, n + 1))
    ring = [(c[i], c[i + 1]) for i in range(d - 1)] + [(c[0], c[-1])]
    yield from _parent_graphs(n, ring, n - d)


# --------------------------------------------------------------------------
# textual graph specifications

_NAMED = {"path": path, "cycle": cycle, "star": star, "complete": complete}
_SHORT = re.compile(r"^(path|cycle|star|complete|p|c|k)(\d+)$")


def build(spec: str) -> Graph:
    """Build a graph from a short specification.

    ``path5`` / ``path:5``, ``cycle:4``, ``star:4``, ``complete:5``,
    ``tree-random:7:SEED``, ``unicyclic:6:4:SEED``, ``erdos:6:0.5:SEED``;
    ``a+b`` is the disjoint union of ``a`` and ``b``.
    """
    spec = spec.strip()
    if "+" in spec:
        parts = [build(p) for p in spec.split("+")]
        out = parts[0]
        for p in parts[1:]:
            out = disjoint(out, p)
        return out
    m = _SHORT.match(spec)
    if m:
        name = {"p": "path", "c": "cycle", "k": "complete"}.get(m.group(1), m.group(1))
        return _NAMED[name](int(m.group(2)))
    name, _, rest = spec.partition(":")
    args = rest.split(":") if rest else []
    try:
        if name in _NAMED and len(args) == 1:
            return _NAMED[name](int(args[0]))
        if name == "tree-random" and len(args) == 2:
            return random_tree(int(args[0]), int(args[1]))
        if name == "unicyclic" and len(args) == 3:
            return random_unicyclic(int(args[0]), int(args[1]), int(args[2]))
        if name == "erdos" and len(args) == 3:
            return erdos(int(args[0]), float(args[1]), int(args[2]))
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"bad arguments in graph specification {spec!r}: {exc}")
    raise GraphError(f"unrecognised graph specification {spec!r}")


def load_graph(arg: str) -> Graph:
    """A graph file in the text format if ``arg`` names a file, else a :func:`build` description."""
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    return build(arg)
