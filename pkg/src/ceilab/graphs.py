"""Simple graphs on the vertex set [n] and the structural predicates used by ceilab.

Vertices are always the integers 1..n.  Edges are stored as sorted pairs
``(i, j)`` with ``i < j`` and the edge tuple itself is sorted, so two
``Graph`` objects with the same edge set compare (and hash) equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from .errors import GraphError

__all__ = [
    "Graph",
    "ComponentProfile",
    "EliminationOrder",
    "KoszulCheck",
    "component_profile",
    "canonical_form",
    "isomorphism_classes",
    "connected_elimination_order",
    "is_elimination_order",
    "unicyclic_profile",
    "unicyclic_labeling",
    "simple_cycles",
    "induced_cycles",
    "odd_cycle_condition",
    "odd_cycle_violation",
    "koszul_necessary_conditions",
    "removable_off_cycle_vertex",
    "maximum_matching",
    "parse_graph",
    "format_graph",
]


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on ``1..n``."""

    n: int
    edges: tuple = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        canon = set()
        for e in self.edges:
            if len(e) != 2:
                raise GraphError(f"edge {e!r} is not a pair")
            i, j = int(e[0]), int(e[1])
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise GraphError(f"edge {e!r} has an endpoint outside 1..{self.n}")
            pair = (i, j) if i < j else (j, i)
            if pair in canon:
                raise GraphError(f"multi-edge {pair}")
            canon.add(pair)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adj(self) -> dict:
        nbrs = {v: set() for v in self.vertices}
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return {v: frozenset(s) for v, s in nbrs.items()}

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Return the graph in which vertex ``order[r]`` receives the label ``r + 1``."""
        if sorted(order) != list(self.vertices):
            raise GraphError(f"{order!r} is not a permutation of 1..{self.n}")
        new = {old: r + 1 for r, old in enumerate(order)}
        return Graph(self.n, tuple((new[i], new[j]) for i, j in self.edges))

    def induced_edges(self, verts: Iterable[int]) -> list:
        vs = set(verts)
        return [e for e in self.edges if e[0] in vs and e[1] in vs]

    def __str__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


# --------------------------------------------------------------------------
# connectivity helpers


def _reachable(g: Graph, start: int, allowed: set) -> set:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w in allowed and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _is_connected_on(g: Graph, verts) -> bool:
    vs = set(verts)
    if len(vs) <= 1:
        return True
    return len(_reachable(g, next(iter(vs)), vs)) == len(vs)


def is_connected(g: Graph) -> bool:
    return _is_connected_on(g, g.vertices)


class ComponentProfile(NamedTuple):
    components: tuple  # tuple of sorted vertex tuples, ordered by smallest vertex
    c: int  # components with at least two vertices
    b: int  # bipartite components, isolated vertices included
    bipartitions: tuple  # per component: (V1, V2) or None when not bipartite


def _two_colouring(g: Graph, comp) -> Optional[tuple]:
    colour = {comp[0]: 0}
    stack = [comp[0]]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w not in colour:
                colour[w] = 1 - colour[v]
                stack.append(w)
            elif colour[w] == colour[v]:
                return None
    side0 = tuple(sorted(v for v in comp if colour[v] == 0))
    side1 = tuple(sorted(v for v in comp if colour[v] == 1))
    return side0, side1


def component_profile(g: Graph) -> ComponentProfile:
    """Connected components, c(G), b(G) and a 2-colouring of every bipartite component."""
    left = set(g.vertices)
    comps = []
    while left:
        v = min(left)
        comp = _reachable(g, v, left)
        left -= comp
        comps.append(tuple(sorted(comp)))
    splits = tuple(_two_colouring(g, comp) for comp in comps)
    c = sum(1 for comp in comps if len(comp) >= 2)
    b = sum(1 for s in splits if s is not None)
    return ComponentProfile(tuple(comps), c, b, splits)


# --------------------------------------------------------------------------
# vertex labelings


@dataclass(frozen=True)
class EliminationOrder:
    """A vertex order in which every component stays connected as its prefix is deleted.

    ``order[r]`` is the vertex that receives label ``r + 1`` after relabeling.
    """

    order: tuple
    graph: Graph = field(repr=False, compare=False, default=None)

    def relabeled(self) -> Graph:
        return self.graph.relabel(self.order)


def is_elimination_order(g: Graph, order: Sequence[int]) -> bool:
    """Check per-component suffix connectivity of ``order``."""
    if sorted(order) != list(g.vertices):
        return False
    comp_of = {}
    for idx, comp in enumerate(component_profile(g).components):
        for v in comp:
            comp_of[v] = idx
    for r in range(len(order)):
        suffix = order[r:]
        by_comp = {}
        for v in suffix:
            by_comp.setdefault(comp_of[v], []).append(v)
        if not all(_is_connected_on(g, vs) for vs in by_comp.values()):
            return False
    return True


def _peel_order(g: Graph, comp) -> list:
    # repeatedly delete the smallest vertex whose removal keeps the rest connected;
    # a leaf of any spanning tree qualifies, so one always exists
    rest = set(comp)
    out = []
    while rest:
        for v in sorted(rest):
            if _is_connected_on(g, rest - {v}):
                out.append(v)
                rest.discard(v)
                break
    return out


def connected_elimination_order(g: Graph) -> EliminationOrder:
    """Labeling in which G[r..n] restricted to each component is connected.

    Components are listed consecutively (ordered by their smallest vertex).
    """
    order = []
    for comp in component_profile(g).components:
        order.extend(_peel_order(g, comp))
    if not is_elimination_order(g, order):  # pragma: no cover - self validation
        raise GraphError("internal error: produced an invalid elimination order")
    return EliminationOrder(tuple(order), g)


def unicyclic_profile(g: Graph) -> tuple:
    """Return ``(is_unicyclic, cycle)`` for a connected graph.

    The cycle is found by stripping leaves until only the cycle is left and is
    returned as a vertex list in cyclic order, starting at its smallest vertex
    and continuing towards the smaller of the two neighbours.
    """
    if g.n == 0 or not is_connected(g) or g.m != g.n:
        return False, None
    deg = {v: g.degree(v) for v in g.vertices}
    alive = set(g.vertices)
    leaves = [v for v in alive if deg[v] == 1]
    while leaves:
        v = leaves.pop()
        alive.discard(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1:
                    leaves.append(w)
    return True, _cycle_walk(g, alive)


def _cycle_walk(g: Graph, verts: set) -> list:
    start = min(verts)
    nxt = min(w for w in g.adj[start] if w in verts)
    cyc = [start]
    prev, cur = start, nxt
    while cur != start:
        cyc.append(cur)
        prev, cur = cur, next(w for w in g.adj[cur] if w in verts and w != prev)
    return cyc


def unicyclic_labeling(g: Graph) -> tuple:
    """Vertex order for the unicyclic lex order.

    Off-cycle vertices come first, each one a leaf of the graph induced on
    itself and the later vertices; the cycle vertices take the last ``d``
    labels consecutively along the cycle.  Returns a tuple usable with
    :meth:`Graph.relabel`.
    """
    ok, cycle = unicyclic_profile(g)
    if not ok:
        raise GraphError("graph is not connected unicyclic")
    on_cycle = set(cycle)
    rest = set(g.vertices)
    order = []
    while rest - on_cycle:
        leaf = min(v for v in rest - on_cycle if len(g.adj[v] & rest) == 1)
        order.append(leaf)
        rest.discard(leaf)
    return tuple(order + cycle)


# --------------------------------------------------------------------------
# cycles


def simple_cycles(g: Graph) -> Iterator[tuple]:
    """All simple cycles (length >= 3), each once.

    A cycle is emitted as its vertex sequence starting at its smallest vertex,
    with the second vertex smaller than the last one.
    """
    for s in g.vertices:
        path = [s]
        on_path = {s}

        def extend(v):
            for w in sorted(g.adj[v]):
                if w < s:
                    continue
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        yield tuple(path)
                elif w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    yield from extend(w)
                    path.pop()
                    on_path.discard(w)

        yield from extend(s)


def _is_chordless(g: Graph, cyc: Sequence[int]) -> bool:
    k = len(cyc)
    for a in range(k):
        for b in range(a + 2, k):
            if a == 0 and b == k - 1:
                continue
            if g.has_edge(cyc[a], cyc[b]):
                return False
    return True


def induced_cycles(g: Graph) -> Iterator[tuple]:
    """Chordless cycles; these are the "minimal" cycles in the sense used here."""
    return (c for c in simple_cycles(g) if _is_chordless(g, c))


def _touch(g: Graph, c1, c2) -> bool:
    s1, s2 = set(c1), set(c2)
    if s1 & s2:
        return True
    return any(g.has_edge(i, j) for i in s1 for j in s2)


def odd_cycle_condition(g: Graph) -> bool:
    """True iff any two odd cycles share a vertex or are joined by an edge.

    Only chordless odd cycles are compared: every odd cycle contains a
    chordless odd cycle on a subset of its vertices, so a violating pair of
    arbitrary odd cycles yields a violating pair of chordless ones.
    """
    return odd_cycle_violation(g) is None


def odd_cycle_violation(g: Graph) -> Optional[tuple]:
    """Two chordless odd cycles that neither meet nor are joined by an edge, or None."""
    odd = [c for c in induced_cycles(g) if len(c) % 2 == 1]
    for a, b in combinations(odd, 2):
        if not _touch(g, a, b):
            return a, b
    return None


class KoszulCheck(NamedTuple):
    holds: bool
    violated: tuple  # sorted condition ids among "c", "i", "ii", "iii"
    witnesses: tuple  # (condition id, cycles involved) per violation


def _chord_kinds(g: Graph, cyc: Sequence[int]):
    k = len(cyc)
    even, odd = [], []
    for a, b in combinations(range(k), 2):
        if b - a in (1, k - 1):
            continue
        if g.has_edge(cyc[a], cyc[b]):
            # j - i odd splits C into two even cycles
            (even if (b - a) % 2 == 1 else odd).append((a, b))
    return even, odd


def _cross(c1, c2) -> bool:
    (i, j), (k, l) = c1, c2
    return i < k < j < l or k < i < l < j


def _cycle_edges(cyc):
    k = len(cyc)
    return {(min(cyc[t], cyc[(t + 1) % k]), max(cyc[t], cyc[(t + 1) % k])) for t in range(k)}


def koszul_necessary_conditions(g: Graph) -> KoszulCheck:
    """Evaluate the necessary conditions for Koszulness of the Rees algebra.

    ``"c"``: exactly one component with an edge.
    ``"i"``: every even cycle of length >= 6 has an even-chord, or three
    odd-chords two of which cross.  A chord ``{v_a, v_b}`` (a < b) is even
    when ``b - a`` is odd.
    ``"ii"``: two chordless odd cycles meeting in exactly one vertex are joined
    by an edge outside both cycles.
    ``"iii"``: two vertex-disjoint chordless odd cycles are joined by at least
    two edges.
    """
    witnesses = []
    if component_profile(g).c != 1:
        witnesses.append(("c", ()))
    for cyc in simple_cycles(g):
        if len(cyc) < 6 or len(cyc) % 2:
            continue
        even, odd = _chord_kinds(g, cyc)
        if even:
            continue
        crossing = any(_cross(a, b) for a, b in combinations(odd, 2))
        if not (len(odd) >= 3 and crossing):
            witnesses.append(("i", (cyc,)))
    odd_cycles = [c for c in induced_cycles(g) if len(c) % 2 == 1]
    for c1, c2 in combinations(odd_cycles, 2):
        common = set(c1) & set(c2)
        if len(common) == 1:
            used = _cycle_edges(c1) | _cycle_edges(c2)
            ok = any(
                g.has_edge(i, j) and (min(i, j), max(i, j)) not in used
                for i in c1
                for j in c2
                if i != j
            )
            if not ok:
                witnesses.append(("ii", (c1, c2)))
        elif not common:
            bridges = sum(1 for i in c1 for j in c2 if g.has_edge(i, j))
            if bridges < 2:
                witnesses.append(("iii", (c1, c2)))
    ids = tuple(sorted({w[0] for w in witnesses}, key=["c", "i", "ii", "iii"].index))
    return KoszulCheck(not witnesses, ids, tuple(witnesses))


def removable_off_cycle_vertex(g: Graph, cycle: Sequence[int]) -> int:
    """A vertex outside ``cycle`` whose deletion leaves ``g`` connected.

    Uses a BFS spanning tree: an off-cycle leaf works if there is one,
    otherwise any off-cycle vertex does.
    """
    if not is_connected(g):
        raise GraphError("graph must be connected")
    cyc = set(cycle)
    if len(cyc) != len(cycle) or len(cycle) < 3:
        raise GraphError(f"{cycle!r} is not a cycle")
    k = len(cycle)
    if any(not g.has_edge(cycle[t], cycle[(t + 1) % k]) for t in range(k)):
        raise GraphError(f"{cycle!r} is not a cycle of the graph")
    if g.n <= len(cyc):
        raise GraphError("no vertex off the cycle")
    root = cycle[0]
    parent = {root: None}
    queue = [root]
    for v in queue:
        for w in sorted(g.adj[v]):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    children = {v: 0 for v in parent}
    for v, p in parent.items():
        if p is not None:
            children[p] += 1
    leaves = [v for v in g.vertices if children[v] == 0 or (v == root and children[v] == 1)]
    off = sorted(v for v in leaves if v not in cyc)
    candidates = off if off else sorted(set(g.vertices) - cyc)
    for v in candidates:
        if _is_connected_on(g, set(g.vertices) - {v}):
            return v
    raise GraphError("no removable off-cycle vertex")  # pragma: no cover


def _refine(g: Graph, colours: dict) -> dict:
    """Colour refinement: split colour classes by the multiset of neighbour colours.

    New colours are ranks of sorted signatures, so the result only depends on
    the isomorphism type of the coloured graph.
    """
    ncls = len(set(colours.values()))
    while True:
        sig = {v: (colours[v], tuple(sorted(colours[w] for w in g.adj[v]))) for v in g.vertices}
        rank = {s: r for r, s in enumerate(sorted(set(sig.values())))}
        colours = {v: rank[sig[v]] for v in g.vertices}
        if len(rank) == ncls:
            return colours
        ncls = len(rank)


def canonical_form(g: Graph) -> Graph:
    """A fixed representative of the isomorphism class of ``g``.

    Individualization and refinement: refine the degree colouring, then
    branch on the vertices of the first non-singleton class and keep the
    least edge tuple over all discrete colourings reached.  Vertices with
    identical neighbourhoods (twins) are interchangeable, so only one vertex
    per twin class is tried at each branching.
    """
    best = [None]

    def search(colours):
        colours = _refine(g, colours)
        cells = {}
        for v in g.vertices:
            cells.setdefault(colours[v], []).append(v)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            order = sorted(g.vertices, key=colours.__getitem__)
            cand = g.relabel(order).edges
            if best[0] is None or cand < best[0]:
                best[0] = cand
            return
        tried = []
        for v in target:
            if any(g.adj[v] - {w} == g.adj[w] - {v} for w in tried):
                continue
            tried.append(v)
            split = {w: 2 * c + 1 for w, c in colours.items()}
            split[v] = 2 * colours[v]
            search(split)

    search({v: g.degree(v) for v in g.vertices})
    return Graph(g.n, best[0] or ())


def isomorphism_classes(n: int) -> list:
    """One canonical graph per isomorphism class on n vertices (edgeless one included).

    Every graph on n vertices is a graph on n - 1 vertices plus vertex n joined
    to some subset, so the classes are grown one vertex at a time.
    """
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    level = {Graph(0)}
    for k in range(1, n + 1):
        nxt = set()
        for h in sorted(level, key=lambda x: x.edges):
            for mask in range(1 << (k - 1)):
                edges = h.edges + tuple((i + 1, k) for i in range(k - 1) if mask >> i & 1)
                nxt.add(canonical_form(Graph(k, edges)))
        level = nxt
    return sorted(level, key=lambda x: (x.m, x.edges))


def maximum_matching(g: Graph) -> int:
    """Matching number by exhaustive branching on the smallest non-isolated vertex."""
    memo = {}

    def best(alive: frozenset) -> int:
        if alive in memo:
            return memo[alive]
        v = next((u for u in sorted(alive) if g.adj[u] & alive), None)
        if v is None:
            return 0
        res = best(alive - {v})
        for w in g.adj[v] & alive:
            res = max(res, 1 + best(alive - {v, w}))
        memo[alive] = res
        return res

    return best(frozenset(g.vertices))


# --------------------------------------------------------------------------
# text format


def parse_graph(text: str) -> Graph:
    """Parse ``n <count>`` followed by one ``i j`` edge per line; ``#`` starts a comment."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise GraphError(f"line {lineno}: expected 'n <count>'")
            n = int(parts[1])
            continue
        if len(parts) != 2 or not all(t.isdigit() for t in parts):
            raise GraphError(f"line {lineno}: expected 'i j'")
        i, j = int(parts[0]), int(parts[1])
        if not i < j:
            raise GraphError(f"line {lineno}: edges must be written with i < j")
        edges.append((i, j))
    if n is None:
        raise GraphError("missing 'n <count>' header")
    return Graph(n, tuple(edges))


def format_graph(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{i} {j}" for i, j in g.edges]
    return "\n".join(lines) + "\n"
