"""Defining ideal of the Rees algebra of a monomial ideal, and its Gröbner bases.

For I = (u_1, ..., u_m) in S = K[x_1..x_n] the defining ideal J is the kernel
of T = S[y_1..y_m] -> S[t], y_j -> u_j t.  It is computed by eliminating t
from (y_j - u_j t : j) with a binomial Buchberger algorithm under the lex
order t > x_1 > ... > x_n > y_1 > ... > y_m.  Lex with t on top is a block
elimination order, so the t-free part of the reduced basis is the reduced
Gröbner basis of J for lex x_1 > ... > y_m.

Binomials are pairs ``(lead, trail)`` of exponent tuples with lead > trail
and implicit coefficients +1 and -1.  Reducing a binomial by binomials keeps
it a binomial with these coefficients.  The starting ideal is prime and
contains no monomials, so a common factor of lead and trail may be divided
out at any time.

Primitive even closed walks of G* (G plus an apex vertex n + 1 joined to
every vertex) are enumerated independently and compared with the basis
through the dictionary y_j <-> z_{e_j}, x_i <-> edge {i, n + 1}.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from . import budget
from .errors import GraphError, IdealError, InconsistencyError, ResourceError
from .graphs import (
    EliminationOrder,
    Graph,
    component_profile,
    connected_elimination_order,
    is_elimination_order,
    unicyclic_profile,
)
from .monomials import (
    MonomialIdeal,
    complementary_edge_ideal,
    divides,
    format_monomial,
    ideal_power,
    mono_lcm,
)
from .resolution import multigraded_betti, regularity_oracle

__all__ = [
    "MAX_GENERATORS",
    "MAX_PAIRS",
    "Binomial",
    "GroebnerBasis",
    "BuchbergerStats",
    "binomial_buchberger",
    "rees_defining_ideal",
    "reduced_gb_lex",
    "max_x_degree",
    "is_quadratic",
    "initial_ideal",
    "certify_groebner_basis",
    "format_gb",
    "parse_gb",
    "EvenClosedWalk",
    "enumerate_primitive_even_walks",
    "walk_binomial_crosscheck",
    "initial_ideal_regularity",
    "x_regularity_bounds_check",
]

MAX_GENERATORS = 12
MAX_PAIRS = 200_000


class Binomial(NamedTuple):
    lead: tuple
    trail: tuple

    def degree(self) -> int:
        return max(sum(self.lead), sum(self.trail))


class BuchbergerStats(NamedTuple):
    pairs_processed: int
    pairs_skipped: int
    zero_reductions: int
    basis_size: int
    queue_size: int


# --------------------------------------------------------------------------
# binomial Buchberger


def _sub_add(a, lead, trail):
    # a * trail / lead, assuming lead | a
    return tuple(x - l + r for x, l, r in zip(a, lead, trail))


_FIELD = 16  # bits per packed exponent; the top bit of each field is a guard


class _Packing:
    """Monomials packed into ints, variable 0 in the most significant field.

    Integer comparison of packed monomials is then lex comparison, products
    and quotients are addition and subtraction, and with a guard bit on top of
    every field, a | b iff subtracting a from b (guards set) keeps every guard.
    """

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.shifts = [_FIELD * (nvars - 1 - i) for i in range(nvars)]
        self.guard = sum(1 << (s + _FIELD - 1) for s in self.shifts)
        self.low = self.guard >> (_FIELD - 1)  # lowest bit of every field
        self.fmask = (1 << _FIELD) - 1
        self.limit = 1 << (_FIELD - 1)

    def pack(self, a) -> int:
        out = 0
        for s, e in zip(self.shifts, a):
            if e >= self.limit:
                raise OverflowError(f"exponent {e} too large for packed arithmetic")
            out |= e << s
        return out

    def unpack(self, p: int) -> tuple:
        return tuple((p >> s) & self.fmask for s in self.shifts)

    def lcm(self, a: int, b: int) -> int:
        # guard bits survive exactly in the fields where a_i >= b_i
        ge = ((a | self.guard) - b) & self.guard
        mask = (ge >> (_FIELD - 1)) * self.fmask
        return (a & mask) | (b & ~mask)


def binomial_buchberger(gens: Iterable[Binomial], weights: Sequence[int],
                        max_pairs: int = MAX_PAIRS) -> Tuple[List[Binomial], BuchbergerStats]:
    """Reduced lex Gröbner basis of the binomial ideal generated by ``gens``.

    The ideal must be prime and free of monomials (so that common factors can
    be cancelled) and homogeneous for ``weights``.  Pairs are handled in
    normal selection order: smallest weighted degree of the lcm of the leads,
    then by pair index.  Useless pairs are discarded with the Gebauer-Möller
    criteria.
    """
    weights = tuple(weights)
    pk = _Packing(len(weights))
    guard, lcm = pk.guard, pk.lcm
    wfields = [(s, w) for s, w in zip(pk.shifts, weights) if w]
    fmask = pk.fmask

    def wdeg(p):
        return sum(w * ((p >> s) & fmask) for s, w in wfields)

    def normalize(a: int, b: int):
        if a == b:
            return None
        g = a + b - lcm(a, b)
        if g:
            a, b = a - g, b - g
        return (a, b) if a > b else (b, a)

    leads: List[int] = []
    trails: List[int] = []
    active: List[int] = []
    queue: list = []
    skipped = processed = zeros = 0

    def top_reduce(f):
        while f is not None:
            a, b = f
            ag = a | guard
            for i in active:
                li = leads[i]
                if (ag - li) & guard == guard:
                    f = normalize(a - li + trails[i], b)
                    break
            else:
                return f
        return None

    def update(h):
        nonlocal queue, skipped
        k = len(leads)
        hl = h[0]
        leads.append(hl)
        trails.append(h[1])
        cand = []
        for i in active:
            li = leads[i]
            lc = lcm(li, hl)
            cand.append((i, lc, lc == li + hl))
        # chain criterion among the new pairs: (i, h) is useless when some
        # other (j, h) has an lcm dividing its lcm (ties keep the first one)
        new_pairs = []
        for idx, (i, lc, coprime) in enumerate(cand):
            if coprime:
                skipped += 1
                continue
            lg = lc | guard
            dominated = False
            for jdx, (_, lc2, _) in enumerate(cand):
                if (lg - lc2) & guard == guard and jdx != idx and (lc2 != lc or jdx < idx):
                    dominated = True
                    break
            if dominated:
                skipped += 1
            else:
                new_pairs.append((wdeg(lc), i, k, lc))
        # old pairs made redundant by h
        old = []
        for item in queue:
            _, i, j, lc = item
            if ((lc | guard) - hl) & guard == guard and lcm(leads[i], hl) != lc and lcm(leads[j], hl) != lc:
                skipped += 1
            else:
                old.append(item)
        queue = old + new_pairs
        heapq.heapify(queue)
        active[:] = [i for i in active if ((leads[i] | guard) - hl) & guard != guard] + [k]

    for f in gens:
        f = normalize(pk.pack(f[0]), pk.pack(f[1]))
        if f is not None:
            f = top_reduce(f)
        if f is not None:
            update(f)

    while queue:
        if processed >= max_pairs:
            raise ResourceError(
                f"Buchberger pair budget {max_pairs} exhausted "
                f"(processed={processed}, queued={len(queue)}, basis={len(active)})"
            )
        _, i, j, lc = heapq.heappop(queue)
        processed += 1
        if not processed & 0x3F:
            budget.check("Buchberger")
        s = normalize(lc - leads[i] + trails[i], lc - leads[j] + trails[j])
        s = top_reduce(s)
        if s is None:
            zeros += 1
            continue
        update(s)

    # inter-reduce the trails; leads are already minimal
    out = []
    for a in active:
        lead, trail = leads[a], trails[a]
        changed = True
        while changed:
            changed = False
            tg = trail | guard
            for i in active:
                if (tg - leads[i]) & guard == guard:
                    trail = trail - leads[i] + trails[i]
                    changed = True
                    break
        if trail >= lead:  # pragma: no cover - a reduced trail stays below the lead
            raise InconsistencyError("tail reduction raised the trail above the lead")
        out.append(Binomial(pk.unpack(lead), pk.unpack(trail)))
    out.sort(reverse=True)
    stats = BuchbergerStats(processed, skipped, zeros, len(out), len(queue))
    return out, stats


# --------------------------------------------------------------------------
# Rees ideal


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Gröbner basis of a Rees ideal J in K[x_1..x_n, y_1..y_m].

    Exponent tuples have length n + m, x-part first.  ``order`` names the
    monomial order; ``relabel[r]`` is the original vertex that became
    vertex r + 1 (identity when no graph relabeling was applied).
    ``generators`` are the u_j that y_j maps to (times t).
    """

    n: int
    m: int
    elements: tuple
    generators: tuple
    relabel: tuple = ()
    order: str = "lex"
    reduced: bool = True
    stats: Optional[BuchbergerStats] = field(default=None, compare=False)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def variable_names(self) -> list:
        return [f"x{i}" for i in range(1, self.n + 1)] + [f"y{j}" for j in range(1, self.m + 1)]

    def x_part(self, mono) -> tuple:
        return tuple(mono[: self.n])

    def y_part(self, mono) -> tuple:
        return tuple(mono[self.n:])


def rees_defining_ideal(ideal: MonomialIdeal, max_gens: int = MAX_GENERATORS,
                        max_pairs: int = MAX_PAIRS, relabel: Sequence[int] = ()) -> GroebnerBasis:
    """Reduced lex Gröbner basis of the defining ideal J of the Rees algebra of ``ideal``.

    y_j corresponds to the j-th stored generator (decreasing lex order).
    """
    gens = ideal.gens
    m, n = len(gens), ideal.ring_size
    if m == 0:
        raise IdealError("the zero ideal has no Rees algebra presentation")
    if not ideal.is_equigenerated:
        raise IdealError("the Rees ideal is only computed for equigenerated ideals")
    if m > max_gens:
        raise ResourceError(f"{m} generators exceed the Buchberger budget of {max_gens}")
    d = sum(gens[0])
    weights = (1,) + (1,) * n + (d + 1,) * m
    start = []
    for j, u in enumerate(gens):
        lead = (1,) + tuple(u) + (0,) * m
        trail = (0,) + (0,) * n + tuple(1 if k == j else 0 for k in range(m))
        start.append(Binomial(lead, trail))
    full, stats = binomial_buchberger(start, weights, max_pairs)
    elements = tuple(
        Binomial(f.lead[1:], f.trail[1:]) for f in full if f.lead[0] == 0 and f.trail[0] == 0
    )
    for f in elements:
        if sum(f.lead[n:]) != sum(f.trail[n:]):  # pragma: no cover - J is y-homogeneous
            raise InconsistencyError(f"element {f} of J is not y-homogeneous")
    return GroebnerBasis(n, m, elements, tuple(gens), tuple(relabel) or tuple(range(1, n + 1)),
                         "lex", True, stats)


def _is_unicyclic_labeling(g: Graph, order: Sequence[int]) -> bool:
    ok, cycle = unicyclic_profile(g)
    if not ok or not is_elimination_order(g, order):
        return False
    d = len(cycle)
    tail = list(order[g.n - d:])
    if set(tail) != set(cycle):
        return False
    return all(g.has_edge(tail[i], tail[i + 1]) for i in range(d - 1))


def reduced_gb_lex(g: Graph, labeling=None, kind: str = "elimination", **kw) -> GroebnerBasis:
    """Reduced Gröbner basis of J(I_c(G)) after relabeling the vertices.

    ``labeling`` is an :class:`EliminationOrder` or a vertex sequence whose
    r-th entry becomes vertex r + 1 (default: a connected elimination order).
    ``kind`` selects the validation: ``"elimination"`` (per-component suffix
    connectivity, which also covers the tree leaf labeling), ``"unicyclic"``
    (additionally the cycle occupies the last labels in cyclic order) or
    ``"any"``.
    """
    if labeling is None:
        labeling = connected_elimination_order(g)
    order = tuple(labeling.order if isinstance(labeling, EliminationOrder) else labeling)
    if sorted(order) != list(g.vertices):
        raise GraphError(f"labeling {order} is not a permutation of the vertices")
    if kind == "elimination":
        valid = is_elimination_order(g, order)
    elif kind == "unicyclic":
        valid = _is_unicyclic_labeling(g, order)
    elif kind == "any":
        valid = True
    else:
        raise ValueError(f"unknown labeling kind {kind!r}")
    if not valid:
        raise GraphError(f"labeling {order} is not a valid {kind} labeling")
    h = g.relabel(order)
    return rees_defining_ideal(complementary_edge_ideal(h), relabel=order, **kw)


def max_x_degree(gb: GroebnerBasis) -> int:
    """Largest x-degree of either monomial of any basis element (0 for an empty basis)."""
    return max((max(sum(gb.x_part(f.lead)), sum(gb.x_part(f.trail))) for f in gb), default=0)


def is_quadratic(gb: GroebnerBasis) -> bool:
    """True iff every basis element has total degree at most 2."""
    return all(f.degree() <= 2 for f in gb)


def initial_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    """in(J) as a monomial ideal in the n + m variables x_1..x_n, y_1..y_m."""
    if not gb.elements:
        raise IdealError("J is zero, so its initial ideal is zero")
    return MonomialIdeal(gb.n + gb.m, tuple(f.lead for f in gb))


def certify_groebner_basis(gb: GroebnerBasis) -> bool:
    """Independent check: every S-pair reduces to zero and the basis is reduced.

    Uses plain reduction without cancelling common factors, so it certifies
    the Buchberger criterion directly.
    """
    basis = list(gb.elements)
    leads = [f.lead for f in basis]
    for i, f in enumerate(basis):
        if f.lead <= f.trail:
            return False
        if any(i != j and divides(leads[j], f.lead) for j in range(len(basis))):
            return False
        if any(divides(l, f.trail) for l in leads):
            return False
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            fi, fj = basis[i], basis[j]
            lc = mono_lcm(fi.lead, fj.lead)
            a, b = _sub_add(lc, fi.lead, fi.trail), _sub_add(lc, fj.lead, fj.trail)
            # reduce both sides to normal form; the difference is zero iff they agree
            if _normal_form(a, basis) != _normal_form(b, basis):
                return False
    return True


def _normal_form(a, basis) -> tuple:
    changed = True
    while changed:
        changed = False
        for g in basis:
            if divides(g.lead, a):
                a = _sub_add(a, g.lead, g.trail)
                changed = True
                break
    return a


# --------------------------------------------------------------------------
# serialization


def format_gb(gb: GroebnerBasis) -> str:
    """One binomial per line as ``lead - trail`` exponent vectors, with a header."""
    names = gb.variable_names()
    lines = [
        f"# order {gb.order} " + " > ".join(names),
        "# relabel " + " ".join(str(v) for v in gb.relabel),
        f"# n {gb.n} m {gb.m}",
    ]
    for u in gb.generators:
        lines.append("# generator " + " ".join(str(e) for e in u))
    for f in gb:
        lines.append(" ".join(map(str, f.lead)) + " - " + " ".join(map(str, f.trail)))
    return "\n".join(lines) + "\n"


def parse_gb(text: str) -> GroebnerBasis:
    n = m = None
    relabel: tuple = ()
    order = "lex"
    gens = []
    elements = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            words = line[1:].split()
            if words and words[0] == "order":
                order = words[1]
            elif words and words[0] == "relabel":
                relabel = tuple(int(w) for w in words[1:])
            elif words and words[0] == "n":
                n, m = int(words[1]), int(words[3])
            elif words and words[0] == "generator":
                gens.append(tuple(int(w) for w in words[1:]))
            continue
        left, right = line.split(" - ")
        elements.append(Binomial(tuple(map(int, left.split())), tuple(map(int, right.split()))))
    if n is None:
        raise ValueError("missing '# n <n> m <m>' header line")
    return GroebnerBasis(n, m, tuple(elements), tuple(gens), relabel, order, True)


def format_binomial(gb: GroebnerBasis, f: Binomial) -> str:
    def show(a):
        xs = format_monomial(gb.x_part(a), "x")
        ys = format_monomial(gb.y_part(a), "y")
        if xs == "1":
            return ys
        return xs if ys == "1" else xs + "*" + ys

    return f"{show(f.lead)} - {show(f.trail)}"


__all__.append("format_binomial")


# --------------------------------------------------------------------------
# even closed walks in G*


class EvenClosedWalk(NamedTuple):
    """A closed walk v_0, v_1, ..., v_{2k} = v_0 in G*, stored in canonical form.

    ``odd`` and ``even`` are the sorted multisets of edges in odd and even
    positions (the first edge {v_0, v_1} is in position 1).
    """

    vertices: tuple
    odd: tuple
    even: tuple

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def multiplicities(self) -> Dict[tuple, int]:
        out: Dict[tuple, int] = {}
        for e in self.odd + self.even:
            out[e] = out.get(e, 0) + 1
        return out

    def binomial_key(self) -> frozenset:
        return frozenset((self.odd, self.even))


def _edge(a, b):
    return (a, b) if a < b else (b, a)


def _canonical_walk(cyc: Sequence[int]) -> tuple:
    # cyc lists the vertices once around (closing vertex omitted)
    k = len(cyc)
    best = None
    for seq in (list(cyc), list(reversed(cyc))):
        for r in range(k):
            cand = tuple(seq[r:] + seq[:r])
            if best is None or cand < best:
                best = cand
    return best


def _walk_from_cycle(seq: tuple) -> EvenClosedWalk:
    k = len(seq)
    odd, even = [], []
    for p in range(k):
        e = _edge(seq[p], seq[(p + 1) % k])
        (odd if p % 2 == 0 else even).append(e)
    return EvenClosedWalk(seq + (seq[0],), tuple(sorted(odd)), tuple(sorted(even)))


def _sub_multisets(items: Sequence[tuple]):
    counts: Dict[tuple, int] = {}
    for e in items:
        counts[e] = counts.get(e, 0) + 1
    keys = sorted(counts)
    for choice in product(*(range(counts[e] + 1) for e in keys)):
        yield {e: c for e, c in zip(keys, choice) if c}


def _is_primitive(odd: Sequence[tuple], even: Sequence[tuple]) -> bool:
    """No binomial of the edge ring divides the walk's binomial, other than itself.

    A pair of edge multisets (A, B) gives a binomial iff both have the same
    size and the same vertex-degree vector.  Primitivity fails iff such a pair
    exists with A <= odd, B <= even, (A, B) nonempty and not the whole walk.
    """
    def signature(ms):
        deg: Dict[int, int] = {}
        for (a, b), c in ms.items():
            deg[a] = deg.get(a, 0) + c
            deg[b] = deg.get(b, 0) + c
        return tuple(sorted(deg.items()))

    full = (len(odd), len(even))
    seen = set()
    for ms in _sub_multisets(odd):
        if ms:
            seen.add(signature(ms))
    for ms in _sub_multisets(even):
        size = sum(ms.values())
        if not ms or size == full[1]:
            continue
        if signature(ms) in seen:
            return False
    return True


def enumerate_primitive_even_walks(g: Graph, max_vertices: int = 9,
                                   max_walks: int = 1_000_000) -> List[EvenClosedWalk]:
    """All primitive even closed walks of G*, up to rotation and reflection.

    Depth-first search from each start vertex s, using only vertices >= s.
    Branches are cut when a vertex would be met again at an even distance
    (that closes a proper even subwalk whose binomial divides the walk's),
    when a vertex would be used three times, and when an edge would sit in
    positions of both parities or be used three times.  Survivors are
    checked for primitivity on the level of edge multisets.
    """
    if g.n > max_vertices:
        raise ResourceError(f"walk enumeration is limited to {max_vertices} vertices")
    apex = g.n + 1
    adj = {v: sorted(g.adj[v] | {apex}) for v in g.vertices}
    adj[apex] = list(g.vertices)
    found: Dict[tuple, EvenClosedWalk] = {}
    steps = 0

    for s in range(1, apex + 1):
        path = [s]
        positions: Dict[int, list] = {s: [0]}
        parity: Dict[tuple, int] = {}
        used: Dict[tuple, int] = {}

        def extend(v):
            nonlocal steps
            steps += 1
            if not steps & 0xFFF:
                budget.check("walk enumeration")
            p = len(path)  # position the next vertex will occupy
            for w in adj[v]:
                if w < s:
                    continue
                e = _edge(v, w)
                par = p % 2  # edge number p has parity p % 2 (first edge is odd)
                if used.get(e, 0) >= 2 or (e in parity and parity[e] != par):
                    continue
                if w == s and p % 2 == 0:
                    # closing edge: s sits at position 0 and at p
                    if p >= 4 and all((p - q) % 2 for q in positions[s][1:]):
                        used[e] = used.get(e, 0) + 1
                        fresh = e not in parity
                        parity[e] = par
                        seq = _canonical_walk(path)
                        if seq not in found:
                            walk = _walk_from_cycle(seq)
                            if _is_primitive(walk.odd, walk.even):
                                found[seq] = walk
                                if len(found) > max_walks:
                                    raise ResourceError("too many walks")
                        used[e] -= 1
                        if fresh:
                            del parity[e]
                    continue
                occ = positions.get(w, [])
                if len(occ) >= 2:
                    continue
                if any((p - q) % 2 == 0 for q in occ):
                    continue
                used[e] = used.get(e, 0) + 1
                fresh = e not in parity
                parity[e] = par
                path.append(w)
                positions.setdefault(w, []).append(p)
                extend(w)
                positions[w].pop()
                if not positions[w]:
                    del positions[w]
                path.pop()
                used[e] -= 1
                if fresh:
                    del parity[e]

        extend(s)
    return [found[k] for k in sorted(found)]


class CrosscheckReport(NamedTuple):
    matched: int
    total: int
    unmatched: tuple  # basis elements with no walk

    @property
    def ok(self) -> bool:
        return self.matched == self.total


__all__.append("CrosscheckReport")


def _edges_of_generators(gb: GroebnerBasis) -> list:
    out = []
    for u in gb.generators:
        missing = [i + 1 for i, e in enumerate(u) if e == 0]
        if len(missing) != 2 or any(e > 1 for e in u):
            raise IdealError("basis does not come from a complementary edge ideal")
        out.append(tuple(missing))
    return out


def walk_binomial_crosscheck(gb: GroebnerBasis, walks: Sequence[EvenClosedWalk]) -> CrosscheckReport:
    """Match every basis element with a primitive even closed walk of G*.

    h = u y^a - v y^b corresponds to u z^b - v z^a in the edge ring of G*,
    where x_i stands for the edge {i, n + 1} and z_j for the j-th edge.  The
    walk must have these two edge multisets as its odd and even edges.
    Walks must be computed on the relabeled graph the basis was built for.
    """
    edges = _edges_of_generators(gb)
    apex = gb.n + 1
    keys = {w.binomial_key() for w in walks}

    def side(x_mono, y_mono):
        ms = []
        for i, e in enumerate(x_mono):
            ms.extend([(i + 1, apex)] * e)
        for j, e in enumerate(y_mono):
            ms.extend([edges[j]] * e)
        return tuple(sorted(ms))

    unmatched = []
    for f in gb:
        pos = side(gb.x_part(f.lead), gb.y_part(f.trail))
        neg = side(gb.x_part(f.trail), gb.y_part(f.lead))
        if frozenset((pos, neg)) not in keys:
            unmatched.append(f)
    return CrosscheckReport(len(gb) - len(unmatched), len(gb), tuple(unmatched))


# --------------------------------------------------------------------------
# regularity


class InitialRegularity(NamedTuple):
    regularity: int  # reg T/in(J)
    squarefree: bool
    exact: bool  # True when reg T/J = reg T/in(J) is guaranteed (squarefree in(J))
    quadratic_shapes: bool  # generated by x_i y_j and y_r y_s


__all__.append("InitialRegularity")


def initial_ideal_regularity(gb: GroebnerBasis, method: str = "auto") -> InitialRegularity:
    """reg T/in(J) over the standard grading of T = K[x, y].

    When in(J) is squarefree this equals reg T/J; otherwise it is only an
    upper bound and ``exact`` is False.
    """
    ini = initial_ideal(gb)
    square = all(e <= 1 for u in ini.gens for e in u)
    shapes = all(
        sum(u) == 2 and all(e <= 1 for e in u) and sum(u[gb.n:]) >= 1 for u in ini.gens
    )
    reg = regularity_oracle(ini, method) - 1
    return InitialRegularity(reg, square, square, shapes)


class XRegularityReport(NamedTuple):
    differences: tuple  # ((k, reg I^k - (n - 2) k), ...)
    expected_limit: int  # c(G) - 1
    stabilized: bool  # the last two differences equal c(G) - 1
    x_shift_ok: bool  # x-degree of every Taylor-level shift of in(J) <= 2 i
    x_regularity_initial: int  # max over shifts of x-degree - i for T/in(J)
    bound: int  # n - 1

    @property
    def ok(self) -> bool:
        return self.stabilized and self.x_shift_ok and self.x_regularity_initial <= self.bound


__all__.append("XRegularityReport")


def x_regularity_bounds_check(g: Graph, k_max: int, gb: Optional[GroebnerBasis] = None,
                              method: str = "auto") -> XRegularityReport:
    """Regularity of powers against (n - 2) k + c(G) - 1, and the x-shifts of in(J).

    The multigraded Betti numbers of T/in(J) are computed exactly; a shift b
    in homological degree i must have x-degree at most 2 i, and
    reg_x T/in(J) = max(xdeg(b) - i) is compared with n - 1.
    """
    if k_max < 2:
        raise ValueError("k_max must be at least 2 to observe stabilization")
    ideal = complementary_edge_ideal(g)
    c = component_profile(g).c
    diffs = []
    power = None
    for k in range(1, k_max + 1):
        power = ideal if k == 1 else ideal_power(ideal, k)
        diffs.append((k, regularity_oracle(power, method) - (g.n - 2) * k))
    stabilized = diffs[-1][1] == c - 1 and diffs[-2][1] == c - 1
    if gb is None:
        gb = reduced_gb_lex(g)
    if gb.elements:
        mg = multigraded_betti(initial_ideal(gb), method)
        shifts = [(i, sum(b[: gb.n])) for (i, b), v in mg.items() if i >= 1 and v]
    else:
        shifts = []
    x_ok = all(xd <= 2 * i for i, xd in shifts)
    xreg = max((xd - i for i, xd in shifts), default=0)
    return XRegularityReport(tuple(diffs), c - 1, stabilized, x_ok, xreg, g.n - 1)
