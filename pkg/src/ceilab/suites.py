"""Verification suites.

A suite enumerates instances (exhaustively or at random), runs one check per
instance and folds the outcomes into a :class:`Verdict`.  Checks are
module-level functions so that a process pool can run them; outcomes are
sorted by instance key before they are folded, which makes the verdict
independent of scheduling.

Statuses: ``pass`` (every instance checked and at least the minimum number
ran), ``fail`` (some instance contradicts the expectation), ``skipped`` (a
resource budget was hit, or too few instances ran).
"""

from __future__ import annotations

import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from math import comb
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional

from . import budget
from .depth import DepthEvaluator, depth_table, dstab
from .errors import CeilabError, GraphError, HypothesisViolation, ResourceError
from .generators import (
    all_labeled_graphs,
    build,
    cycle,
    erdos,
    isomorphism_classes,
    leaf_labeled_trees,
    path,
    prufer_trees,
    random_tree,
    random_unicyclic,
    unicyclic_labeled,
)
from .graphs import (
    Graph,
    component_profile,
    connected_elimination_order,
    is_connected,
    unicyclic_labeling,
    unicyclic_profile,
)
from .linalg import RationalMatrix
from .monomials import (
    complementary_edge_ideal,
    depth_via_linear_quotients,
    ideal_power,
    is_max_ideal_associated,
    linear_quotients_sets,
)
from .rees import initial_ideal_regularity, is_quadratic, max_x_degree, reduced_gb_lex
from .report import graph_key
from .resolution import betti_table, regularity_oracle
from .spread import analytic_spread, random_lemma_pair, rank_lemma_check

__all__ = ["SUITES", "SUITE_ORDER", "Params", "Verdict", "Outcome", "run_suite", "run_suites",
           "suite_instances", "MAX_FAILURES_SHOWN"]

MAX_FAILURES_SHOWN = 20


class Params(NamedTuple):
    nmax: Optional[int] = None  # None: the suite default
    seed: int = 0
    mode: str = "exhaustive"  # or "random"
    count: int = 0  # instances drawn in random mode
    kmax: Optional[int] = None
    jobs: int = 1


class Instance(NamedTuple):
    key: tuple
    label: str
    payload: object


class Outcome(NamedTuple):
    key: tuple
    label: str
    status: str  # "ok", "fail", "resource" or "n/a"
    detail: str
    tags: tuple  # ((tag, count), ...)


class Verdict(NamedTuple):
    suite: str
    theorem: str
    expectation: str
    status: str
    reason: str
    instances: int
    min_instances: int
    failures: tuple  # ((label, detail), ...), at most MAX_FAILURES_SHOWN
    failure_count: int
    tables: tuple  # ((tag, count), ...) sorted by tag
    params: dict
    elapsed_ms: Optional[int] = None

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "theorem": self.theorem,
            "expectation": self.expectation,
            "status": self.status,
            "reason": self.reason,
            "instances": self.instances,
            "min_instances": self.min_instances,
            "failure_count": self.failure_count,
            "failures": [{"instance": lab, "detail": det} for lab, det in self.failures],
            "tables": {tag: n for tag, n in self.tables},
            "params": self.params,
        }
        if timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out


def _label(g: Graph) -> str:
    return f"{g.n}:" + " ".join(f"{i}-{j}" for i, j in g.edges)


def _graph_instance(g: Graph, *extra) -> Instance:
    lab = _label(g) + "".join(f" [{e}]" for e in extra)
    return Instance(graph_key(g) + tuple(extra), lab, (g,) + tuple(extra) if extra else g)


def _identity(g: Graph) -> tuple:
    return tuple(g.vertices)


def _relabeled(g: Graph) -> Graph:
    return connected_elimination_order(g).relabeled()


def _dedupe(graphs: Iterable[Graph]) -> List[Graph]:
    return sorted(set(graphs), key=graph_key)


def _random_graphs(p: Params, lo: int, hi: int, min_edges: int = 1) -> List[Graph]:
    rng = random.Random(p.seed)
    out = []
    while len(out) < p.count:
        g = erdos(rng.randint(lo, hi), rng.uniform(0.2, 0.8), rng.randrange(2 ** 32))
        if g.m >= min_edges:
            out.append(g)
    return out


# --------------------------------------------------------------------------
# checks: payload -> (ok, detail, tags) or None when the instance does not apply


def _check_path(g: Graph, kmax: Optional[int]):
    n = g.n
    top = kmax or n - 1
    ev = DepthEvaluator()
    table = depth_table(g, top, ev)
    want = [(k, max(n - k - 1, 1)) for k in range(1, top + 1)]
    st = dstab(g, ev)
    ok = table == want and st.dstab == n - 2
    detail = f"table {[d for _, d in table]}, dstab {st.dstab}"
    return ok, detail, ((f"n={n} dstab={st.dstab}", 1),)


def _check_limit_depth(g: Graph):
    ev = _shared_evaluator()
    before = dict(ev.counts)
    st = dstab(g, ev)  # raises InconsistencyError on any contradiction
    used = {k: ev.counts[k] - before[k] for k in ev.counts}
    ok = st.limit == st.b and st.dstab <= st.bound
    tags = [(f"dstab={st.dstab}", 1), (f"limit={st.limit}", 1)]
    tags += [(k, v) for k, v in used.items() if v]
    return ok, f"table {[d for _, d in st.table]}, b={st.b}, bound={st.bound}", tuple(tags)


_EVALUATOR = None


def _shared_evaluator() -> DepthEvaluator:
    # one per process; the isomorphism-shared oracle cache pays off across instances
    global _EVALUATOR
    if _EVALUATOR is None:
        _EVALUATOR = DepthEvaluator(crosscheck=True, share_isomorphic=True)
    return _EVALUATOR


def _check_degx(g: Graph):
    gb = reduced_gb_lex(g, labeling=_identity(g), max_gens=comb(g.n, 2))
    mx = max_x_degree(gb)
    conn = is_connected(g)
    bound = 1 if conn else 2
    kind = "connected" if conn else "disconnected"
    return mx <= bound, f"max x-degree {mx} > {bound}", ((f"{kind} max_x_degree={mx}", 1),)


def _check_tree_gb(g: Graph):
    gb = reduced_gb_lex(g, labeling=_identity(g))
    q = is_quadratic(gb)
    top = max(f.degree() for f in gb)
    return q, f"basis element of degree {top}", ((f"n={g.n} max_degree={top}", 1),)


def _check_unicyclic_gb(g: Graph):
    _, cyc = unicyclic_profile(g)
    d = len(cyc)
    gb = reduced_gb_lex(g, labeling=_identity(g), kind="unicyclic")
    q = is_quadratic(gb)
    want = d in (3, 4)
    return q == want, f"d={d}: quadratic={q}", ((f"d={d} quadratic={q}", 1),)


def _check_reg_bound(g: Graph):
    kind = "elimination" if g.m == g.n - 1 else "unicyclic"
    gb = reduced_gb_lex(g, labeling=_identity(g), kind=kind)
    ir = initial_ideal_regularity(gb)
    ok = ir.regularity <= g.n and ir.squarefree and ir.quadratic_shapes
    detail = f"reg {ir.regularity} (n={g.n}), squarefree={ir.squarefree}, shapes={ir.quadratic_shapes}"
    family = "tree" if kind == "elimination" else "unicyclic"
    return ok, detail, ((f"{family} n={g.n} reg={ir.regularity}", 1),)


def _check_spread(g: Graph):
    b = component_profile(g).b
    le, lc = analytic_spread(g, "edge"), analytic_spread(g, "complementary")
    ok = le == lc == g.n - b
    return ok, f"l(I)={le}, l(I_c)={lc}, n-b={g.n - b}", ((f"n={g.n} b={b}", 1),)


def _perturbed(mat: RationalMatrix, i: int, j: int, delta: int) -> RationalMatrix:
    rows = [list(r) for r in mat.entries]
    rows[i][j] += delta
    return RationalMatrix.from_rows(rows)


def _rejects(a, b) -> bool:
    try:
        rank_lemma_check(a, b)
    except HypothesisViolation:
        return True
    return False


def _check_rank_lemma(seed: int):
    rng = random.Random(seed)
    a, b = random_lemma_pair(rng)
    if not rank_lemma_check(a, b):
        return False, f"rank or kernel mismatch for seed {seed}", (("violated", 1),)
    # hypothesis-violating variants must be refused
    zero = RationalMatrix.from_rows([[0] * a.cols for _ in range(a.rows)])
    bad = [(zero, b)]
    if a.cols > 1:
        bad += [(_perturbed(a, 0, 0, 1), b), (a, _perturbed(b, 0, 0, 1))]
    rejected = sum(_rejects(x, y) for x, y in bad)
    ok = rejected == len(bad)
    return ok, f"{len(bad) - rejected} invalid inputs accepted", (("holds", 1), ("rejected", rejected))


def _check_odd_ass(s: int, kmax: Optional[int]):
    g = cycle(2 * s + 1)
    n = g.n
    ideal = ideal_power(complementary_edge_ideal(g), s)
    u = (s - 1,) * n
    shifted = [tuple(e + (t == i) for t, e in enumerate(u)) for i in range(n)]
    witness = u not in ideal and all(v in ideal for v in shifted)
    found, _ = is_max_ideal_associated(ideal)
    ev = DepthEvaluator()
    top = kmax or s + 2
    depths = [ev(g, k).depth for k in range(s, top + 1)]
    oracle = ev.oracle_depth(g, s)
    ok = witness and found and oracle == 0 and all(d == 0 for d in depths)
    detail = f"witness={witness}, search={found}, depths k>={s}: {depths}, oracle {oracle}"
    return ok, detail, ((f"C{n} s={s}", 1),)


def _check_reg_powers(g: Graph, kmax: Optional[int]):
    top = kmax or 3
    c = component_profile(g).c
    base = complementary_edge_ideal(g)
    diffs = [regularity_oracle(ideal_power(base, k)) - (g.n - 2) * k for k in range(1, top + 1)]
    tail = diffs[-2:] if top >= 2 else diffs
    ok = all(d == c - 1 for d in tail)
    return ok, f"reg I^k - (n-2)k = {diffs}, c-1 = {c - 1}", ((f"n={g.n} " + ",".join(map(str, diffs)), 1),)


def _check_coherence(payload, _kmax=None):
    g, k = payload
    ideal = ideal_power(complementary_edge_ideal(g), k)
    qs = linear_quotients_sets(ideal)
    if not qs.has_lq:
        return None
    d_lq = depth_via_linear_quotients(ideal, qs)
    bt = betti_table(ideal)
    deg = ideal.generator_degrees[0]
    reg_i = bt.regularity + 1
    ok = bt.depth == d_lq and reg_i == deg
    return ok, f"depth {d_lq} vs {bt.depth}, reg(I) {reg_i} vs degree {deg}", (("linear-quotients", 1),)


# --------------------------------------------------------------------------
# instance enumeration


def _cap(p: Params, nmax: int, cap: int, what: str) -> None:
    if p.mode == "exhaustive" and nmax > cap:
        raise ResourceError(f"exhaustive {what} is limited to n <= {cap}; use --random for n = {nmax}")


def _insts_path(p: Params, nmax: int):
    return [_graph_instance(path(n)) for n in range(3, nmax + 1)]


def _insts_limit_depth(p: Params, nmax: int):
    if p.mode == "random":
        gs = _random_graphs(p, 3, nmax)
    else:
        _cap(p, nmax, 6, "enumeration of labeled graphs")
        gs = [g for n in range(3, nmax + 1) for g in all_labeled_graphs(n, min_edges=1)]
    return [_graph_instance(g) for g in gs]


def _insts_degx(p: Params, nmax: int):
    if p.mode == "random":
        gs = [_relabeled(g) for g in _random_graphs(p, 3, nmax)]
    else:
        _cap(p, nmax, 6, "enumeration of labeled graphs")
        gs = _dedupe(_relabeled(g) for n in range(3, nmax + 1) for g in all_labeled_graphs(n, min_edges=1))
    return [_graph_instance(g) for g in gs]


def _insts_tree_gb(p: Params, nmax: int):
    if p.mode == "random":
        rng = random.Random(p.seed)
        gs = [_relabeled(random_tree(rng.randint(3, nmax), rng.randrange(2 ** 32))) for _ in range(p.count)]
    else:
        _cap(p, nmax, 8, "Prüfer enumeration")
        gs = _dedupe(_relabeled(t) for n in range(3, nmax + 1) for t in prufer_trees(n))
    return [_graph_instance(g) for g in gs]


def _random_unicyclic_labeled(rng: random.Random, nmax: int, cycle_lengths=None) -> Graph:
    n = rng.randint(3, nmax)
    ds = [d for d in (cycle_lengths or range(3, n + 1)) if d <= n]
    g = random_unicyclic(n, rng.choice(ds), rng.randrange(2 ** 32))
    return g.relabel(unicyclic_labeling(g))


def _insts_unicyclic_gb(p: Params, nmax: int):
    if p.mode == "random":
        rng = random.Random(p.seed)
        gs = [_random_unicyclic_labeled(rng, nmax) for _ in range(p.count)]
    else:
        _cap(p, nmax, 8, "unicyclic enumeration")
        gs = [g for n in range(3, nmax + 1) for d in range(3, n + 1) for g in unicyclic_labeled(n, d)]
    return [_graph_instance(g) for g in gs]


def _insts_reg_bound(p: Params, nmax: int):
    if p.mode == "random":
        rng = random.Random(p.seed)
        gs = []
        for i in range(p.count):
            if i % 2:
                gs.append(_random_unicyclic_labeled(rng, nmax, (3, 4)))
            else:
                gs.append(_relabeled(random_tree(rng.randint(3, nmax), rng.randrange(2 ** 32))))
    else:
        _cap(p, nmax, 7, "tree and unicyclic enumeration")
        gs = [g for n in range(3, nmax + 1) for g in leaf_labeled_trees(n)]
        gs += [g for n in range(3, nmax + 1) for d in (3, 4) if d <= n for g in unicyclic_labeled(n, d)]
    return [_graph_instance(g) for g in gs]


def _insts_spread(p: Params, nmax: int):
    if p.mode == "random":
        gs = _random_graphs(p, 3, nmax)
    else:
        _cap(p, nmax, 8, "isomorphism-class enumeration")
        gs = [g for n in range(3, nmax + 1) for g in isomorphism_classes(n) if g.m]
    return [_graph_instance(g) for g in gs]


def _insts_rank_lemma(p: Params, nmax: int):
    count = p.count or 1000
    seeds = [p.seed * 1_000_003 + i for i in range(count)]
    return [Instance((i,), f"pair {i}", s) for i, s in enumerate(seeds)]


def _insts_odd_ass(p: Params, nmax: int):
    return [Instance((s,), f"C{2 * s + 1}", s) for s in range(2, (nmax - 1) // 2 + 1)]


def _insts_reg_powers(p: Params, nmax: int):
    return [_graph_instance(build(spec)) for spec in ("path3+path3", "path4+path3")]


def _insts_coherence(p: Params, nmax: int):
    kmax = p.kmax or 2
    if p.mode == "random":
        rng = random.Random(p.seed)
        gs = [_relabeled(g) for g in _random_graphs(p, 3, nmax)]
        pairs = [(g, rng.randint(1, kmax)) for g in gs]
    else:
        _cap(p, nmax, 6, "enumeration of labeled graphs")
        gs = _dedupe(_relabeled(g) for n in range(3, nmax + 1) for g in all_labeled_graphs(n, min_edges=1))
        pairs = [(g, k) for g in gs for k in range(1, kmax + 1)]
    return [Instance(graph_key(g) + (k,), f"{_label(g)} [k={k}]", (g, k)) for g, k in pairs]


# --------------------------------------------------------------------------
# registry


class Suite(NamedTuple):
    name: str
    theorem: str
    expectation: str
    instances: Callable
    check: Callable
    nmax: int  # default in exhaustive mode
    random_nmax: int  # default in random mode
    uses_kmax: bool = False
    min_instances: int = 1


SUITES: Dict[str, Suite] = {
    s.name: s
    for s in (
        Suite("path", "path-depth-table",
              "depth S/I_c(P_n)^k = max(n-k-1, 1) for k = 1..n-1, and dstab = n-2",
              _insts_path, _check_path, 7, 7, uses_kmax=True, min_instances=3),
        Suite("limit-depth", "limit-depth",
              "depth S/I_c(G)^k is constant equal to b(G) from some k <= n-c(G)-1 on, "
              "and linear quotients agree with the Betti oracle",
              _insts_limit_depth, _check_limit_depth, 5, 6),
        Suite("degx", "x-degree-bound",
              "every reduced Groebner basis element of J has x-degree <= 2 on both monomials, "
              "<= 1 when G is connected",
              _insts_degx, _check_degx, 6, 7),
        Suite("tree-gb", "tree-quadratic-gb",
              "for a tree with a leaf labeling the reduced lex Groebner basis of J is quadratic",
              _insts_tree_gb, _check_tree_gb, 7, 9),
        Suite("unicyclic-gb", "unicyclic-dichotomy",
              "for a connected unicyclic graph under the cycle-last labeling the reduced Groebner "
              "basis is quadratic iff the cycle length is 3 or 4",
              _insts_unicyclic_gb, _check_unicyclic_gb, 7, 9),
        Suite("reg-bound", "rees-regularity-bound",
              "trees and unicyclic graphs with a 3- or 4-cycle: in(J) is squarefree, generated by "
              "x_i y_j and y_r y_s, and reg T/in(J) <= n",
              _insts_reg_bound, _check_reg_bound, 6, 7),
        Suite("spread", "analytic-spread",
              "l(I_c(G)) = l(I(G)) = n - b(G)",
              _insts_spread, _check_spread, 8, 12),
        Suite("rank-lemma", "rank-lemma",
              "rank(A-B) = rank(B) and Ker(A-B) = Ker(B) when B has constant positive column sums "
              "below those of the constant-row matrix A; other inputs are rejected",
              _insts_rank_lemma, _check_rank_lemma, 0, 0, min_instances=1000),
        Suite("odd-ass", "odd-cycle-max-ideal",
              "for C_(2s+1) the maximal ideal is associated to I_c^s with witness "
              "(x_1...x_(2s+1))^(s-1), and depth S/I_c^k = 0 for k >= s",
              _insts_odd_ass, _check_odd_ass, 7, 7, uses_kmax=True, min_instances=2),
        Suite("reg-powers", "power-regularity-witness",
              "reg I_c(G)^k - (n-2)k settles at c(G)-1 = 1 for P3+P3 and P4+P3",
              _insts_reg_powers, _check_reg_powers, 7, 7, uses_kmax=True, min_instances=2),
        Suite("coherence", "oracle-coherence",
              "whenever I has linear quotients, the depth read off the quotient sets equals the "
              "Betti-oracle depth and reg(I) equals the generator degree",
              _insts_coherence, _check_coherence, 5, 6, uses_kmax=True, min_instances=500),
    )
}

SUITE_ORDER = tuple(SUITES)


def suite_instances(name: str, p: Params) -> List[Instance]:
    s = SUITES[name]
    nmax = p.nmax or (s.random_nmax if p.mode == "random" else s.nmax)
    if p.mode == "random" and p.count <= 0 and name != "rank-lemma":
        raise GraphError("random mode needs a positive instance count")
    return sorted(s.instances(p, nmax), key=lambda inst: inst.key)


def _run_one(name: str, kmax: Optional[int], inst: Instance) -> Outcome:
    s = SUITES[name]
    try:
        with budget.instance_budget():
            res = s.check(inst.payload, kmax) if s.uses_kmax else s.check(inst.payload)
    except ResourceError as exc:
        return Outcome(inst.key, inst.label, "resource", str(exc), ())
    except CeilabError as exc:
        return Outcome(inst.key, inst.label, "fail", f"{type(exc).__name__}: {exc}", ())
    if res is None:
        return Outcome(inst.key, inst.label, "n/a", "", ())
    ok, detail, tags = res
    return Outcome(inst.key, inst.label, "ok" if ok else "fail", "" if ok else detail, tags)


def _map(fn, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (8 * jobs))))


def run_suite(name: str, p: Params = Params()) -> Verdict:
    if name not in SUITES:
        raise GraphError(f"unknown suite {name!r}; choose from {', '.join(SUITE_ORDER)}")
    s = SUITES[name]
    start = time.monotonic()
    nmax = p.nmax or (s.random_nmax if p.mode == "random" else s.nmax)
    params = {"mode": p.mode, "nmax": nmax, "seed": p.seed}
    if p.mode == "random":
        params["count"] = p.count or (1000 if name == "rank-lemma" else 0)
    if s.uses_kmax and p.kmax:
        params["kmax"] = p.kmax
    try:
        insts = suite_instances(name, p)
    except ResourceError as exc:
        return Verdict(name, s.theorem, s.expectation, "skipped", f"resource: {exc}", 0,
                       s.min_instances, (), 0, (), params,
                       int((time.monotonic() - start) * 1000))
    outcomes = sorted(_map(partial(_run_one, name, p.kmax), insts, p.jobs), key=lambda o: o.key)

    checked = [o for o in outcomes if o.status in ("ok", "fail")]
    fails = [o for o in outcomes if o.status == "fail"]
    short = [o for o in outcomes if o.status == "resource"]
    # every applicable instance must run, and never fewer than the suite floor
    minimum = max(s.min_instances, sum(o.status != "n/a" for o in outcomes))
    tables: Counter = Counter()
    for o in outcomes:
        for tag, cnt in o.tags:
            tables[tag] += cnt
    if fails:
        status, reason = "fail", f"{len(fails)} of {len(checked)} instances contradict the expectation"
    elif short:
        status, reason = "skipped", f"resource: budget exceeded on {len(short)} instances"
    elif len(checked) < minimum:
        status, reason = "skipped", f"only {len(checked)} instances checked, {minimum} required"
    else:
        status, reason = "pass", ""
    shown = tuple((o.label, o.detail) for o in (fails or short)[:MAX_FAILURES_SHOWN])
    return Verdict(name, s.theorem, s.expectation, status, reason, len(checked), minimum,
                   shown, len(fails), tuple(sorted(tables.items())), params,
                   int((time.monotonic() - start) * 1000))


def run_suites(names: Iterable[str], p: Params = Params()) -> List[Verdict]:
    return [run_suite(n, p) for n in names]
