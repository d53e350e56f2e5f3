"""Depth functions k -> depth S/I_c(G)^k and their stabilization.

The evaluator relabels G along a connected elimination order, forms the
power in decreasing lex order and reads the depth off the linear-quotient
sets when they exist.  Otherwise it falls back to the Betti oracle.
"""

from __future__ import annotations

from typing import Callable, Mapping, NamedTuple, Optional

from .errors import GraphError, IdealError, InconsistencyError
from .graphs import Graph, canonical_form, component_profile, connected_elimination_order
from .monomials import (
    complementary_edge_ideal,
    depth_via_linear_quotients,
    ideal_power,
    ideal_product,
    linear_quotients_sets,
)
from .resolution import depth_oracle

__all__ = [
    "DepthValue",
    "DepthStability",
    "DepthEvaluator",
    "depth_of_power",
    "depth_table",
    "depth_disjoint_union",
    "dstab_bound",
    "dstab",
]


class DepthValue(NamedTuple):
    depth: int
    method: str  # "linear-quotients" or "oracle"
    oracle_depth: Optional[int]  # filled in when both routes were run


class DepthEvaluator:
    """Callable ``(graph, k) -> DepthValue``.

    ``prefer`` selects the route: ``"auto"`` uses linear quotients when the
    relabeled power has them, ``"oracle"`` always runs the Betti oracle.
    With ``crosscheck=True`` both routes run whenever linear quotients hold
    and a disagreement raises :class:`InconsistencyError`.

    Permuting variables does not change depth, so with ``share_isomorphic``
    the oracle runs once per isomorphism class (on a canonical relabeling).
    Linear quotients are always checked on the graph's own labeling.
    """

    def __init__(self, prefer: str = "auto", crosscheck: bool = False, method: str = "auto",
                 share_isomorphic: bool = False):
        if prefer not in ("auto", "oracle"):
            raise ValueError(f"unknown route {prefer!r}")
        self.prefer = prefer
        self.crosscheck = crosscheck
        self.method = method
        self.share_isomorphic = share_isomorphic
        self.counts = {"linear-quotients": 0, "oracle": 0, "crosschecked": 0}
        self._powers = {}
        self._oracle = {}

    def oracle_depth(self, g: Graph, k: int) -> int:
        if self.share_isomorphic:
            g = canonical_form(g)
        key = (g, k)
        if key not in self._oracle:
            self._oracle[key] = depth_oracle(self.power(g, k), self.method)
        return self._oracle[key]

    def power(self, g: Graph, k: int):
        key = (g, k)
        if key not in self._powers:
            h = connected_elimination_order(g).relabeled()
            base = complementary_edge_ideal(h)
            prev = self._powers.get((g, k - 1)) if k > 1 else None
            if prev is not None:
                self._powers[key] = ideal_product(prev, base)
            else:
                self._powers[key] = ideal_power(base, k)
        return self._powers[key]

    def __call__(self, g: Graph, k: int) -> DepthValue:
        ideal = self.power(g, k)
        if self.prefer == "auto":
            qs = linear_quotients_sets(ideal)
            if qs.has_lq:
                d = depth_via_linear_quotients(ideal, qs)
                other = None
                self.counts["linear-quotients"] += 1
                if self.crosscheck:
                    other = self.oracle_depth(g, k)
                    self.counts["crosschecked"] += 1
                    if other != d:
                        raise InconsistencyError(
                            f"linear quotients give depth {d} but the oracle gives {other} (k={k})"
                        )
                return DepthValue(d, "linear-quotients", other)
        self.counts["oracle"] += 1
        return DepthValue(self.oracle_depth(g, k), "oracle", None)


def depth_of_power(g: Graph, k: int, evaluator: Optional[Callable] = None) -> int:
    ev = evaluator or DepthEvaluator()
    return ev(g, k).depth


def depth_table(g: Graph, kmax: int, evaluator: Optional[Callable] = None) -> list:
    """``[(k, depth S/I_c(G)^k)]`` for k = 1..kmax."""
    ev = evaluator or DepthEvaluator()
    return [(k, ev(g, k).depth) for k in range(1, kmax + 1)]


def depth_disjoint_union(table1: Optional[Mapping[int, int]], table2: Optional[Mapping[int, int]],
                         n: int, m: int, k: int) -> int:
    """depth S/I_c(G1 + G2)^k from the depth tables of the two factors.

    ``table1[a]`` is depth S1/I1^a for the factor on n vertices, ``table2[b]``
    the same for the factor on m vertices.  Pass ``None`` for a factor whose
    complementary edge ideal is the unit ideal (a single edge on two vertices).

    With x = x_1...x_n and y = y_1...y_m the ideal is I = y I1 + x I2, and
    I^k is the sum of L_h = y^(k-h) x^h I1^(k-h) I2^h for h = 0..k.  Adding
    the L_h one at a time, the intersection at step h is
    x^h y^(k-h+1) I1^(k-h) I2^(h-1).  Writing D(a, b) for depth S/(I1^a I2^b)
    this gives

        depth S/I^k = min( D(k-h, h) for 0 <= h <= k,
                           D(k-h, h-1) - 1 for 1 <= h <= k ).

    D(a, b) is t1[a] + t2[b] + 1 when both factors are proper, t1[a] + m or
    t2[b] + n when one of them is the unit ideal, and n + m - 1 when both are
    (the principal ideal x^h y^(k-h)).  Exponent 0 counts as the unit ideal.
    """
    if k < 1:
        raise IdealError(f"power must be at least 1, got {k}")
    for name, table in (("first", table1), ("second", table2)):
        if table is not None:
            missing = [a for a in range(1, k + 1) if a not in table]
            if missing:
                raise IdealError(f"{name} depth table lacks exponents {missing}")

    def d(a: int, b: int) -> int:
        unit1 = a == 0 or table1 is None
        unit2 = b == 0 or table2 is None
        if unit1 and unit2:
            return n + m - 1
        if unit1:
            return table2[b] + n
        if unit2:
            return table1[a] + m
        return table1[a] + table2[b] + 1

    terms = [d(k - h, h) for h in range(k + 1)]
    terms += [d(k - h, h - 1) - 1 for h in range(1, k + 1)]
    return min(terms)


class DepthStability(NamedTuple):
    dstab: int
    limit: int
    table: tuple  # ((k, depth), ...)
    bound: int  # n - c(G) - 1
    b: int  # b(G)


def dstab_bound(g: Graph) -> int:
    """The certified bound n - c(G) - 1 on the index of depth stability."""
    return g.n - component_profile(g).c - 1


def dstab(g: Graph, evaluator: Optional[Callable] = None, kmax: Optional[int] = None) -> DepthStability:
    """Depth table up to the certified bound plus one step, with its stabilization index.

    The index is the first k from which the table is constant.  If the
    table is still moving at the bound, or settles on a value other than
    b(G), an :class:`InconsistencyError` is raised.  ``kmax`` may extend the
    table beyond the bound but never shortens it.
    """
    if g.n < 3:
        raise GraphError("depth stability needs at least three vertices")
    if g.m == 0:
        raise GraphError("depth stability needs at least one edge")
    prof = component_profile(g)
    bound = g.n - prof.c - 1
    top = max(bound + 1, kmax or 0)
    table = depth_table(g, top, evaluator)
    values = [d for _, d in table]
    for earlier, later in zip(values, values[1:]):
        if later > earlier:
            raise InconsistencyError(f"depth function increases: {values}")
    limit = values[-1]
    idx = len(values)
    while idx > 1 and values[idx - 2] == limit:
        idx -= 1
    if idx > bound:
        raise InconsistencyError(f"depth not stable by k={bound}: {values}")
    if limit != prof.b:
        raise InconsistencyError(f"limit depth {limit} differs from b(G)={prof.b}")
    return DepthStability(idx, limit, tuple(table), bound, prof.b)
