"""Exact monomial and monomial-ideal arithmetic.

A monomial is a tuple of non-negative exponents, one per ring variable, so
``(1, 0, 2)`` is ``x_1 x_3^2``.  Python's tuple comparison is exactly the
lexicographic order induced by ``x_1 > x_2 > ... > x_n``, which is the only
generator order used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import IdealError
from .graphs import Graph

__all__ = [
    "MAX_EXPONENT",
    "MonomialIdeal",
    "QuotientSets",
    "variable",
    "divides",
    "mono_mul",
    "mono_div",
    "mono_lcm",
    "mono_gcd",
    "degree",
    "format_monomial",
    "minimalize",
    "complementary_edge_ideal",
    "complementary_generators",
    "edge_ideal",
    "ideal_power",
    "ideal_product",
    "colon_by_monomial",
    "linear_quotients_sets",
    "depth_via_linear_quotients",
    "set_union_of_generators",
    "is_max_ideal_associated",
    "format_ideal",
    "parse_ideal",
]

# exponents are conceptually int16; larger values signal runaway powers
MAX_EXPONENT = 2**15 - 1


def variable(n: int, i: int) -> tuple:
    """The monomial x_i in n variables (1-indexed)."""
    return tuple(1 if j == i - 1 else 0 for j in range(n))


def divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a, b) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_gcd(a, b) -> tuple:
    return tuple(x if x < y else y for x, y in zip(a, b))


def degree(a) -> int:
    return sum(a)


def format_monomial(a, var: str = "x") -> str:
    parts = []
    for i, e in enumerate(a, 1):
        if e == 1:
            parts.append(f"{var}{i}")
        elif e > 1:
            parts.append(f"{var}{i}^{e}")
    return "*".join(parts) if parts else "1"


def minimalize(gens: Iterable[Sequence[int]]) -> list:
    """Divisibility-minimal elements of ``gens`` (duplicates removed)."""
    uniq = sorted({tuple(g) for g in gens}, key=lambda g: (sum(g), g))
    out = []
    for g in uniq:
        if not any(divides(h, g) for h in out):
            out.append(g)
    return out


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in ``ring_size`` variables, stored by its minimal generators.

    ``gens`` is always minimal and sorted in strictly decreasing lex order.
    The zero ideal is represented by an empty ``gens``.
    """

    ring_size: int
    gens: tuple = ()

    def __post_init__(self):
        n = self.ring_size
        cleaned = []
        for g in self.gens:
            g = tuple(int(e) for e in g)
            if len(g) != n:
                raise IdealError(f"monomial {g} does not live in {n} variables")
            if any(e < 0 for e in g):
                raise IdealError(f"negative exponent in {g}")
            if any(e > MAX_EXPONENT for e in g):
                raise OverflowError(f"exponent exceeds {MAX_EXPONENT} in {g}")
            cleaned.append(g)
        object.__setattr__(self, "gens", tuple(sorted(minimalize(cleaned), reverse=True)))

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, mono) -> bool:
        mono = tuple(mono)
        return any(divides(g, mono) for g in self.gens)

    @property
    def is_equigenerated(self) -> bool:
        return len({sum(g) for g in self.gens}) <= 1

    @property
    def generator_degrees(self) -> list:
        return [sum(g) for g in self.gens]

    def lcm(self) -> tuple:
        out = (0,) * self.ring_size
        for g in self.gens:
            out = mono_lcm(out, g)
        return out

    def __str__(self):
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


def complementary_generators(g: Graph) -> list:
    """The generators x_[n] / (x_i x_j), one per edge, in the canonical edge order."""
    out = []
    for i, j in g.edges:
        out.append(tuple(0 if v in (i, j) else 1 for v in g.vertices))
    return out


def complementary_edge_ideal(g: Graph) -> MonomialIdeal:
    """I_c(G), generated in degree n - 2 by the complements of the edges."""
    if g.m == 0:
        raise IdealError("edgeless graph: the complementary edge ideal is zero")
    return MonomialIdeal(g.n, tuple(complementary_generators(g)))


def edge_ideal(g: Graph) -> MonomialIdeal:
    if g.m == 0:
        raise IdealError("edgeless graph: the edge ideal is zero")
    gens = [tuple(1 if v in e else 0 for v in g.vertices) for e in g.edges]
    return MonomialIdeal(g.n, tuple(gens))


def ideal_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.ring_size != b.ring_size:
        raise IdealError("ideals live in different rings")
    return MonomialIdeal(a.ring_size, tuple({mono_mul(u, v) for u in a.gens for v in b.gens}))


def ideal_power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """Minimal generators of ``ideal ** k`` (k >= 1)."""
    if k < 1:
        raise IdealError(f"power must be at least 1, got {k}")
    out = ideal
    for _ in range(k - 1):
        out = ideal_product(out, ideal)
    return out


def colon_by_monomial(ideal: MonomialIdeal, u: Sequence[int]) -> MonomialIdeal:
    """I : (u), generated by v / gcd(v, u) for v in G(I)."""
    u = tuple(u)
    return MonomialIdeal(
        ideal.ring_size, tuple(tuple(max(a - b, 0) for a, b in zip(v, u)) for v in ideal.gens)
    )


class QuotientSets(NamedTuple):
    has_lq: bool
    sets: tuple  # sets[j] = frozenset of 1-indexed variables, aligned with ideal.gens


def linear_quotients_sets(ideal: MonomialIdeal) -> QuotientSets:
    """Check linear quotients in the stored (decreasing lex) order.

    For each generator u_j the colon (u_1, ..., u_{j-1}) : u_j is generated
    by the monomials u_i / gcd(u_i, u_j).  It is generated by variables iff
    every such quotient is divisible by one of the quotients of degree one.
    """
    gens = ideal.gens
    sets = []
    ok = True
    for j, uj in enumerate(gens):
        quots = [tuple(a - b if a > b else 0 for a, b in zip(ui, uj)) for ui in gens[:j]]
        lin = set()
        for q in quots:
            if sum(q) == 1:
                lin.add(next(i for i, e in enumerate(q) if e))
        sets.append(frozenset(i + 1 for i in lin))
        if ok:
            for q in quots:
                if not any(q[i] for i in lin):
                    ok = False
                    break
    return QuotientSets(ok, tuple(sets))


def depth_via_linear_quotients(ideal: MonomialIdeal, sets: Optional[QuotientSets] = None) -> int:
    """depth S/I = n - max_j |set(u_j)| - 1 for an ideal with linear quotients."""
    qs = sets if sets is not None else linear_quotients_sets(ideal)
    if not qs.has_lq:
        raise IdealError("ideal has no linear quotients in decreasing lex order")
    return ideal.ring_size - max(len(s) for s in qs.sets) - 1


def set_union_of_generators(ideal: MonomialIdeal) -> set:
    qs = linear_quotients_sets(ideal)
    if not qs.has_lq:
        raise IdealError("ideal has no linear quotients in decreasing lex order")
    out = set()
    for s in qs.sets:
        out |= s
    return out


def is_max_ideal_associated(ideal: MonomialIdeal) -> tuple:
    """Decide whether the maximal ideal is associated to ``ideal``.

    Returns ``(True, u)`` with u not in I and I : u = m, or ``(False, None)``.
    If x^a is the lcm of G(I) then membership of a monomial only depends on
    its exponents capped at a, so a witness can be taken with u_i < a_i.
    Since x_i u must reach the smallest generator degree, candidates of lower
    degree are skipped.
    """
    n = ideal.ring_size
    if not ideal.gens:
        return False, None
    top = ideal.lcm()
    if any(e == 0 for e in top):
        # some variable never occurs, so it is a non-zerodivisor on S/I
        return False, None
    dmin = min(ideal.generator_degrees)
    for u in product(*(range(a) for a in top)):
        if sum(u) < dmin - 1:
            continue
        if u in ideal:
            continue
        if all(tuple(e + (1 if t == i else 0) for t, e in enumerate(u)) in ideal for i in range(n)):
            return True, u
    return False, None


def format_ideal(ideal: MonomialIdeal) -> str:
    """One generator per line as a space-separated exponent vector."""
    return "".join(" ".join(str(e) for e in g) + "\n" for g in ideal.gens)


def parse_ideal(text: str, ring_size: Optional[int] = None) -> MonomialIdeal:
    gens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            gens.append(tuple(int(t) for t in line.split()))
    if ring_size is None:
        if not gens:
            raise IdealError("cannot infer the ring size of an empty generator list")
        ring_size = len(gens[0])
    return MonomialIdeal(ring_size, tuple(gens))
