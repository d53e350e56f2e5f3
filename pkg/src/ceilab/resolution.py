"""Graded Betti numbers of S/I for monomial ideals, computed from scratch.

Two independent routes are provided.

``taylor``
    Homology of the Taylor complex tensored with the residue field.  After
    tensoring, a boundary term survives only when deleting a generator keeps
    the lcm unchanged, so the complex splits into one small complex per
    multidegree (the lcm of the subsets in it).

``koszul``
    For each multidegree b, beta_{i,b}(I) is the reduced homology
    H~_{i-1} of the upper Koszul simplicial complex
    K^b(I) = {F subset of supp(b) : x^(b - F) in I}.  Only multidegrees that
    are lcms of generators can carry homology, so every candidate b is first
    tested against the lcm of the generators dividing it.

Both are exact over Q.  ``auto`` picks Taylor for small generating sets and
the simplicial route beyond that.
"""

from __future__ import annotations

import csv
import io
from itertools import product
from typing import Dict, Iterable, Optional, Tuple

from . import budget
from .errors import IdealError, ResourceError
from .linalg import sparse_rank
from .monomials import MonomialIdeal, divides, mono_lcm

__all__ = [
    "TAYLOR_CAP",
    "AUTO_TAYLOR_LIMIT",
    "BettiTable",
    "multigraded_betti",
    "taylor_betti",
    "koszul_betti",
    "betti_table",
    "projective_dimension",
    "depth_oracle",
    "regularity_oracle",
]

TAYLOR_CAP = 18
AUTO_TAYLOR_LIMIT = 10

Multigraded = Dict[Tuple[int, tuple], int]


class BettiTable:
    """Graded Betti numbers beta_{i,j} of S/I, keyed by (homological degree, degree)."""

    def __init__(self, ring_size: int, entries: Dict[Tuple[int, int], int],
                 multigraded: Optional[Multigraded] = None):
        self.ring_size = ring_size
        self.entries = {k: v for k, v in entries.items() if v}
        self.multigraded = multigraded

    @classmethod
    def from_multigraded(cls, ring_size: int, mg: Multigraded) -> "BettiTable":
        ent: Dict[Tuple[int, int], int] = {}
        for (i, b), v in mg.items():
            key = (i, sum(b))
            ent[key] = ent.get(key, 0) + v
        return cls(ring_size, ent, mg)

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def __repr__(self):
        return f"BettiTable({dict(sorted(self.entries.items()))})"

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def depth(self) -> int:
        # Auslander-Buchsbaum
        return self.ring_size - self.projective_dimension

    @property
    def regularity(self) -> int:
        """reg(S/I) = max{j - i : beta_{i,j} != 0}."""
        return max(j - i for i, j in self.entries)

    def to_csv(self) -> str:
        """Rows are homological degrees i, columns internal degrees j."""
        rows = sorted({i for i, _ in self.entries})
        cols = sorted({j for _, j in self.entries})
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i"] + [str(j) for j in cols])
        for i in range(0, max(rows) + 1):
            w.writerow([str(i)] + [str(self[(i, j)]) for j in cols])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, ring_size: int) -> "BettiTable":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        cols = [int(j) for j in header[1:]]
        ent = {}
        for row in reader:
            i = int(row[0])
            for j, v in zip(cols, row[1:]):
                if int(v):
                    ent[(i, j)] = int(v)
        return cls(ring_size, ent)


# --------------------------------------------------------------------------
# Taylor complex


def taylor_betti(ideal: MonomialIdeal, cap: int = TAYLOR_CAP) -> Multigraded:
    """Multigraded Betti numbers of S/I from the Taylor complex."""
    gens = list(ideal.gens)
    m = len(gens)
    if m == 0:
        raise IdealError("the zero ideal has no Taylor complex")
    if m > cap:
        raise ResourceError(f"Taylor complex on {m} generators exceeds the cap of {cap}")
    n = ideal.ring_size
    size = 1 << m
    lcms = [None] * size
    lcms[0] = (0,) * n
    strata: Dict[tuple, list] = {}
    for mask in range(size):
        if mask:
            low = mask & -mask
            lcms[mask] = mono_lcm(lcms[mask ^ low], gens[low.bit_length() - 1])
        strata.setdefault(lcms[mask], []).append(mask)
        if not mask & 0xFFF:
            budget.check("Taylor complex")
    out: Multigraded = {}
    for b, masks in strata.items():
        by_size: Dict[int, list] = {}
        for mask in masks:
            by_size.setdefault(bin(mask).count("1"), []).append(mask)
        index = {s: {mk: t for t, mk in enumerate(ms)} for s, ms in by_size.items()}
        ranks = {}
        for s, ms in by_size.items():
            lower = index.get(s - 1)
            if not lower or s == 0:
                ranks[s] = 0
                continue
            rows = []
            for mk in ms:
                row = {}
                sign = 1
                bits = mk
                while bits:
                    low = bits & -bits
                    face = mk ^ low
                    t = lower.get(face)
                    if t is not None:
                        row[t] = sign
                    sign = -sign
                    bits ^= low
                rows.append(row)
            ranks[s] = sparse_rank(rows)
            budget.check("Taylor complex")
        for s, ms in by_size.items():
            beta = len(ms) - ranks.get(s, 0) - ranks.get(s + 1, 0)
            if beta:
                out[(s, b)] = beta
    return out


# --------------------------------------------------------------------------
# upper Koszul simplicial complexes


def _reduced_homology_ranks(faces: Iterable[int]) -> Dict[int, int]:
    """Reduced Betti numbers of a complex given as face bitmasks (empty face included)."""
    by_dim: Dict[int, list] = {}
    for f in faces:
        by_dim.setdefault(bin(f).count("1") - 1, []).append(f)
    index = {d: {f: t for t, f in enumerate(fs)} for d, fs in by_dim.items()}
    ranks = {}
    for d, fs in by_dim.items():
        lower = index.get(d - 1)
        if lower is None:
            ranks[d] = 0
            continue
        rows = []
        for f in fs:
            row = {}
            sign = 1
            bits = f
            while bits:
                low = bits & -bits
                row[lower[f ^ low]] = sign
                sign = -sign
                bits ^= low
            rows.append(row)
        ranks[d] = sparse_rank(rows)
    return {d: len(fs) - ranks[d] - ranks.get(d + 1, 0) for d, fs in by_dim.items()}


def _is_cone(faces: set, support_bits: list) -> bool:
    for v in support_bits:
        if all((f | v) in faces for f in faces):
            return True
    return False


def _candidate_degrees(gens, n):
    top = (0,) * n
    for g in gens:
        top = mono_lcm(top, g)
    for b in product(*(range(a + 1) for a in top)):
        below = [g for g in gens if divides(g, b)]
        if not below:
            continue
        lc = below[0]
        for g in below[1:]:
            lc = mono_lcm(lc, g)
        if lc == b:
            yield b, below


def koszul_betti(ideal: MonomialIdeal) -> Multigraded:
    """Multigraded Betti numbers of S/I via upper Koszul simplicial complexes."""
    gens = list(ideal.gens)
    if not gens:
        raise IdealError("the zero ideal is not supported")
    n = ideal.ring_size
    squarefree = all(e <= 1 for g in gens for e in g)
    out: Multigraded = {(0, (0,) * n): 1}
    count = 0
    for b, below in _candidate_degrees(gens, n):
        count += 1
        if not count & 0xFF:
            budget.check("Koszul simplicial complex")
        supp = [i for i, e in enumerate(b) if e]
        k = len(supp)
        if squarefree:
            gmasks = [sum(1 << i for i, e in enumerate(g) if e) for g in below]
            faces = set()
            for sub in range(1 << k):
                f = 0
                for t in range(k):
                    if sub >> t & 1:
                        f |= 1 << supp[t]
                if any(not (gm & f) for gm in gmasks):
                    faces.add(f)
        else:
            faces = set()
            for sub in range(1 << k):
                f = 0
                mono = list(b)
                for t in range(k):
                    if sub >> t & 1:
                        f |= 1 << supp[t]
                        mono[supp[t]] -= 1
                if any(divides(g, mono) for g in below):
                    faces.add(f)
        if len(faces) > 1 and _is_cone(faces, [1 << i for i in supp]):
            continue
        for d, beta in _reduced_homology_ranks(faces).items():
            if beta:
                # beta_{d+1,b}(I) = beta_{d+2,b}(S/I)
                out[(d + 2, b)] = out.get((d + 2, b), 0) + beta
    return out


# --------------------------------------------------------------------------
# front ends


def multigraded_betti(ideal: MonomialIdeal, method: str = "auto") -> Multigraded:
    if method == "auto":
        method = "taylor" if len(ideal.gens) <= AUTO_TAYLOR_LIMIT else "koszul"
    if method == "taylor":
        return taylor_betti(ideal)
    if method == "koszul":
        return koszul_betti(ideal)
    raise ValueError(f"unknown method {method!r}")


def betti_table(ideal: MonomialIdeal, method: str = "auto") -> BettiTable:
    return BettiTable.from_multigraded(ideal.ring_size, multigraded_betti(ideal, method))


def projective_dimension(ideal: MonomialIdeal, method: str = "auto") -> int:
    return betti_table(ideal, method).projective_dimension


def depth_oracle(ideal: MonomialIdeal, method: str = "auto") -> int:
    """depth S/I = n - pd(S/I)."""
    return betti_table(ideal, method).depth


def regularity_oracle(ideal: MonomialIdeal, method: str = "auto") -> int:
    """reg(I) = reg(S/I) + 1."""
    return betti_table(ideal, method).regularity + 1
