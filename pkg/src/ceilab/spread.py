"""Analytic spread of I(G) and I_c(G) by exact rank computations.

For an equigenerated monomial ideal the analytic spread is the rank of the
exponent matrix.  For I(G) that is the incidence matrix B (one row per edge),
for I_c(G) it is A - B with A the all-ones matrix of the same shape.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import GraphError, HypothesisViolation
from .graphs import Graph, component_profile, is_connected, odd_cycle_violation
from .linalg import RationalMatrix, kernel_basis, matvec, rank

__all__ = [
    "incidence_matrix",
    "ones_matrix",
    "analytic_spread",
    "rank_lemma_check",
    "random_lemma_pair",
    "KernelInfo",
    "kernel_dimension_of_incidence",
    "NormalityCertificate",
    "normality_certificate",
]


def incidence_matrix(g: Graph) -> RationalMatrix:
    """m x n 0/1 matrix with b_ij = 1 iff vertex j lies on the i-th edge (canonical edge order)."""
    if g.m == 0:
        raise GraphError("the incidence matrix of an edgeless graph is empty")
    rows = [[1 if v in e else 0 for v in g.vertices] for e in g.edges]
    return RationalMatrix.from_rows(rows)


def ones_matrix(rows: int, cols: int) -> RationalMatrix:
    return RationalMatrix(rows, cols, ((1,) * cols,) * rows)


def analytic_spread(g: Graph, which: str = "complementary") -> int:
    """l(I(G)) = rank B for ``which="edge"``, l(I_c(G)) = rank(A - B) for ``"complementary"``."""
    if g.n < 3:
        raise GraphError("analytic spread is computed for graphs on at least three vertices")
    b = incidence_matrix(g)
    if which == "edge":
        return rank(b)
    if which == "complementary":
        return rank(ones_matrix(b.rows, b.cols) - b)
    raise ValueError(f"unknown ideal {which!r}; expected 'edge' or 'complementary'")


def _check_hypotheses(a: RationalMatrix, b: RationalMatrix) -> tuple:
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise HypothesisViolation(f"shape mismatch: A is {a.rows}x{a.cols}, B is {b.rows}x{b.cols}")
    if a.cols == 0 or a.rows == 0:
        raise HypothesisViolation("matrices must be non-empty")
    bsums = set(b.column_sums())
    if len(bsums) != 1:
        raise HypothesisViolation("(i) the columns of B do not have a common sum")
    bsum = bsums.pop()
    if bsum <= 0:
        raise HypothesisViolation(f"(i) the common column sum of B is {bsum}, not positive")
    for i, row in enumerate(a.entries):
        if len(set(row)) != 1:
            raise HypothesisViolation(f"(ii) row {i + 1} of A is not constant")
    asum = a.column_sums()[0]
    if asum <= bsum:
        raise HypothesisViolation(f"(ii) the column sum of A is {asum}, not larger than {bsum}")
    return asum, bsum


def _in_kernel(mat: RationalMatrix, v) -> bool:
    return all(x == 0 for x in matvec(mat, v))


def rank_lemma_check(a: RationalMatrix, b: RationalMatrix) -> bool:
    """rank(A - B) == rank(B) together with Ker(A - B) == Ker(B).

    A must have constant rows and B constant positive column sums smaller
    than those of A; otherwise :class:`HypothesisViolation` names the
    failing hypothesis.  The kernels are compared by checking that each
    basis lies in the other kernel.
    """
    _check_hypotheses(a, b)
    diff = a - b
    if rank(diff) != rank(b):
        return False
    kd, kb = kernel_basis(diff), kernel_basis(b)
    return all(_in_kernel(b, v) for v in kd) and all(_in_kernel(diff, v) for v in kb)


def random_lemma_pair(rng: random.Random, rows: Optional[int] = None,
                      cols: Optional[int] = None) -> tuple:
    """A random integer pair (A, B) satisfying the lemma's hypotheses exactly.

    Entries are drawn from 0..9; the last row of B is chosen so that every
    column reaches the same sum, and the last row of A makes its column sum
    exceed that of B.
    """
    n = rows if rows is not None else rng.randint(2, 6)
    m = cols if cols is not None else rng.randint(1, 6)
    top = [[rng.randint(0, 9) for _ in range(m)] for _ in range(n - 1)]
    sums = [sum(r[j] for r in top) for j in range(m)]
    bsum = max(sums) + rng.randint(0 if max(sums) > 0 else 1, 9)
    brows = top + [[bsum - s for s in sums]]
    consts = [rng.randint(0, 9) for _ in range(n - 1)]
    asum = max(bsum + 1, sum(consts)) + rng.randint(0, 9)
    consts.append(asum - sum(consts))
    arows = [[c] * m for c in consts]
    return RationalMatrix.from_rows(arows), RationalMatrix.from_rows(brows)


class KernelInfo(NamedTuple):
    dimension: int
    vector: Optional[tuple]  # +1 on one side, -1 on the other, for bipartite graphs


def kernel_dimension_of_incidence(g: Graph) -> KernelInfo:
    """dim Ker(B) for a connected graph: 1 when bipartite, 0 otherwise.

    For a bipartite graph the explicit kernel vector is checked by
    multiplication.
    """
    if not is_connected(g):
        raise GraphError("kernel dimension is computed per connected component")
    b = incidence_matrix(g)
    dim = len(kernel_basis(b))
    split = component_profile(g).bipartitions[0]
    vec = None
    if split is not None:
        side = set(split[0])
        vec = tuple(Fraction(1) if v in side else Fraction(-1) for v in g.vertices)
        if not _in_kernel(b, vec):  # pragma: no cover - a 2-colouring always gives a kernel vector
            raise GraphError("2-colouring does not give a kernel vector")
        vec = tuple(int(x) for x in vec)
    return KernelInfo(dim, vec)


class NormalityCertificate(NamedTuple):
    normal: bool
    odd_cycle_condition: bool
    violation: Optional[tuple]  # two far-apart chordless odd cycles when the condition fails


def normality_certificate(g: Graph) -> NormalityCertificate:
    """Normality of R(I(G)), F(I(G)), R(I_c(G)) and F(I_c(G)) via the odd cycle condition.

    No normalization is computed: the odd cycle condition is used as the
    certificate for all four rings at once.
    """
    bad = odd_cycle_violation(g)
    return NormalityCertificate(bad is None, bad is None, bad)
