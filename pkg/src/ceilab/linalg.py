"""Exact rational matrices: rank and kernels by fraction-free elimination."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

__all__ = ["RationalMatrix", "rank", "sparse_rank", "kernel_basis", "matvec"]


@dataclass(frozen=True)
class RationalMatrix:
    """Dense matrix of exact rationals; ``entries`` is a tuple of row tuples."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        ent = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        if len(ent) != self.rows or any(len(r) != self.cols for r in ent):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", ent)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, tuple(tuple(r) for r in rows))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else ())

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return RationalMatrix(
            self.rows,
            self.cols,
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)),
        )

    def column_sums(self) -> list:
        return [sum(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)]

    def integer_rows(self) -> list:
        """Rows scaled by the lcm of their denominators (same row space)."""
        out = []
        for row in self.entries:
            den = 1
            for x in row:
                den = lcm(den, x.denominator)
            out.append([int(x * den) for x in row])
        return out


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {k: v // g for k, v in row.items()} if g > 1 else row


def sparse_rank(rows: Sequence[dict]) -> int:
    """Rank over Q of integer rows given as ``{column: value}`` dicts.

    Fraction-free elimination: a row is reduced by ``p * row - f * pivot_row``
    and divided by its content, so entries stay integral and small.
    """
    pivots = {}  # column -> pivot row
    r = 0
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        while row:
            col = min(row)
            prow = pivots.get(col)
            if prow is None:
                pivots[col] = _primitive(row)
                r += 1
                break
            p, f = prow[col], row[col]
            new = {k: p * v for k, v in row.items()}
            for k, v in prow.items():
                nv = new.get(k, 0) - f * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            row = _primitive(new)
    return r


def rank(mat) -> int:
    """Exact rank of a :class:`RationalMatrix` or a list of integer/rational rows."""
    if isinstance(mat, RationalMatrix):
        rows = mat.integer_rows()
    else:
        rows = RationalMatrix.from_rows(mat).integer_rows() if mat else []
    return sparse_rank([{j: v for j, v in enumerate(r) if v} for r in rows])


def kernel_basis(mat: RationalMatrix) -> list:
    """Basis of the right null space as lists of Fractions (reduced row echelon form)."""
    m = [list(r) for r in mat.entries]
    ncols = mat.cols
    pivcols = []
    prow = 0
    for c in range(ncols):
        piv = next((i for i in range(prow, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[prow], m[piv] = m[piv], m[prow]
        p = m[prow][c]
        m[prow] = [x / p for x in m[prow]]
        for i in range(len(m)):
            if i != prow and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[prow])]
        pivcols.append(c)
        prow += 1
    free = [c for c in range(ncols) if c not in pivcols]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivcols):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def matvec(mat: RationalMatrix, v: Sequence) -> list:
    return [sum(a * b for a, b in zip(row, v)) for row in mat.entries]
