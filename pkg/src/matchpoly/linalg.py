"""Exact integer/rational linear algebra: rank, nullspace, affine hulls.

Everything here works on small dense matrices (tens of columns) with Python
integers and fractions; no floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def _normalize_int_row(row: list[int]) -> list[int]:
    g = 0
    for a in row:
        g = gcd(g, a)
    if g > 1:
        row = [a // g for a in row]
    # sign convention: first nonzero entry positive
    for a in row:
        if a != 0:
            if a < 0:
                row = [-x for x in row]
            break
    return row


class IntEchelon:
    """Incremental integer row echelon form (fraction-free reduction)."""

    def __init__(self, n_cols: int):
        self.n_cols = n_cols
        self.pivot_rows: list[list[int]] = []   # each with distinct pivot col
        self.pivot_cols: list[int] = []

    def reduce(self, row: Sequence[int]) -> list[int]:
        """Reduce a row against the current basis; returns the residue."""
        r = list(row)
        for prow, pc in zip(self.pivot_rows, self.pivot_cols):
            if r[pc] != 0:
                a, b = prow[pc], r[pc]
                g = gcd(a, b)
                ma, mb = a // g, b // g
                r = [ma * x - mb * y for x, y in zip(r, prow)]
        return _normalize_int_row(r)

    def add(self, row: Sequence[int]) -> bool:
        """Insert a row; returns True if it increased the rank."""
        r = self.reduce(row)
        for c, a in enumerate(r):
            if a != 0:
                self.pivot_rows.append(r)
                self.pivot_cols.append(c)
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def contains(self, row: Sequence[int]) -> bool:
        return all(a == 0 for a in self.reduce(row))


def row_rank(rows: Sequence[Sequence[int]], n_cols: int) -> int:
    ech = IntEchelon(n_cols)
    for r in rows:
        ech.add(r)
        if ech.rank == n_cols:
            break
    return ech.rank


def nullspace(rows: Sequence[Sequence[int]], n_cols: int) -> list[tuple[int, ...]]:
    """Integer basis of {x : R x = 0} for integer rows R."""
    ech = IntEchelon(n_cols)
    for r in rows:
        ech.add(r)
    order = sorted(range(ech.rank), key=lambda i: ech.pivot_cols[i])
    prows = [ech.pivot_rows[i] for i in order]
    pcols = [ech.pivot_cols[i] for i in order]
    free = [c for c in range(n_cols) if c not in set(pcols)]
    basis = []
    for fc in free:
        x: list[Fraction] = [Fraction(0)] * n_cols
        x[fc] = Fraction(1)
        for i in range(len(prows) - 1, -1, -1):
            pr, pc = prows[i], pcols[i]
            acc = sum((Fraction(pr[c]) * x[c] for c in range(pc + 1, n_cols)),
                      Fraction(0))
            x[pc] = -acc / pr[pc]
        den = 1
        for v in x:
            den = den * v.denominator // gcd(den, v.denominator)
        ivec = [int(v * den) for v in x]
        basis.append(tuple(_normalize_int_row(ivec)))
    return basis


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull of integer points (0 for a single point)."""
    if not points:
        raise ValueError("no points")
    p0 = points[0]
    ech = IntEchelon(len(p0))
    for p in points[1:]:
        ech.add([a - b for a, b in zip(p, p0)])
    return ech.rank


def affine_hull_equations(points: Sequence[Sequence[int]]
                          ) -> list[tuple[tuple[int, ...], int]]:
    """Integer equations (a, c) with a·x = c exactly on the affine hull of the
    given integer points.  For the hull scaled by t, the right side is t·c."""
    if not points:
        raise ValueError("no points")
    p0 = points[0]
    n = len(p0)
    diffs = [[a - b for a, b in zip(p, p0)] for p in points[1:]]
    eqs = []
    for a in nullspace(diffs, n):
        c = sum(ai * x0 for ai, x0 in zip(a, p0))
        eqs.append((a, c))
    return eqs
