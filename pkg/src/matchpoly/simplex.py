"""Dense exact-rational simplex with Bland's rule.

Standard form: maximize/minimize c·x subject to A x = b, x >= 0, all data
rational.  Two phases; Bland's anti-cycling pivot rule makes every run
deterministic.  Dense fraction tableaus are fine at desk scale.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class Infeasible(Exception):
    """The constraint system has no nonnegative solution."""


class Unbounded(Exception):
    """The objective is unbounded over the feasible region."""


def _pivot(tab: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    piv = tab[r][c]
    tab[r] = [v / piv for v in tab[r]]
    for i, row in enumerate(tab):
        if i != r and row[c] != 0:
            f = row[c]
            tab[i] = [v - f * w for v, w in zip(row, tab[r])]
    basis[r] = c


def _run_simplex(tab: list[list[Fraction]], basis: list[int], n_cols: int) -> None:
    """Minimize the objective encoded in the last tableau row (Bland's rule)."""
    m = len(tab) - 1
    while True:
        obj = tab[m]
        col = None
        for j in range(n_cols):
            if obj[j] < 0:
                col = j
                break
        if col is None:
            return
        row = None
        best = None
        for i in range(m):
            if tab[i][col] > 0:
                ratio = tab[i][-1] / tab[i][col]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[row]):
                    best = ratio
                    row = i
        if row is None:
            raise Unbounded("improving column has no positive entries")
        _pivot(tab, basis, row, col)


def solve_lp(a_rows: Sequence[Sequence[Fraction]],
             b: Sequence[Fraction],
             cost: Sequence[Fraction],
             sense: str = "max") -> tuple[Fraction, list[Fraction]]:
    """Solve max/min cost·x s.t. A x = b, x >= 0 exactly.

    Returns (optimal value, an optimal x).  Raises Infeasible or Unbounded.
    """
    if sense not in ("max", "min"):
        raise ValueError("sense must be max|min")
    m = len(a_rows)
    n = len(cost)
    a = [[Fraction(v) for v in row] for row in a_rows]
    rhs = [Fraction(v) for v in b]
    for i in range(m):
        if rhs[i] < 0:
            a[i] = [-v for v in a[i]]
            rhs[i] = -rhs[i]

    # phase 1: minimize the sum of artificials
    n_art = m
    tab = [a[i] + [Fraction(1) if j == i else Fraction(0) for j in range(n_art)]
           + [rhs[i]] for i in range(m)]
    obj = [Fraction(0)] * (n + n_art + 1)
    for i in range(m):
        for j in range(n):
            obj[j] -= tab[i][j]
        obj[-1] -= tab[i][-1]
    tab.append(obj)
    basis = [n + i for i in range(m)]
    _run_simplex(tab, basis, n + n_art)
    if tab[m][-1] != 0:
        raise Infeasible("phase-1 optimum nonzero")

    # drive remaining artificials out of the basis; drop redundant rows
    keep = []
    for i in range(m):
        if basis[i] >= n:
            col = None
            for j in range(n):
                if tab[i][j] != 0:
                    col = j
                    break
            if col is None:
                continue  # redundant constraint row
            _pivot(tab, basis, i, col)
        keep.append(i)

    # phase 2 on the original columns
    tab2 = [[tab[i][j] for j in range(n)] + [tab[i][-1]] for i in keep]
    basis2 = [basis[i] for i in keep]
    c2 = [Fraction(v) for v in cost]
    if sense == "max":
        c2 = [-v for v in c2]
    obj2 = list(c2) + [Fraction(0)]
    for i, bi in enumerate(basis2):
        if obj2[bi] != 0:
            f = obj2[bi]
            obj2 = [v - f * w for v, w in zip(obj2, tab2[i])]
    tab2.append(obj2)
    _run_simplex(tab2, basis2, n)

    x = [Fraction(0)] * n
    for i, bi in enumerate(basis2):
        x[bi] = tab2[i][-1]
    value = sum(ci * xi for ci, xi in zip(cost, x))
    return value, x


def feasible(a_rows: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> bool:
    """Phase-1 feasibility of A x = b, x >= 0."""
    try:
        solve_lp(a_rows, b, [Fraction(0)] * (len(a_rows[0]) if a_rows else 0),
                 sense="min")
        return True
    except Infeasible:
        return False
