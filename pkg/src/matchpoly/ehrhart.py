"""Lattice-point counting in dilates and relative interiors, exact Ehrhart
polynomial interpolation, h*-vectors, and Gorenstein verdicts.

Counting is a depth-first assignment of edge values in canonical order with
per-vertex residual bounds; equalities are enforced as vertices complete and
odd-cut rows are filtered at the leaves (vectorized over integer arrays, which
is exact: all magnitudes are tiny).  Relative interiors are counted by the
substitution x = y + lb, which turns strict rows into integer-tightened weak
rows.
"""

from __future__ import annotations

import array
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

import numpy as np

from . import linalg
from .budget import Budget
from .polytopes import ScalableHRep

_BIG = 1 << 40
_CACHE_ENTRIES = 4


class DataIntegrityError(RuntimeError):
    """Counts, interpolant and h*-data disagree; something upstream is wrong."""


# ---------------------------------------------------------------------------
# the counting core
# ---------------------------------------------------------------------------

def _shifted_system(h: ScalableHRep, t: int, region: str):
    """Lower bounds, per-edge caps, equality targets and leaf rows for the
    y = x - lb substitution."""
    ne = h.n_edges
    lb = [0] * ne
    cap = [None] * ne  # static per-edge cap override (implicit nonneg -> 0)
    interior = region == "relative_interior"
    if interior:
        for row in h.inequalities:
            if row.kind != "nonneg":
                continue
            e = row.support[0]
            if row.implicit_eq:
                cap[e] = 0
            else:
                lb[e] = 1
    b = [row.rhs_mult * t - sum(lb[e] for e in row.support)
         for row in h.equalities]
    rows = []
    for row in h.inequalities:
        if row.kind == "nonneg":
            continue
        base = row.rhs_mult * t - sum(lb[e] for e in row.support)
        if interior and row.implicit_eq:
            rows.append((row.support, "eq", base))
        elif interior:
            if base + 1 > 0:
                rows.append((row.support, "ge", base + 1))
        else:
            if base > 0:
                rows.append((row.support, "ge", base))
    return lb, cap, b, rows


def _dfs_leaves(h: ScalableHRep, b: Sequence[int], cap: Sequence[int | None],
                budget: Budget | None, collect: bool):
    """Enumerate nonnegative integer solutions of the equality system.

    Returns (count, flat int32 array of leaves or None).  Edges are assigned
    in canonical order; a vertex's residual must hit zero exactly when its
    last incident edge is assigned, and lookahead capacity bounds prune the
    rest.
    """
    ne = h.n_edges
    nq = len(h.equalities)
    if any(v < 0 for v in b):
        return 0, (np.empty(0, dtype=np.int32) if collect else None)
    edge_eqs: list[list[int]] = [[] for _ in range(ne)]
    for q, row in enumerate(h.equalities):
        for e in row.support:
            edge_eqs[e].append(q)
    if any(len(qs) > 2 for qs in edge_eqs):
        raise ValueError("an edge appears in more than two equality rows")
    deg = [0] * nq
    for qs in edge_eqs:
        for q in qs:
            deg[q] += 1
    for q in range(nq):
        if deg[q] == 0 and b[q] != 0:
            return 0, (np.empty(0, dtype=np.int32) if collect else None)
    if any(not qs for qs in edge_eqs):
        raise ValueError("an edge is not constrained by any equality row")

    dummy = nq
    res = list(b) + [_BIG]
    ends = []
    for e in range(ne):
        qs = edge_eqs[e]
        ends.append((qs[0], qs[1] if len(qs) > 1 else dummy))
    last_here = []
    seen_last: dict[int, int] = {}
    for e in range(ne):
        for q in edge_eqs[e]:
            seen_last[q] = e
    for e in range(ne):
        u, v = ends[e]
        last_here.append((seen_last.get(u) == e, seen_last.get(v) == e))
    caps = []
    for e in range(ne):
        u, v = ends[e]
        c = min(res[u], res[v])
        if cap[e] is not None and cap[e] < c:
            c = cap[e]
        caps.append(c)
    # scap[q][p] = total capacity of q's edges at positions >= p
    scap = [[0] * (ne + 1) for _ in range(nq + 1)]
    for q in range(nq):
        row = scap[q]
        acc = 0
        for e in range(ne - 1, -1, -1):
            row[e + 1] = acc
            if q in edge_eqs[e]:
                acc += caps[e]
            row[e] = acc
    scap[dummy] = [_BIG] * (ne + 1)

    vals = [0] * ne
    buf = array.array("q") if collect else None
    count = 0
    charge = budget.charge if budget is not None else None

    def rec(p: int) -> None:
        nonlocal count
        if charge is not None:
            charge()
        if p == ne:
            count += 1
            if buf is not None:
                buf.extend(vals)
            return
        u, v = ends[p]
        lu, lv = last_here[p]
        ru = res[u]
        rv = res[v]
        hi = ru if ru < rv else rv
        cp = caps[p]
        if cp < hi:
            hi = cp
        lo = ru - scap[u][p + 1]
        lo2 = rv - scap[v][p + 1]
        if lo2 > lo:
            lo = lo2
        if lo < 0:
            lo = 0
        if lu:
            if ru < lo or ru > hi:
                return
            lo = hi = ru
        if lv:
            if rv < lo or rv > hi:
                return
            lo = hi = rv
        for val in range(lo, hi + 1):
            res[u] = ru - val
            res[v] = rv - val
            vals[p] = val
            rec(p + 1)
        res[u] = ru
        res[v] = rv
        vals[p] = 0

    rec(0)
    if collect:
        arr = np.frombuffer(buf, dtype=np.int64).astype(np.int32) if count else \
            np.empty(0, dtype=np.int32)
        return count, arr.reshape(count, ne) if count else arr.reshape(0, ne)
    return count, None


def _row_filter(leaves: np.ndarray, rows, keep_points: bool):
    """Apply cut rows to equality leaves; exact (int32/int64 arithmetic)."""
    n = leaves.shape[0]
    if n == 0:
        return 0, leaves if keep_points else None
    ne = leaves.shape[1]
    ge = [(sup, tau) for (sup, op, tau) in rows if op == "ge"]
    eq = [(sup, tau) for (sup, op, tau) in rows if op == "eq"]

    def matrix(entries):
        m = np.zeros((len(entries), ne), dtype=np.int64)
        for i, (sup, _tau) in enumerate(entries):
            m[i, list(sup)] = 1
        tau = np.array([tau for (_sup, tau) in entries], dtype=np.int64)
        return m, tau

    mg, tg = matrix(ge) if ge else (None, None)
    me, te = matrix(eq) if eq else (None, None)
    ok_total = np.ones(n, dtype=bool)
    chunk = 4096
    for start in range(0, n, chunk):
        block = leaves[start:start + chunk].astype(np.int64)
        ok = np.ones(block.shape[0], dtype=bool)
        if mg is not None:
            ok &= (block @ mg.T >= tg).all(axis=1)
        if me is not None:
            ok &= (block @ me.T == te).all(axis=1)
        ok_total[start:start + chunk] = ok
    cnt = int(ok_total.sum())
    if keep_points:
        return cnt, leaves[ok_total]
    return cnt, None


def _count_impl(h: ScalableHRep, t: int, region: str,
                budget: Budget | None, want_points: bool):
    lb, cap, b, rows = _shifted_system(h, t, region)
    key = (tuple(b), tuple(-1 if c is None else c for c in cap))
    cache = h._count_cache
    cached = cache.get(key)

    if want_points or rows:
        if cached is not None and cached[0] == "leaves":
            leaves = cached[1]
        else:
            n, leaves = _dfs_leaves(h, b, cap, budget, collect=True)
            cache[key] = ("leaves", leaves)
            while len(cache) > _CACHE_ENTRIES:
                cache.pop(next(iter(cache)))
        if rows:
            cnt, pts = _row_filter(leaves, rows, keep_points=want_points)
        else:
            cnt, pts = leaves.shape[0], (leaves if want_points else None)
        if want_points:
            lbv = np.array(lb, dtype=np.int32)
            return cnt, [tuple(int(v) for v in row + lbv) for row in pts]
        return cnt, None

    if cached is not None:
        return (cached[1] if cached[0] == "count"
                else int(cached[1].shape[0])), None
    n, _ = _dfs_leaves(h, b, cap, budget, collect=False)
    cache[key] = ("count", n)
    while len(cache) > _CACHE_ENTRIES:
        cache.pop(next(iter(cache)))
    return n, None


def count_lattice_points(h: ScalableHRep, t: int, region: str = "closed",
                         *, budget: Budget | None = None) -> int:
    """Exact number of integer vectors in t·P (closed) or t·P° (interior).

    t = 0 closed gives 1 for a nonempty polytope and 0 for the empty one;
    the relative interior is only defined here for t >= 1.
    """
    if region not in ("closed", "relative_interior"):
        raise ValueError("region must be closed|relative_interior")
    if t < 0:
        raise ValueError("t must be nonnegative")
    if region == "relative_interior" and t == 0:
        raise ValueError("relative-interior counts start at t = 1")
    if not h.feasible:
        return 0
    cnt, _ = _count_impl(h, t, region, budget, want_points=False)
    return cnt


def enumerate_lattice_points(h: ScalableHRep, t: int, region: str = "closed",
                             *, budget: Budget | None = None
                             ) -> list[tuple[int, ...]]:
    """The integer vectors themselves, in lexicographic order."""
    if region not in ("closed", "relative_interior"):
        raise ValueError("region must be closed|relative_interior")
    if region == "relative_interior" and t == 0:
        raise ValueError("relative-interior counts start at t = 1")
    if not h.feasible:
        return []
    _, pts = _count_impl(h, t, region, budget, want_points=True)
    return pts


# ---------------------------------------------------------------------------
# Ehrhart data
# ---------------------------------------------------------------------------

def eval_poly(coeffs: Sequence[Fraction], t: int) -> Fraction:
    """Evaluate sum_i coeffs[i] * t^i exactly."""
    acc = Fraction(0)
    for c in reversed(list(coeffs)):
        acc = acc * t + c
    return acc


def interpolate(counts: dict[int, int], d: int) -> tuple[Fraction, ...]:
    """The unique degree-<=d polynomial through (t, counts[t]) for t = 0..d,
    as exact rational coefficients (constant term first).

    Every further count supplied is re-validated against the interpolant;
    disagreement means the data cannot come from a degree-d Ehrhart
    polynomial and raises DataIntegrityError.
    """
    if any(t not in counts for t in range(d + 1)):
        raise ValueError(f"need counts for all t = 0..{d}")
    nodes = list(range(d + 1))
    coeffs = [Fraction(0)] * (d + 1)
    for i in nodes:
        # Lagrange basis polynomial for node i, accumulated into coeffs
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in nodes:
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= j * basis[k + 1]
            denom *= i - j
        w = Fraction(counts[i]) / denom
        for k in range(len(basis)):
            coeffs[k] += w * basis[k]
    for t, c in sorted(counts.items()):
        if eval_poly(coeffs, t) != c:
            raise DataIntegrityError(
                f"count at t={t} is {c} but the degree-{d} interpolant gives "
                f"{eval_poly(coeffs, t)}")
    return tuple(coeffs)


def h_star(counts: dict[int, int], d: int) -> tuple[int, ...]:
    """h*-vector from the counts: h_i = sum_j (-1)^j C(d+1, j) L(i-j),
    trailing zeros trimmed.  Entries must come out nonnegative integers."""
    if any(t not in counts for t in range(d + 1)):
        raise ValueError(f"need counts for all t = 0..{d}")
    if counts[0] != 1:
        raise ValueError("input not an Ehrhart count sequence: L(0) != 1")
    hs = []
    for i in range(d + 1):
        hi = sum((-1) ** j * comb(d + 1, j) * counts[i - j]
                 for j in range(i + 1))
        if hi < 0:
            raise ValueError(
                f"input not an Ehrhart count sequence: h_{i} = {hi} < 0")
        hs.append(hi)
    while len(hs) > 1 and hs[-1] == 0:
        hs.pop()
    return tuple(hs)


@dataclass
class EhrhartProfile:
    """Dimension, counts, interpolant, h*-vector, degree/codegree and the
    Gorenstein verdict of one polytope.  The empty polytope is encoded with
    d = -1 and gorenstein = None (not applicable)."""

    d: int
    counts: dict[int, int] = field(default_factory=dict)
    interior_counts: dict[int, int] = field(default_factory=dict)
    poly: tuple[Fraction, ...] = ()
    h_star: tuple[int, ...] = ()
    degree: int | None = None
    codegree: int | None = None
    gorenstein: bool | None = None

    @property
    def is_empty(self) -> bool:
        return self.d < 0

    def to_json_dict(self) -> dict:
        return {
            "dim": self.d,
            "counts": {str(t): c for t, c in sorted(self.counts.items())},
            "interior_counts": {str(t): c for t, c in
                                sorted(self.interior_counts.items())},
            "poly": [f"{c.numerator}/{c.denominator}" for c in self.poly],
            "h_star": list(self.h_star),
            "degree": self.degree,
            "codegree": self.codegree,
            "gorenstein": self.gorenstein,
        }


def profile(h: ScalableHRep, vertices: Sequence,
            *, budget: Budget | None = None) -> EhrhartProfile:
    """Full Ehrhart profile: dimension from the vertices, counts for
    t = 0..d, exact interpolant, h*-vector, codegree from interior scanning,
    and the Gorenstein verdict (h* palindromic).

    The codegree r found by scanning interior counts must equal d + 1 - s
    from the trimmed h*, with interior_counts[r] = h_s; disagreement raises
    DataIntegrityError.
    """
    pts = [v.entries if hasattr(v, "entries") else tuple(v) for v in vertices]
    if not h.feasible or not pts:
        return EhrhartProfile(d=-1)
    d = linalg.affine_rank(pts)
    counts = {t: count_lattice_points(h, t, budget=budget)
              for t in range(d + 1)}
    poly = interpolate(counts, d)
    hs = h_star(counts, d)
    s = len(hs) - 1
    r = d + 1 - s
    interior_counts: dict[int, int] = {}
    for t in range(1, r + 1):
        interior_counts[t] = count_lattice_points(
            h, t, "relative_interior", budget=budget)
    scan_r = next((t for t in sorted(interior_counts) if interior_counts[t] > 0),
                  None)
    if scan_r != r or interior_counts[r] != hs[s]:
        raise DataIntegrityError(
            f"codegree mismatch: h* trim gives r={r}, h_s={hs[s]}, but "
            f"interior scanning gives first point at t={scan_r} with "
            f"count {interior_counts.get(r)}")
    return EhrhartProfile(
        d=d, counts=counts, interior_counts=interior_counts, poly=poly,
        h_star=hs, degree=s, codegree=r, gorenstein=hs == hs[::-1])


def reciprocity_check(p: EhrhartProfile) -> bool:
    """Ehrhart reciprocity on the recorded data: every interior count equals
    (-1)^d * poly(-t)."""
    if p.is_empty:
        raise ValueError("profile is empty")
    sign = (-1) ** p.d
    return all(sign * eval_poly(p.poly, -t) == c
               for t, c in p.interior_counts.items())


def gorenstein_shift_check(h: ScalableHRep, p: EhrhartProfile, t_max: int,
                           *, budget: Budget | None = None) -> bool:
    """Direct two-count Gorenstein test, independent of the h*-vector:
    interior(r) = 1 and L(t - r) = interior(t) for r < t <= t_max.

    Closed counts computed on the way are validated against the profile's
    interpolant (the Ehrhart polynomial is exact for every t >= 0).
    """
    if p.is_empty:
        raise ValueError("profile is empty")
    r = p.codegree
    if t_max < r:
        raise ValueError(f"t_max must be at least the codegree {r}")
    if count_lattice_points(h, r, "relative_interior", budget=budget) != 1:
        return False
    for t in range(r + 1, t_max + 1):
        closed = count_lattice_points(h, t - r, budget=budget)
        if eval_poly(p.poly, t - r) != closed:
            raise DataIntegrityError(
                f"closed count at t={t - r} disagrees with the interpolant")
        if closed != count_lattice_points(h, t, "relative_interior",
                                          budget=budget):
            return False
    return True
