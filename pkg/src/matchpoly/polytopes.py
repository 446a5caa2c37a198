"""Dilation-scalable H-descriptions of matching polytopes, membership tests,
an exact LP oracle, and dimension computations.

Two H-descriptions are built here.  For a graph with an even number of
vertices, the perfect matching polytope is cut out by nonnegativity, one
vertex-incidence equality per vertex, and one odd-cut inequality per odd
vertex subset (Edmonds' description).  For a neighbor graph whose induced
subgraph on S is bipartite, the S-matching polytope needs only nonnegativity
and the S-vertex equalities — no cut rows.

Every coefficient vector in these systems is a 0/1 indicator, so rows are
stored sparsely by their support.  All arithmetic is exact; nothing here
touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Sequence, Union

from . import linalg, simplex
from .graphs import (Graph, NeighborGraph, connected_components,
                     incidence_masks, induced_subgraph, is_bipartite)
from .matchings import (EdgeVector, enumerate_perfect_matchings,
                        enumerate_s_matchings)
from .simplex import Infeasible

DEFAULT_CUT_VERTEX_CAP = 16

Vector = Union[EdgeVector, Sequence[int]]


def _entries(x: Vector) -> Sequence:
    return x.entries if isinstance(x, EdgeVector) else x


class EqualityRow(NamedTuple):
    """coeff·x = rhs_mult·t with coeff the 0/1 indicator of `support`."""
    support: tuple[int, ...]
    rhs_mult: int
    vertex: int


class InequalityRow(NamedTuple):
    """coeff·x >= rhs_mult·t; kind is "nonneg" or "odd_cut"."""
    support: tuple[int, ...]
    rhs_mult: int
    kind: str
    subset: tuple[int, ...] | None
    implicit_eq: bool


class ScalableHRep:
    """An H-description whose right-hand sides scale linearly with the
    dilation parameter t.  Immutable after construction.

    `feasible` is False when the vertex enumeration came back empty (odd
    vertex count, or simply no matchings); such a polytope is treated as the
    first-class empty polytope downstream.
    """

    __slots__ = ("n_edges", "equalities", "inequalities", "feasible",
                 "ambient", "_count_cache")

    def __init__(self, n_edges: int,
                 equalities: Sequence[EqualityRow],
                 inequalities: Sequence[InequalityRow],
                 feasible: bool,
                 ambient=None):
        self.n_edges = n_edges
        self.equalities = tuple(equalities)
        self.inequalities = tuple(inequalities)
        self.feasible = feasible
        self.ambient = ambient
        self._count_cache: dict = {}

    def cut_rows(self) -> tuple[InequalityRow, ...]:
        return tuple(r for r in self.inequalities if r.kind == "odd_cut")

    def nonneg_rows(self) -> tuple[InequalityRow, ...]:
        return tuple(r for r in self.inequalities if r.kind == "nonneg")

    def without_cut_rows(self) -> "ScalableHRep":
        return ScalableHRep(self.n_edges, self.equalities, self.nonneg_rows(),
                            self.feasible, self.ambient)

    def __repr__(self) -> str:
        return (f"ScalableHRep(edges={self.n_edges}, eq={len(self.equalities)}, "
                f"ineq={len(self.inequalities)}, feasible={self.feasible})")

    def _dense(self, support: tuple[int, ...]) -> list[int]:
        row = [0] * self.n_edges
        for e in support:
            row[e] = 1
        return row

    def to_json_dict(self) -> dict:
        eqs = [{"coeffs": self._dense(r.support), "rhs_mult": r.rhs_mult}
               for r in self.equalities]
        ineqs = []
        for r in self.inequalities:
            d = {"coeffs": self._dense(r.support), "rhs_mult": r.rhs_mult,
                 "kind": r.kind, "implicit_eq": r.implicit_eq}
            if r.subset is not None:
                d["subset"] = list(r.subset)
            ineqs.append(d)
        return {"equalities": eqs, "inequalities": ineqs}


@dataclass(frozen=True)
class AffineHull:
    """The affine hull data of a scalable system: a basis of the homogeneous
    solution space W of the equalities, and a rational point at t = 1."""
    dimension: int
    basis: tuple[tuple[int, ...], ...]
    base_point: tuple[Fraction, ...] | None


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def _implicit_flags_from_colsums(colsums: Sequence[int], n_matchings: int,
                                 support: tuple[int, ...], kind: str) -> bool:
    # a row is implicit iff it is tight at every vertex of the polytope:
    # nonneg rows iff the edge is in no matching; odd-cut rows iff every
    # matching crosses the cut exactly once (each crosses at least once, so
    # the total weight equals the matching count exactly in that case)
    if kind == "nonneg":
        return colsums[support[0]] == 0
    total = sum(colsums[e] for e in support)
    return total == n_matchings


def edmond_hrep(g: Graph, *, max_cut_vertices: int = DEFAULT_CUT_VERTEX_CAP
                ) -> ScalableHRep:
    """Edmonds' odd-cut description of the perfect matching polytope.

    Rows: nonnegativity per edge; one incidence equality per vertex; one
    odd-cut inequality per subset S with |S| odd and 3 <= |S| <= |V| - 3,
    deduplicated by cut edge set (witness = first subset in size-then-lex
    order).  Implicit-equality flags are computed against the enumerated
    perfect matchings.

    An odd vertex count yields the empty-polytope marker (feasible=False).
    Cut enumeration is exhaustive, so |V| is capped; pass a larger
    max_cut_vertices to override.
    """
    nv = g.n_vertices
    if nv > max_cut_vertices:
        raise ValueError(
            f"|V|={nv} exceeds the odd-cut enumeration cap "
            f"({max_cut_vertices}); pass max_cut_vertices={nv} to override")
    matchings = enumerate_perfect_matchings(g)
    n_m = len(matchings)
    colsums = [0] * g.n_edges
    for m in matchings:
        for e in m.edge_ids:
            colsums[e] += 1

    equalities = [EqualityRow(g.incident[v], 1, v) for v in range(nv)]
    ineqs: list[InequalityRow] = []
    for e in range(g.n_edges):
        ineqs.append(InequalityRow((e,), 0, "nonneg", None,
                                   colsums[e] == 0))

    inc_masks = incidence_masks(g)
    seen: dict[int, tuple[int, ...]] = {}
    for k in range(3, nv - 2, 2):
        for sub in combinations(range(nv), k):
            mask = 0
            for v in sub:
                mask ^= inc_masks[v]
            if mask not in seen:
                seen[mask] = sub
    for mask, sub in seen.items():
        support = tuple(e for e in range(g.n_edges) if (mask >> e) & 1)
        implicit = _implicit_flags_from_colsums(colsums, n_m, support, "odd_cut")
        ineqs.append(InequalityRow(support, 1, "odd_cut", sub, implicit))

    return ScalableHRep(g.n_edges, equalities, ineqs, feasible=n_m > 0,
                        ambient=g)


def smatching_hrep(ng: NeighborGraph) -> ScalableHRep:
    """H-description of the S-matching polytope: nonnegativity per slot plus
    one equality per S-vertex, valid when the induced subgraph on S is
    bipartite.  No cut rows are needed in that case."""
    sub = induced_subgraph(ng.base, ng.s)
    if is_bipartite(sub.graph) is None:
        raise ValueError("induced subgraph on S is not bipartite; "
                         "no H-description is available for this case")
    matchings = enumerate_s_matchings(ng)
    n_m = len(matchings)
    colsums = [0] * ng.n_edges
    for m in matchings:
        for e in m.edge_ids:
            colsums[e] += 1
    equalities = [EqualityRow(ng.s_incident[v], 1, v) for v in ng.s.members]
    ineqs = [InequalityRow((k,), 0, "nonneg", None, colsums[k] == 0)
             for k in range(ng.n_edges)]
    return ScalableHRep(ng.n_edges, equalities, ineqs, feasible=n_m > 0,
                        ambient=ng)


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------

def contains(h: ScalableHRep, x: Vector, t: int,
             region: str = "closed") -> bool:
    """Membership of x in t·P (closed) or t·P° (relative interior).

    The relative-interior test requires equalities to hold, inequalities
    flagged implicit to hold with equality, and all other inequalities to
    hold strictly.
    """
    if region not in ("closed", "relative_interior"):
        raise ValueError("region must be closed|relative_interior")
    xs = _entries(x)
    if len(xs) != h.n_edges:
        raise ValueError(f"vector length {len(xs)} != ambient {h.n_edges}")
    if not h.feasible:
        return False
    for row in h.equalities:
        if sum(xs[e] for e in row.support) != row.rhs_mult * t:
            return False
    for row in h.inequalities:
        s = sum(xs[e] for e in row.support)
        rhs = row.rhs_mult * t
        if region == "closed":
            if s < rhs:
                return False
        elif row.implicit_eq:
            if s != rhs:
                return False
        elif s <= rhs:
            return False
    return True


def strictly_satisfies(h: ScalableHRep, x: Vector, t: int) -> bool:
    """The literal all-strict system at level t: equalities hold, every
    inequality strictly (implicit flags ignored)."""
    xs = _entries(x)
    if len(xs) != h.n_edges:
        raise ValueError("vector length mismatch")
    for row in h.equalities:
        if sum(xs[e] for e in row.support) != row.rhs_mult * t:
            return False
    return all(sum(xs[e] for e in row.support) > row.rhs_mult * t
               for row in h.inequalities)


def member_convex(vertices: Sequence[Vector], x: Vector, t: int) -> bool:
    """Exact test for x ∈ t·conv(vertices) via LP phase-1 feasibility of the
    convex-combination system.  Independent of any H-description."""
    if not vertices:
        raise ValueError("vertex list is empty")
    if t <= 0:
        raise ValueError("t must be a positive integer")
    xs = _entries(x)
    n = len(xs)
    verts = [_entries(v) for v in vertices]
    if any(len(v) != n for v in verts):
        raise ValueError("vertex length mismatch")
    for e in range(n):
        hi = t * max(v[e] for v in verts)
        lo = t * min(v[e] for v in verts)
        if not (lo <= xs[e] <= hi):
            return False
    # sum_i λ_i (t v_i) = x, sum_i λ_i = 1, λ >= 0
    rows = [[Fraction(t * v[e]) for v in verts] for e in range(n)]
    rows.append([Fraction(1)] * len(verts))
    b = [Fraction(v) for v in xs] + [Fraction(1)]
    return simplex.feasible(rows, b)


def lp_optimize(h: ScalableHRep, t: int, cost: Sequence,
                sense: str = "max") -> tuple[Fraction, tuple[Fraction, ...]]:
    """Exact optimum of cost·x over the H-system at dilation t.

    Nonnegativity rows become variable bounds; every other inequality gets a
    slack variable.  Bland's rule makes results reproducible.  Raises
    simplex.Infeasible when the system is empty at dilation t.
    """
    if len(cost) != h.n_edges:
        raise ValueError("cost length mismatch")
    if not h.feasible:
        raise Infeasible("empty polytope")
    bounded = {r.support[0] for r in h.inequalities if r.kind == "nonneg"}
    if bounded != set(range(h.n_edges)):
        raise ValueError("H-system lacks nonnegativity rows for some edges")
    slack_rows = [r for r in h.inequalities if r.kind != "nonneg"]
    n = h.n_edges
    n_slack = len(slack_rows)
    a_rows: list[list[Fraction]] = []
    b: list[Fraction] = []
    for row in h.equalities:
        a = [Fraction(0)] * (n + n_slack)
        for e in row.support:
            a[e] = Fraction(1)
        a_rows.append(a)
        b.append(Fraction(row.rhs_mult * t))
    for k, row in enumerate(slack_rows):
        a = [Fraction(0)] * (n + n_slack)
        for e in row.support:
            a[e] = Fraction(1)
        a[n + k] = Fraction(-1)
        a_rows.append(a)
        b.append(Fraction(row.rhs_mult * t))
    full_cost = [Fraction(c) for c in cost] + [Fraction(0)] * n_slack
    try:
        value, xfull = simplex.solve_lp(a_rows, b, full_cost, sense=sense)
    except simplex.Unbounded as exc:  # cannot happen over a polytope
        raise RuntimeError(f"internal error: unbounded LP over a polytope: {exc}")
    return value, tuple(xfull[:n])


# ---------------------------------------------------------------------------
# dimensions
# ---------------------------------------------------------------------------

def dimension_from_vertices(vertices: Sequence[Vector]) -> int:
    """Affine dimension of the vertex set, by exact rank of the differences."""
    if not vertices:
        raise ValueError("vertex list is empty")
    pts = [list(_entries(v)) for v in vertices]
    return linalg.affine_rank(pts)


def dimension_formula(ng: NeighborGraph) -> int:
    """Closed-form S-matching polytope dimension |E_S| - |S| (+1 when Γ(S) is
    empty), valid when the induced subgraph on S is connected and bipartite
    and every slot lies in some S-matching.  All three hypotheses are checked.
    """
    sub = induced_subgraph(ng.base, ng.s)
    if len(connected_components(sub.graph)) != 1:
        raise ValueError("hypothesis failed: induced subgraph on S is "
                         "disconnected (sum the formula over its components)")
    if is_bipartite(sub.graph) is None:
        raise ValueError("hypothesis failed: induced subgraph on S is not bipartite")
    matchings = enumerate_s_matchings(ng)
    covered = set()
    for m in matchings:
        covered.update(m.edge_ids)
    missing = [k for k in range(ng.n_edges) if k not in covered]
    if missing:
        raise ValueError(f"hypothesis failed: slots {missing} lie in no S-matching")
    d = ng.n_edges - len(ng.s)
    return d if ng.gamma else d + 1


def affine_hull(h: ScalableHRep,
                vertices: Sequence[Vector] | None = None) -> AffineHull:
    """Solution-space basis of the homogeneous equalities, plus a rational
    base point (the vertex centroid) when vertices are supplied."""
    rows = [h._dense(r.support) for r in h.equalities]
    basis = linalg.nullspace(rows, h.n_edges)
    base_point = None
    if vertices:
        pts = [_entries(v) for v in vertices]
        k = len(pts)
        base_point = tuple(Fraction(sum(p[e] for p in pts), k)
                           for e in range(h.n_edges))
    return AffineHull(len(basis), tuple(basis), base_point)
