"""Executable verification of the quantitative claims about matching
polytopes of grids and tori: witness vectors, the torus Gorenstein
classification, bridge lower bounds, shift injections, dimension formulas,
and the S-matching results.  Every check returns a machine-readable
VerificationReport and never guesses: an instance that cannot be decided
within budget reports "inconclusive", which is distinct from "fail".
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from . import ehrhart, linalg
from .budget import Budget, BudgetExceeded
from .graphs import (Graph, SubsetSpec, cut, grid, induced_subgraph,
                     is_bipartite, min_cut_over_subsets, neighbor_graph, torus)
from .matchings import (EdgeVector, all_ones, enumerate_perfect_matchings,
                        enumerate_s_matchings, matching_vectors)
from .polytopes import (contains, dimension_from_vertices, edmond_hrep,
                        lp_optimize, member_convex, smatching_hrep,
                        strictly_satisfies)

# deterministic pseudo-random costs: 64-bit LCG, constants from Knuth's MMIX
LCG_MULT = 6364136223846793005
LCG_INC = 1442695040888963407
LCG_SEED = 0x5EED


def lcg_ints(seed: int, count: int, lo: int, hi: int) -> list[int]:
    """`count` integers in [lo, hi] from the documented LCG stream."""
    state = seed & (2**64 - 1)
    out = []
    span = hi - lo + 1
    for _ in range(count):
        state = (state * LCG_MULT + LCG_INC) % 2**64
        out.append(lo + (state >> 33) % span)
    return out


@dataclass
class VerificationReport:
    """One machine-checked claim: computed vs expected values and a verdict
    ("pass", "fail", "inconclusive", or "not_applicable")."""

    check_id: str
    claim: str
    computed: dict
    expected: dict
    verdict: str
    runtime_s: float
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "claim": self.claim,
            "computed": self.computed,
            "expected": self.expected,
            "verdict": self.verdict,
            "runtime_s": round(self.runtime_s, 3),
            "notes": list(self.notes),
        }


def _report(check_id: str, claim: str, computed: dict, expected: dict,
            start: float, verdict: str | None = None,
            notes: Iterable[str] = ()) -> VerificationReport:
    if verdict is None:
        verdict = "pass" if computed == expected else "fail"
    return VerificationReport(check_id, claim, computed, expected, verdict,
                              time.perf_counter() - start, tuple(notes))


# ---------------------------------------------------------------------------
# witness vectors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WitnessClaim:
    """A machine-checkable property of a witness vector.

    kind: "vertex_sums" (all incidence equalities at level t),
          "in" / "not_in" (membership at level t in the given region),
          "shift_in" (the vector plus all-ones lies in t·P°),
          "cut_sum" (the cut over `subset` carries exactly `value`).
    """
    kind: str
    t: int = 0
    region: str = "closed"
    subset: tuple[int, ...] = ()
    value: int = 0


@dataclass(frozen=True)
class WitnessVector:
    name: str
    graph: Graph
    vector: EdgeVector
    claims: tuple[WitnessClaim, ...]
    notes: tuple[str, ...] = ()


def _torus_edge_ids(g: Graph):
    m, n = g.shape
    vid = lambda i, j: i * n + j

    def eid(a, b):
        return g.edge_index[(a, b) if a < b else (b, a)]

    def horiz(i, j):  # (i,j) -- (i,(j+1) mod n)
        return eid(vid(i, j), vid(i, (j + 1) % n))

    def vert(i, j):  # (i,j) -- ((i+1) mod m, j)
        return eid(vid(i, j), vid((i + 1) % m, j))

    return vid, horiz, vert


def witness_interior_2x3() -> WitnessVector:
    """On the 2x3 torus: every horizontal edge 1, every vertical edge 2.
    Vertex sums are 4 and the vector is an interior point of 4P."""
    g = torus(2, 3)
    vid, horiz, vert = _torus_edge_ids(g)
    x = [0] * g.n_edges
    for i in range(2):
        for j in range(3):
            x[horiz(i, j)] = 1
    for j in range(3):
        x[vert(0, j)] = 2
    claims = (
        WitnessClaim("vertex_sums", t=4),
        WitnessClaim("in", t=4, region="relative_interior"),
    )
    return WitnessVector("interior-2x3", g, EdgeVector(tuple(x), g), claims)


def witness_rings(m: int, n: int) -> WitnessVector:
    """On the m x n torus: every horizontal edge 1, every vertical edge 0.

    For m = 2 and odd n >= 7 this vector is outside 2P (the top-row cut
    carries 0) while its all-ones shift is interior to 5P; for even m >= 4
    and odd n >= 5 the shift lands in 6P° instead.
    """
    if m == 2:
        if n < 7 or n % 2 == 0:
            raise ValueError("rings witness with m=2 needs odd n >= 7")
        shift_level = 5
    elif m >= 4 and m % 2 == 0:
        if n < 5 or n % 2 == 0:
            raise ValueError("rings witness with even m >= 4 needs odd n >= 5")
        shift_level = 6
    else:
        raise ValueError("rings witness needs m = 2 or even m >= 4")
    g = torus(m, n)
    vid, horiz, vert = _torus_edge_ids(g)
    y = [0] * g.n_edges
    for i in range(m):
        for j in range(n):
            y[horiz(i, j)] = 1
    top_row = tuple(range(n))
    claims = (
        WitnessClaim("vertex_sums", t=2),
        WitnessClaim("cut_sum", subset=top_row, value=0),
        WitnessClaim("not_in", t=2, region="closed"),
        WitnessClaim("shift_in", t=shift_level, region="relative_interior"),
    )
    notes = ()
    if m >= 4:
        notes = ("the all-zero assignment cannot satisfy the vertex-sum "
                 "condition at level 2, so this witness uses horizontal = 1, "
                 "vertical = 0, the only reading consistent with the top-row "
                 "cut argument (2n bridges, cut sum 0)",)
    return WitnessVector(f"rings-{m}x{n}", g, EdgeVector(tuple(y), g),
                         claims, notes)


def witness_offset_rows(n: int) -> WitnessVector:
    """On the 3 x n torus (even n >= 4): rows 0 and 1 carry the in-sync
    horizontal matching {2i, 2i+1} valued 3, row 2 the out-of-sync matching
    {2i+1, 2i+2} valued 3, and a four-column gadget replaces the values on
    columns 0..3: the two square edges over columns {0,1} and {2,3} in rows
    0-1 get 1, the row-2 edge over {1,2} gets 1, verticals get 2 on the
    outer square sides (columns 0 and 3, rows 0-1) and 1 on all three
    verticals of columns 1 and 2.

    Vertex sums are 3; the cut over the five gadget vertices
    {(0,0),(0,1),(1,0),(1,1),(2,1)} carries 1 < 3, so the vector is outside
    3P, while its all-ones shift is interior to 7P.
    """
    if n < 4 or n % 2 != 0:
        raise ValueError("offset-rows witness needs even n >= 4")
    g = torus(3, n)
    vid, horiz, vert = _torus_edge_ids(g)
    y = [0] * g.n_edges
    for i in (0, 1):
        for j in range(0, n, 2):
            y[horiz(i, j)] = 1 if j in (0, 2) else 3
    for j in range(1, n, 2):
        y[horiz(2, j)] = 1 if j == 1 else 3
    y[vert(0, 0)] = 2
    y[vert(0, 3)] = 2
    for i in range(3):
        y[vert(i, 1)] = 1
        y[vert(i, 2)] = 1
    gadget = tuple(sorted((vid(0, 0), vid(0, 1), vid(1, 0), vid(1, 1), vid(2, 1))))
    claims = (
        WitnessClaim("vertex_sums", t=3),
        WitnessClaim("cut_sum", subset=gadget, value=1),
        WitnessClaim("not_in", t=3, region="closed"),
        WitnessClaim("shift_in", t=7, region="relative_interior"),
    )
    return WitnessVector(f"offset-rows-3x{n}", g, EdgeVector(tuple(y), g), claims)


def witness(kind: str, m: int | None = None, n: int | None = None) -> WitnessVector:
    """Dispatch by kind: interior-2x3 | rings | offset-rows."""
    if kind == "interior-2x3":
        return witness_interior_2x3()
    if kind == "rings":
        if m is None or n is None:
            raise ValueError("rings witness needs m and n")
        return witness_rings(m, n)
    if kind == "offset-rows":
        if n is None:
            raise ValueError("offset-rows witness needs n")
        return witness_offset_rows(n)
    raise ValueError(f"unknown witness kind {kind!r}")


def check_witness(w: WitnessVector, *, max_cut_vertices: int = 24,
                  budget: Budget | None = None) -> VerificationReport:
    """Verify every claim of a witness vector against the H-description."""
    start = time.perf_counter()
    g = w.graph
    h = edmond_hrep(g, max_cut_vertices=max_cut_vertices)
    computed: dict = {}
    expected: dict = {}
    for c in w.claims:
        if c.kind == "vertex_sums":
            sums = sorted({sum(w.vector[e] for e in g.incident[v])
                           for v in range(g.n_vertices)})
            computed["vertex_sums"] = sums
            expected["vertex_sums"] = [c.t]
        elif c.kind == "in":
            key = f"in_{c.t}P_{c.region}"
            computed[key] = contains(h, w.vector, c.t, c.region)
            expected[key] = True
        elif c.kind == "not_in":
            key = f"in_{c.t}P_{c.region}"
            computed[key] = contains(h, w.vector, c.t, c.region)
            expected[key] = False
        elif c.kind == "shift_in":
            key = f"shift_in_{c.t}P_{c.region}"
            computed[key] = contains(h, w.vector.shift(1), c.t, c.region)
            expected[key] = True
        elif c.kind == "cut_sum":
            key = f"cut_sum_{','.join(map(str, c.subset))}"
            computed[key] = sum(w.vector[e] for e in cut(g, c.subset))
            expected[key] = c.value
        else:
            raise ValueError(f"unknown claim kind {c.kind!r}")
    return _report(f"witness-{w.name}",
                   f"witness vector {w.name} satisfies its stated claims",
                   computed, expected, start, notes=w.notes)


# ---------------------------------------------------------------------------
# the torus Gorenstein classification
# ---------------------------------------------------------------------------

def torus_gorenstein_predicate(m: int, n: int) -> bool | None:
    """Closed form for the m x n torus: Gorenstein iff (m = 1 or m even) and
    n even, or {m,n} = {2,3} or {2,5}; symmetric in (m, n).  None when m·n is
    odd (no perfect matchings, not applicable)."""
    if (m * n) % 2 != 0:
        return None

    def one_way(a: int, b: int) -> bool:
        if (a == 1 or a % 2 == 0) and b % 2 == 0:
            return True
        return (a, b) in ((2, 3), (2, 5))

    return one_way(m, n) or one_way(n, m)


def _two_count_route(m: int, n: int) -> tuple[int, int] | None:
    """(r, l) for the targeted non-Gorenstein refutation L(l) < interior(l+r),
    or None when the instance is not of a refutable shape."""
    for (a, b) in ((m, n), (n, m)):
        if a == 2 and b >= 7 and b % 2 == 1:
            return 3, 2
        if a == 3 and b >= 4 and b % 2 == 0:
            return 4, 3
        if a >= 4 and a % 2 == 0 and b >= 5 and b % 2 == 1:
            return 4, 2
    return None


def check_torus_classification(m: int, n: int, *,
                               budget: Budget | None = None,
                               max_cut_vertices: int = 16,
                               profile_dim_cap: int = 8) -> VerificationReport:
    """Decide whether the m x n torus matching polytope is Gorenstein and
    compare with the closed-form predicate.

    Small instances get a full Ehrhart profile.  Refutable shapes are decided
    by the targeted two-count inequality L(l) < L_interior(l + r) after
    confirming the codegree r by interior scanning, which needs counts at
    only two dilations.
    """
    start = time.perf_counter()
    check_id = f"classification-{m}x{n}"
    claim = (f"torus({m},{n}) matching polytope Gorenstein verdict matches "
             f"the closed-form classification")
    pred = torus_gorenstein_predicate(m, n)
    if pred is None:
        return _report(check_id, claim, {"applicable": False},
                       {"applicable": False}, start, verdict="not_applicable")
    g = torus(m, n)
    try:
        h = edmond_hrep(g, max_cut_vertices=max_cut_vertices)
        vertices = matching_vectors(enumerate_perfect_matchings(g))
        if not vertices:
            computed = {"gorenstein": None}
            return _report(check_id, claim, computed, {"gorenstein": pred},
                           start, verdict="fail",
                           notes=("no perfect matchings despite even m*n",))
        d = dimension_from_vertices(vertices)
        route = _two_count_route(m, n)
        if route is not None and not pred:
            r, l = route
            scan = {t: ehrhart.count_lattice_points(h, t, "relative_interior",
                                                    budget=budget)
                    for t in range(1, r + 1)}
            codegree_ok = all(scan[t] == 0 for t in range(1, r)) and scan[r] >= 1
            closed = ehrhart.count_lattice_points(h, l, budget=budget)
            interior = ehrhart.count_lattice_points(h, l + r,
                                                    "relative_interior",
                                                    budget=budget)
            computed = {
                "route": "two-count",
                "codegree": r if codegree_ok else None,
                f"L({l})": closed,
                f"L_interior({l + r})": interior,
                "gorenstein": not (codegree_ok and closed < interior),
            }
            expected = {"route": "two-count", "codegree": r,
                        f"L({l})": closed, f"L_interior({l + r})": interior,
                        "gorenstein": pred}
            return _report(check_id, claim, computed, expected, start)
        if d > profile_dim_cap:
            return _report(
                check_id, claim, {"route": "none"}, {"gorenstein": pred},
                start, verdict="inconclusive",
                notes=(f"dimension {d} exceeds the profile cap "
                       f"{profile_dim_cap} and no two-count route applies",))
        p = ehrhart.profile(h, vertices, budget=budget)
        computed = {"route": "profile", "gorenstein": p.gorenstein,
                    "codegree": p.codegree, "h_star": list(p.h_star)}
        expected = dict(computed)
        expected["gorenstein"] = pred
        return _report(check_id, claim, computed, expected, start)
    except BudgetExceeded as exc:
        return _report(check_id, claim,
                       {"nodes": exc.nodes, "elapsed_s": round(exc.elapsed, 1)},
                       {"gorenstein": pred}, start, verdict="inconclusive",
                       notes=(str(exc),))


# ---------------------------------------------------------------------------
# bridge bound, shift injection, dimensions
# ---------------------------------------------------------------------------

def check_min_bridges(m: int, n: int, *,
                      budget: Budget | None = None) -> VerificationReport:
    """Exhaustively confirm: on the m x n torus (m, n >= 3) every subset with
    2 <= |S| <= |V| - 2 has at least 6 bridges."""
    start = time.perf_counter()
    check_id = f"min-bridges-{m}x{n}"
    claim = (f"every vertex subset of torus({m},{n}) with 2 <= |S| <= |V|-2 "
             f"has at least 6 bridges")
    if m < 3 or n < 3:
        return _report(check_id, claim, {"applicable": False},
                       {"applicable": False}, start, verdict="not_applicable")
    g = torus(m, n)
    value, wit = min_cut_over_subsets(g, 2, g.n_vertices - 2)
    computed = {"min_bridges": value, "witness": list(wit.members),
                "at_least_6": value >= 6}
    expected = dict(computed)
    expected["at_least_6"] = True
    return _report(check_id, claim, computed, expected, start)


def check_shift_injection(g: Graph, k: int, l: int, *,
                          max_cut_vertices: int = 16,
                          budget: Budget | None = None) -> VerificationReport:
    """When the all-ones vector satisfies the all-strict system at level k,
    adding it maps the lattice points of lP injectively into (l+k)P°."""
    start = time.perf_counter()
    name = f"{g.family}-{g.shape[0]}x{g.shape[1]}" if g.shape else g.family
    check_id = f"shift-injection-{name}-k{k}-l{l}"
    claim = (f"x -> x + 1 maps lattice points of {l}P into ({l + k})P° "
             f"injectively on {name}")
    h = edmond_hrep(g, max_cut_vertices=max_cut_vertices)
    ones = all_ones(g)
    if not strictly_satisfies(h, ones, k):
        return _report(check_id, claim, {"hypothesis": False},
                       {"hypothesis": True}, start, verdict="not_applicable",
                       notes=("the all-ones vector does not satisfy the "
                              f"all-strict system at level {k}",))
    try:
        points = ehrhart.enumerate_lattice_points(h, l, budget=budget)
    except BudgetExceeded as exc:
        return _report(check_id, claim, {}, {}, start, verdict="inconclusive",
                       notes=(str(exc),))
    images = [tuple(v + 1 for v in p) for p in points]
    all_interior = all(
        contains(h, img, l + k, "relative_interior") for img in images)
    computed = {"hypothesis": True, "points": len(points),
                "images_interior": all_interior,
                "images_distinct": len(set(images)) == len(images)}
    expected = {"hypothesis": True, "points": len(points),
                "images_interior": True, "images_distinct": True}
    return _report(check_id, claim, computed, expected, start)


DIMENSION_CASES: tuple[tuple[str, int, int, int], ...] = (
    # family, m, n, expected dimension
    ("grid", 2, 2, 1),      # (m-1)(n-1)
    ("grid", 2, 3, 2),
    ("grid", 3, 4, 6),
    ("torus", 2, 4, 5),     # n + 1 for even n > 2
    ("torus", 2, 6, 7),
    ("torus", 2, 5, 5),     # n for odd n > 1
    ("torus", 2, 7, 7),
    ("torus", 4, 1, 1),     # even m > 2, n = 1
    ("torus", 4, 3, 12),    # m·n for even m > 2, n > 1
    ("torus", 3, 4, 12),    # same polytope by symmetry
    ("torus", 4, 4, 17),    # m·n + 1 for even m, n > 2
)


def check_dimension_formulas(cases: Sequence[tuple[str, int, int, int]] =
                             DIMENSION_CASES, *,
                             budget: Budget | None = None) -> VerificationReport:
    """Compare dimension_from_vertices against the closed-form dimension
    table for grids and tori."""
    start = time.perf_counter()
    computed = {}
    expected = {}
    for family, m, n, want in cases:
        g = grid(m, n) if family == "grid" else torus(m, n)
        vecs = matching_vectors(enumerate_perfect_matchings(g))
        key = f"{family}({m},{n})"
        computed[key] = dimension_from_vertices(vecs) if vecs else -1
        expected[key] = want
    return _report("dimension-formulas",
                   "matching polytope dimensions match the closed forms",
                   computed, expected, start)


# ---------------------------------------------------------------------------
# S-matching checks
# ---------------------------------------------------------------------------

def _subset_name(g: Graph, s: SubsetSpec) -> str:
    fam = f"{g.family}-{g.shape[0]}x{g.shape[1]}" if g.shape else g.family
    return f"{fam}-S{','.join(map(str, s.members))}"


def check_regular_smatching_gorenstein(g: Graph, s: SubsetSpec, *,
                                       budget: Budget | None = None
                                       ) -> VerificationReport:
    """When the induced subgraph on S is bipartite and every S-vertex has the
    same degree k in g, the S-matching polytope is Gorenstein of codegree k;
    its dimension is |E_S| - |S| when Γ(S) is nonempty."""
    start = time.perf_counter()
    check_id = f"regular-gorenstein-{_subset_name(g, s)}"
    claim = ("S-matching polytope of an equal-degree bipartite-induced S is "
             "Gorenstein with codegree equal to the common degree")
    degrees = sorted({g.degree(v) for v in s.members})
    ng = neighbor_graph(g, s)
    sub = induced_subgraph(g, s)
    if len(degrees) != 1 or is_bipartite(sub.graph) is None:
        return _report(check_id, claim, {"hypothesis": False},
                       {"hypothesis": True}, start, verdict="not_applicable")
    k = degrees[0]
    h = smatching_hrep(ng)
    vecs = matching_vectors(enumerate_s_matchings(ng))
    try:
        p = ehrhart.profile(h, vecs, budget=budget)
    except BudgetExceeded as exc:
        return _report(check_id, claim, {}, {}, start, verdict="inconclusive",
                       notes=(str(exc),))
    computed = {"gorenstein": p.gorenstein, "codegree": p.codegree,
                "dim": p.d, "h_star": list(p.h_star)}
    expected = dict(computed)
    expected.update(gorenstein=True, codegree=k)
    if ng.gamma:
        expected["dim"] = ng.n_edges - len(s)
    return _report(check_id, claim, computed, expected, start)


def check_odd_cut_bound(g: Graph, s: SubsetSpec, t_max: int, *,
                        budget: Budget | None = None) -> VerificationReport:
    """For odd |S| with bipartite induced subgraph, every lattice point of
    t·P_S puts at least t on the bridges, for t = 1..t_max (exhaustive)."""
    start = time.perf_counter()
    check_id = f"cut-bound-{_subset_name(g, s)}"
    claim = (f"every lattice point of t·P_S carries at least t on the cut "
             f"C(S,S'), t <= {t_max}")
    sub = induced_subgraph(g, s)
    if len(s) % 2 == 0 or is_bipartite(sub.graph) is None:
        return _report(check_id, claim, {"hypothesis": False},
                       {"hypothesis": True}, start, verdict="not_applicable")
    ng = neighbor_graph(g, s)
    h = smatching_hrep(ng)
    bridges = ng.bridge_slots()
    computed = {}
    expected = {}
    try:
        for t in range(1, t_max + 1):
            pts = ehrhart.enumerate_lattice_points(h, t, budget=budget)
            viol = sum(1 for p in pts if sum(p[e] for e in bridges) < t)
            computed[f"t={t}"] = {"points": len(pts), "violations": viol}
            expected[f"t={t}"] = {"points": len(pts), "violations": 0}
    except BudgetExceeded as exc:
        return _report(check_id, claim, {}, {}, start, verdict="inconclusive",
                       notes=(str(exc),))
    return _report(check_id, claim, computed, expected, start)


def _convex_side_count(vertices: Sequence[EdgeVector], t: int) -> int:
    """Count integer points of t·conv(vertices) independently of any
    H-description: box scan, affine-hull filter from the vertices, then an
    exact convex-combination LP on the survivors."""
    pts = [v.entries for v in vertices]
    n = len(pts[0])
    hull = linalg.affine_hull_equations(pts)
    los = [t * min(p[e] for p in pts) for e in range(n)]
    his = [t * max(p[e] for p in pts) for e in range(n)]
    count = 0
    for x in product(*(range(lo, hi + 1) for lo, hi in zip(los, his))):
        if any(sum(a[e] * x[e] for e in range(n)) != t * c for a, c in hull):
            continue
        if member_convex(vertices, x, t):
            count += 1
    return count


def check_smatching_exactness(g: Graph, s: SubsetSpec, *, t_max: int = 3,
                              n_costs: int = 20,
                              budget: Budget | None = None
                              ) -> VerificationReport:
    """Four-way certification that the S-matching H-description is exact:

    (a) every S-matching characteristic vector satisfies it at t = 1;
    (b) its integer points at t = 1 are exactly those vectors;
    (c) LP optima over it match enumeration maxima for seeded costs;
    (d) its lattice-point counts match pure convex-hull counts for t <= t_max.
    """
    start = time.perf_counter()
    check_id = f"smatching-exactness-{_subset_name(g, s)}"
    claim = ("the S-matching H-description has exactly the S-matching "
             "vectors as t=1 integer points, LP optima equal enumeration "
             "maxima, and dilation counts equal convex-hull counts")
    ng = neighbor_graph(g, s)
    h = smatching_hrep(ng)
    matchings = enumerate_s_matchings(ng)
    vecs = matching_vectors(matchings)
    computed: dict = {}
    expected: dict = {}

    computed["vertices_in_P"] = sum(1 for v in vecs if contains(h, v, 1))
    expected["vertices_in_P"] = len(vecs)

    h_points = set(ehrhart.enumerate_lattice_points(h, 1, budget=budget))
    chi = {v.entries for v in vecs}
    computed["t1_points_equal_vertices"] = h_points == chi
    expected["t1_points_equal_vertices"] = True

    costs = [lcg_ints(LCG_SEED + 7 * i, ng.n_edges, -5, 5)
             for i in range(n_costs)]
    lp_matches = 0
    for c in costs:
        opt, _ = lp_optimize(h, 1, c, sense="max")
        best = max(sum(ci * vi for ci, vi in zip(c, v.entries)) for v in vecs)
        if opt == Fraction(best):
            lp_matches += 1
    computed["lp_matches"] = lp_matches
    expected["lp_matches"] = n_costs

    for t in range(1, t_max + 1):
        hc = ehrhart.count_lattice_points(h, t, budget=budget)
        cc = _convex_side_count(vecs, t)
        computed[f"counts_t{t}"] = {"h": hc, "convex": cc}
        expected[f"counts_t{t}"] = {"h": hc, "convex": hc}
    return _report(check_id, claim, computed, expected, start)


# ---------------------------------------------------------------------------
# default battery
# ---------------------------------------------------------------------------

def default_battery(budget_s: float | None = 60.0) -> list[VerificationReport]:
    """The curated verification battery behind `verify --all`."""
    mk = lambda: Budget(max_seconds=budget_s) if budget_s else None
    reports: list[VerificationReport] = []
    reports.append(check_witness(witness_interior_2x3(), budget=mk()))
    reports.append(check_witness(witness_rings(2, 7), budget=mk()))
    reports.append(check_witness(witness_offset_rows(4), budget=mk()))
    for (m, n) in ((2, 3), (2, 5), (1, 4), (1, 6), (2, 4), (2, 6), (2, 7),
                   (3, 4), (4, 3)):
        reports.append(check_torus_classification(m, n, budget=mk()))
    for (m, n) in ((3, 3), (3, 4)):
        reports.append(check_min_bridges(m, n, budget=mk()))
    reports.append(check_shift_injection(torus(2, 5), 3, 1, budget=mk()))
    reports.append(check_shift_injection(torus(2, 5), 3, 2, budget=mk()))
    reports.append(check_shift_injection(torus(2, 3), 4, 1, budget=mk()))
    reports.append(check_dimension_formulas(budget=mk()))

    g33 = grid(3, 3)
    center = SubsetSpec.from_labels(g33, [(1, 1)])
    g34 = grid(3, 4)
    pair = SubsetSpec.from_labels(g34, [(1, 1), (1, 2)])
    g44 = grid(4, 4)
    inner = SubsetSpec.from_labels(g44, [(1, 1), (1, 2), (2, 1), (2, 2)])
    reports.append(check_regular_smatching_gorenstein(g33, center, budget=mk()))
    reports.append(check_regular_smatching_gorenstein(g34, pair, budget=mk()))
    reports.append(check_regular_smatching_gorenstein(g44, inner, budget=mk()))

    t25 = torus(2, 5)
    top3 = SubsetSpec.of([0, 1, 2])
    reports.append(check_odd_cut_bound(g33, center, 3, budget=mk()))
    reports.append(check_odd_cut_bound(t25, top3, 2, budget=mk()))
    reports.append(check_smatching_exactness(g33, center, budget=mk()))
    reports.append(check_smatching_exactness(g34, pair, budget=mk()))
    return reports
