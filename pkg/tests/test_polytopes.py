"""H-descriptions, membership, the convex-hull oracle, LP, dimensions."""

import itertools
from fractions import Fraction

import pytest

from matchpoly import (SubsetSpec, affine_hull, contains,
                       dimension_formula, dimension_from_vertices, edmond_hrep,
                       enumerate_perfect_matchings, enumerate_s_matchings,
                       grid, lp_optimize, matching_vectors, member_convex,
                       neighbor_graph, smatching_hrep, strictly_satisfies,
                       torus)
from matchpoly.claims import lcg_ints
from matchpoly.graphs import Graph
from matchpoly.linalg import affine_hull_equations
from matchpoly.simplex import Infeasible


def pm_vectors(g):
    return matching_vectors(enumerate_perfect_matchings(g))


def sm_vectors(ng):
    return matching_vectors(enumerate_s_matchings(ng))


# ------------------------------------------------------------- construction

def test_edmond_rows_grid22():
    h = edmond_hrep(grid(2, 2))
    assert len(h.equalities) == 4
    assert len(h.nonneg_rows()) == 4
    assert len(h.cut_rows()) == 0


def test_edmond_rows_torus25():
    g = torus(2, 5)
    h = edmond_hrep(g)
    assert len(h.equalities) == 10
    assert len(h.nonneg_rows()) == 15
    # odd subsets with 3 <= |S| <= 7: C(10,3)+C(10,5)+C(10,7) = 492 before
    # deduplication; complements share a cut, so 246 distinct rows remain
    raw = sum(1 for k in (3, 5, 7)
              for _ in itertools.combinations(range(10), k))
    assert raw == 492
    assert len(h.cut_rows()) == 246
    # every cut row is the indicator of an odd cut in range
    from matchpoly import cut
    for row in h.cut_rows():
        assert len(row.subset) % 2 == 1 and 3 <= len(row.subset) <= 7
        assert row.support == cut(g, SubsetSpec.of(row.subset))


def test_edmond_empty_marker_and_cap():
    h = edmond_hrep(grid(3, 3))        # odd vertex count
    assert not h.feasible
    assert not contains(h, [0] * h.n_edges, 0)
    with pytest.raises(ValueError, match="max_cut_vertices"):
        edmond_hrep(torus(4, 5))
    h2 = edmond_hrep(torus(4, 5), max_cut_vertices=20)
    assert h2.feasible


def test_equalities_are_vertex_incidence_rows():
    g = torus(2, 3)
    h = edmond_hrep(g)
    for row in h.equalities:
        assert row.rhs_mult == 1
        assert row.support == g.incident[row.vertex]


def test_implicit_flags_match_direct_tightness():
    # flags must agree with literal tightness at every vertex of the polytope
    for g in [grid(2, 2), grid(2, 3), torus(2, 3), torus(1, 6), torus(2, 4)]:
        h = edmond_hrep(g)
        vecs = pm_vectors(g)
        for row in h.inequalities:
            tight_all = all(sum(v[e] for e in row.support) == row.rhs_mult
                            for v in vecs)
            assert row.implicit_eq == tight_all, (g, row)


def test_implicit_cut_rows_on_6cycle():
    # the 2-edge cuts around 3-vertex arcs are crossed exactly once by both
    # matchings of the 6-cycle, hence implicit
    h = edmond_hrep(torus(1, 6))
    imp = [r for r in h.cut_rows() if r.implicit_eq]
    assert len(imp) == 3
    assert all(len(r.support) == 2 for r in imp)


def test_smatching_hrep_shapes():
    g33 = grid(3, 3)
    ng = neighbor_graph(g33, SubsetSpec.from_labels(g33, [(1, 1)]))
    h = smatching_hrep(ng)
    assert len(h.equalities) == 1 and len(h.inequalities) == 4
    assert len(h.cut_rows()) == 0

    g34 = grid(3, 4)
    ng2 = neighbor_graph(g34, SubsetSpec.from_labels(g34, [(1, 1), (1, 2)]))
    h2 = smatching_hrep(ng2)
    assert len(h2.equalities) == 2 and h2.n_edges == 7


def test_smatching_hrep_rejects_nonbipartite_s():
    t = torus(2, 3)
    row = SubsetSpec.of(range(3))   # a wraparound row is a triangle
    ng = neighbor_graph(t, row)
    with pytest.raises(ValueError, match="not bipartite"):
        smatching_hrep(ng)


def test_smatching_full_set_matches_edmond_feasible_set():
    # S = V on a 4-cycle: same feasible set as the cut-free odd-cut system
    g = grid(2, 2)
    ng = neighbor_graph(g, SubsetSpec.of(range(4)))
    hs = smatching_hrep(ng)
    he = edmond_hrep(g)
    for t in (1, 2):
        for x in itertools.product(range(t + 1), repeat=4):
            assert contains(hs, x, t) == contains(he, x, t)


def test_hrep_json_schema():
    h = edmond_hrep(torus(2, 3))
    d = h.to_json_dict()
    assert set(d) == {"equalities", "inequalities"}
    assert all(set(r) == {"coeffs", "rhs_mult"} for r in d["equalities"])
    assert all(len(r["coeffs"]) == h.n_edges for r in d["equalities"])
    kinds = {r["kind"] for r in d["inequalities"]}
    assert kinds == {"nonneg", "odd_cut"}


# --------------------------------------------------------------- membership

def test_vertices_lie_in_polytope():
    for g in [grid(2, 3), torus(2, 3), torus(2, 5)]:
        h = edmond_hrep(g)
        for v in pm_vectors(g):
            assert contains(h, v, 1)


def test_all_ones_interior_of_3P_torus25():
    g = torus(2, 5)
    h = edmond_hrep(g)
    ones = [1] * 15
    assert contains(h, ones, 3, "relative_interior")
    assert strictly_satisfies(h, ones, 3)
    assert not contains(h, ones, 3 + 1, "relative_interior")


def test_interior_implies_closed():
    g = torus(2, 3)
    h = edmond_hrep(g)
    for t in (1, 2, 3, 4):
        for x in itertools.islice(
                itertools.product(range(t + 1), repeat=9), 4000):
            if contains(h, x, t, "relative_interior"):
                assert contains(h, x, t)


def test_implicit_violation_rejected_by_both_regions():
    h = edmond_hrep(torus(1, 6))
    imp = [r for r in h.cut_rows() if r.implicit_eq]
    t = 2
    for x in itertools.product(range(t + 1), repeat=6):
        if any(sum(x[e] for e in r.support) != t for r in imp):
            assert not contains(h, x, t)
            assert not contains(h, x, t, "relative_interior")


def test_contains_region_and_length_validation():
    h = edmond_hrep(grid(2, 2))
    with pytest.raises(ValueError):
        contains(h, [0, 0], 1)
    with pytest.raises(ValueError):
        contains(h, [0, 0, 0, 0], 1, region="open")


# ------------------------------------------------- convex-hull oracle (LP)

def test_member_convex_trivial_cases():
    g = grid(2, 3)
    vecs = pm_vectors(g)
    for t in (1, 2, 3):
        for v in vecs:
            assert member_convex(vecs, [t * e for e in v.entries], t)
    pair = [a + b for a, b in zip(vecs[0].entries, vecs[1].entries)]
    assert member_convex(vecs, pair, 2)
    assert not member_convex(vecs, [99] * 7, 1)
    with pytest.raises(ValueError):
        member_convex([], [0] * 7, 1)


def exhaustive_equivalence(g, t_values):
    """contains(edmond, x, t) must equal member_convex on the whole box."""
    h = edmond_hrep(g)
    vecs = pm_vectors(g)
    pts = [v.entries for v in vecs]
    hull = affine_hull_equations(pts)
    for t in t_values:
        for x in itertools.product(range(t + 1), repeat=g.n_edges):
            lhs = contains(h, x, t)
            if any(sum(a[e] * x[e] for e in range(g.n_edges)) != t * c
                   for a, c in hull):
                rhs = False   # off the affine hull of the vertices
            else:
                rhs = member_convex(vecs, x, t)
            assert lhs == rhs, (g, t, x)


def test_oracle_equivalence_small_graphs():
    exhaustive_equivalence(grid(2, 2), (1, 2, 3))
    exhaustive_equivalence(torus(1, 4), (1, 2, 3))
    exhaustive_equivalence(torus(1, 6), (1, 2))


def test_oracle_equivalence_grid23():
    exhaustive_equivalence(grid(2, 3), (1, 2))


def test_oracle_equivalence_torus23():
    exhaustive_equivalence(torus(2, 3), (1, 2))


def test_oracle_agreement_sampled_torus25():
    # the full box is out of reach at 15 edges; check every lattice point of
    # tP plus seeded random box points
    from matchpoly.ehrhart import enumerate_lattice_points
    g = torus(2, 5)
    h = edmond_hrep(g)
    vecs = pm_vectors(g)
    for t in (1, 2):
        for x in enumerate_lattice_points(h, t):
            assert member_convex(vecs, x, t)
    for i in range(40):
        x = lcg_ints(1000 + i, g.n_edges, 0, 2)
        t = 2
        assert contains(h, x, t) == member_convex(vecs, x, t)


def test_bipartite_cut_rows_redundant():
    # dropping the odd-cut rows of a bipartite graph changes no verdict
    g = grid(2, 3)
    h = edmond_hrep(g)
    h0 = h.without_cut_rows()
    assert len(h.cut_rows()) > 0 and len(h0.cut_rows()) == 0
    for t in (1, 2, 3):
        for x in itertools.product(range(t + 1), repeat=7):
            assert contains(h, x, t) == contains(h0, x, t)
    # while on a non-bipartite graph they do real work
    tg = torus(2, 3)
    ht = edmond_hrep(tg)
    ht0 = ht.without_cut_rows()
    diffs = sum(1 for x in itertools.product(range(2), repeat=9)
                if contains(ht, x, 1) != contains(ht0, x, 1))
    assert diffs > 0


# ------------------------------------------------------------------------ LP

def test_lp_all_ones_cost_gives_half_vertices():
    for g in [grid(2, 2), grid(2, 3), torus(2, 3), torus(2, 5)]:
        h = edmond_hrep(g)
        val, x = lp_optimize(h, 1, [1] * g.n_edges, sense="max")
        assert val == Fraction(g.n_vertices, 2)
        val2, _ = lp_optimize(h, 1, [1] * g.n_edges, sense="min")
        assert val2 == Fraction(g.n_vertices, 2)


def test_lp_edge_indicator_detects_matchable_edges():
    g = grid(2, 3)
    h = edmond_hrep(g)
    for e in range(g.n_edges):
        cost = [0] * g.n_edges
        cost[e] = 1
        val, _ = lp_optimize(h, 1, cost, sense="max")
        assert val == 1   # every edge of the 2x3 grid lies in some matching


def test_lp_matches_enumeration_on_seeded_costs():
    for g in [torus(2, 3), grid(2, 3)]:
        h = edmond_hrep(g)
        vecs = pm_vectors(g)
        for i in range(20):
            cost = lcg_ints(77 + i, g.n_edges, -5, 5)
            val, _ = lp_optimize(h, 1, cost, sense="max")
            best = max(sum(c * v for c, v in zip(cost, vec.entries))
                       for vec in vecs)
            assert val == best


def test_lp_infeasible_and_validation():
    h = edmond_hrep(grid(3, 3))
    with pytest.raises(Infeasible):
        lp_optimize(h, 1, [0] * h.n_edges)
    h2 = edmond_hrep(grid(2, 2))
    with pytest.raises(ValueError):
        lp_optimize(h2, 1, [1, 2])


def test_lp_solution_is_feasible_point():
    g = torus(2, 5)
    h = edmond_hrep(g)
    cost = lcg_ints(5, g.n_edges, -5, 5)
    val, x = lp_optimize(h, 3, cost, sense="max")
    assert contains(h, x, 3)
    assert val == sum(Fraction(c) * xi for c, xi in zip(cost, x))


# ----------------------------------------------------------------- dimension

def test_dimension_from_vertices_examples():
    assert dimension_from_vertices(pm_vectors(torus(2, 5))) == 5
    assert dimension_from_vertices(pm_vectors(grid(2, 3))) == 2
    assert dimension_from_vertices([pm_vectors(grid(2, 2))[0]]) == 0
    with pytest.raises(ValueError):
        dimension_from_vertices([])


def test_dimension_formula_examples():
    g33 = grid(3, 3)
    ng = neighbor_graph(g33, SubsetSpec.from_labels(g33, [(1, 1)]))
    assert dimension_formula(ng) == 3
    g23 = grid(2, 3)
    ng_full = neighbor_graph(g23, SubsetSpec.of(range(6)))
    assert dimension_formula(ng_full) == 7 - 6 + 1 == 2
    for m, n in [(3, 3), (3, 4), (4, 4), (3, 5)]:
        g = grid(m, n)
        interior = [i * n + j for i in range(1, m - 1) for j in range(1, n - 1)]
        ng_i = neighbor_graph(g, SubsetSpec.of(interior))
        assert dimension_formula(ng_i) == m * n - m - n


def test_dimension_formula_hypothesis_errors():
    g33 = grid(3, 3)
    disconnected = SubsetSpec.from_labels(g33, [(0, 0), (2, 2)])
    with pytest.raises(ValueError, match="disconnected"):
        dimension_formula(neighbor_graph(g33, disconnected))
    t = torus(2, 3)
    with pytest.raises(ValueError, match="bipartite"):
        dimension_formula(neighbor_graph(t, SubsetSpec.of(range(3))))
    # an S-vertex with no incident edges leaves slots in no matching
    g = Graph(3, [(1, 2)])
    with pytest.raises(ValueError, match="no S-matching"):
        dimension_formula(neighbor_graph(g, SubsetSpec.of([0, 1])))


def test_dimension_formula_agrees_with_vertices(corpus):
    for name, g, s in corpus:
        ng = neighbor_graph(g, s)
        try:
            want = dimension_formula(ng)
        except ValueError:
            continue   # hypotheses fail; formula not applicable
        got = dimension_from_vertices(sm_vectors(ng))
        assert got == want, name


def test_affine_hull_matches_polytope_dimension():
    # with a strictly positive feasible point, dim P equals dim W
    for g in [grid(2, 3), torus(2, 5), torus(2, 4)]:
        h = edmond_hrep(g)
        vecs = pm_vectors(g)
        hull = affine_hull(h, vecs)
        assert hull.dimension == dimension_from_vertices(vecs)
        assert hull.base_point is not None
        # centroid satisfies the equalities at t = 1
        for row in h.equalities:
            assert sum(hull.base_point[e] for e in row.support) == 1
