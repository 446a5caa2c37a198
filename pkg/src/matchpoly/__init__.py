"""Exact-arithmetic matching polytopes: grids, tori, S-matchings, Ehrhart
profiles, Gorenstein verdicts, and executable verification of the
quantitative claims about them."""

from .budget import Budget, BudgetExceeded
from .graphs import (Graph, NeighborGraph, SubsetSpec, cut, grid,
                     induced_subgraph, is_bipartite, min_cut_over_subsets,
                     neighbor_graph, torus)
from .matchings import (EdgeVector, Matching, all_ones, characteristic_vector,
                        enumerate_perfect_matchings, enumerate_s_matchings,
                        matching_vectors)
from .polytopes import (AffineHull, ScalableHRep, affine_hull, contains,
                        dimension_formula, dimension_from_vertices,
                        edmond_hrep, lp_optimize, member_convex,
                        smatching_hrep, strictly_satisfies)
from .ehrhart import (DataIntegrityError, EhrhartProfile, count_lattice_points,
                      enumerate_lattice_points, gorenstein_shift_check,
                      h_star, interpolate, profile, reciprocity_check)
from .claims import (VerificationReport, WitnessVector, check_min_bridges,
                     check_odd_cut_bound, check_regular_smatching_gorenstein,
                     check_shift_injection, check_smatching_exactness,
                     check_torus_classification, check_witness,
                     check_dimension_formulas, default_battery,
                     torus_gorenstein_predicate, witness)

__version__ = "0.1.0"
