"""Matching enumeration against brute-force oracles; characteristic vectors."""

import itertools

import pytest

from matchpoly import (Graph, SubsetSpec, all_ones, characteristic_vector,
                       enumerate_perfect_matchings, enumerate_s_matchings,
                       grid, neighbor_graph, torus)
from matchpoly.matchings import Matching


def brute_perfect_matchings(g: Graph):
    """Oracle: filter all edge subsets of size |V|/2."""
    if g.n_vertices % 2:
        return []
    out = []
    for sub in itertools.combinations(range(g.n_edges), g.n_vertices // 2):
        seen = set()
        ok = True
        for ei in sub:
            u, v = g.edges[ei]
            if u in seen or v in seen:
                ok = False
                break
            seen.update((u, v))
        if ok and len(seen) == g.n_vertices:
            out.append(sub)
    return sorted(out)


def brute_s_matchings(ng):
    """Oracle: filter all subsets of the slots."""
    sset = set(ng.s.members)
    out = []
    for r in range(len(ng.edge_slots) + 1):
        for sub in itertools.combinations(range(len(ng.edge_slots)), r):
            cover = {v: 0 for v in sset}
            for k in sub:
                for w in ng.edge_slots[k].endpoints:
                    if w in sset:
                        cover[w] += 1
            if all(c == 1 for c in cover.values()):
                out.append(sub)
    return sorted(out)


# ------------------------------------------------------------------- counting

def test_perfect_matching_counts():
    assert len(enumerate_perfect_matchings(torus(2, 5))) == 11
    assert len(enumerate_perfect_matchings(grid(2, 2))) == 2
    assert len(enumerate_perfect_matchings(grid(3, 3))) == 0
    assert len(enumerate_perfect_matchings(torus(2, 3))) == 4
    assert len(enumerate_perfect_matchings(grid(2, 3))) == 3
    assert len(enumerate_perfect_matchings(torus(2, 4))) == 9
    assert len(enumerate_perfect_matchings(torus(3, 4))) == 50
    assert len(enumerate_perfect_matchings(torus(4, 4))) == 272


def test_perfect_matchings_against_subset_oracle():
    for g in [grid(2, 2), grid(2, 3), grid(2, 4), torus(2, 3), torus(1, 6),
              torus(2, 4), torus(2, 5), grid(1, 4)]:
        got = [m.edge_ids for m in enumerate_perfect_matchings(g)]
        assert got == brute_perfect_matchings(g), g


def test_perfect_matchings_sorted_and_valid():
    for g in [grid(2, 4), torus(2, 5), torus(3, 4)]:
        ms = enumerate_perfect_matchings(g)
        ids = [m.edge_ids for m in ms]
        assert ids == sorted(ids)
        assert len(set(ids)) == len(ids)
        for m in ms:
            m.validate()


def test_zero_vertex_graph_has_one_empty_matching():
    g = Graph(0, [])
    ms = enumerate_perfect_matchings(g)
    assert len(ms) == 1 and ms[0].edge_ids == ()
    assert characteristic_vector(ms[0]).entries == ()


# ---------------------------------------------------------------- s-matchings

def test_s_matching_counts():
    g33 = grid(3, 3)
    ng = neighbor_graph(g33, SubsetSpec.from_labels(g33, [(1, 1)]))
    assert len(enumerate_s_matchings(ng)) == 4

    g22 = grid(2, 2)
    ng_full = neighbor_graph(g22, SubsetSpec.of(range(4)))
    assert len(enumerate_s_matchings(ng_full)) == 2

    g34 = grid(3, 4)
    ng_pair = neighbor_graph(g34, SubsetSpec.from_labels(g34, [(1, 1), (1, 2)]))
    assert len(enumerate_s_matchings(ng_pair)) == 10


def test_s_matchings_against_subset_oracle(corpus):
    for name, g, s in corpus:
        ng = neighbor_graph(g, s)
        got = [m.edge_ids for m in enumerate_s_matchings(ng)]
        assert got == brute_s_matchings(ng), name
        for m in enumerate_s_matchings(ng):
            m.validate()


def test_s_matchings_full_set_equals_perfect():
    for g in [grid(2, 2), grid(2, 3), torus(2, 3)]:
        ng = neighbor_graph(g, SubsetSpec.of(range(g.n_vertices)))
        # slots coincide with edges here, in the same canonical order
        sm = [m.edge_ids for m in enumerate_s_matchings(ng)]
        pm = [m.edge_ids for m in enumerate_perfect_matchings(g)]
        assert sm == pm


def test_independent_s_count_is_degree_product():
    cases = []
    g22 = grid(2, 2)
    cases.append((g22, SubsetSpec.from_labels(g22, [(0, 0), (1, 1)])))
    c6 = torus(1, 6)
    cases.append((c6, SubsetSpec.of([0, 2, 4])))
    g33 = grid(3, 3)
    cases.append((g33, SubsetSpec.from_labels(g33, [(0, 0), (1, 1)])))
    for g, s in cases:
        assert all(w not in set(s.members)
                   for v in s.members for w in g.neighbors(v))
        ng = neighbor_graph(g, s)
        expect = 1
        for v in s.members:
            expect *= g.degree(v)
        assert len(enumerate_s_matchings(ng)) == expect


def test_s_matchings_may_share_gamma_vertices():
    # two S-vertices with one common neighbor: both bridges into it coexist
    g = Graph(3, [(0, 2), (1, 2)])
    ng = neighbor_graph(g, SubsetSpec.of([0, 1]))
    ms = enumerate_s_matchings(ng)
    assert len(ms) == 1 and ms[0].edge_ids == (0, 1)


# ------------------------------------------------------ characteristic vectors

def test_characteristic_vectors_of_4cycle():
    g = grid(2, 2)
    vecs = sorted(characteristic_vector(m).entries
                  for m in enumerate_perfect_matchings(g))
    # edges in canonical order: (0,1), (0,2), (1,3), (2,3)
    assert vecs == [(0, 1, 1, 0), (1, 0, 0, 1)]


def test_characteristic_vector_sum_is_half_vertices():
    for g in [grid(2, 3), torus(2, 5), torus(3, 4)]:
        for m in enumerate_perfect_matchings(g):
            assert characteristic_vector(m).total() == g.n_vertices // 2


def test_matching_validation_rejects_bad_input():
    g = grid(2, 2)
    with pytest.raises(ValueError):
        Matching((0, 1), g).validate()      # edges (0,1),(0,2) share vertex 0
    with pytest.raises(ValueError):
        Matching((1, 0), g).validate()      # unsorted
    with pytest.raises(ValueError):
        Matching((0,), g).validate()        # does not cover


def test_all_ones_vector():
    g = torus(2, 5)
    ones = all_ones(g)
    assert len(ones) == 15 and ones.total() == 15
    assert ones.shift(2).entries == (3,) * 15
