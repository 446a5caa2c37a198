"""Shared instance corpus for the test suite."""

import pytest

from matchpoly import SubsetSpec, grid, torus


def smatching_corpus():
    """(name, graph, subset) instances with bipartite induced subgraph and at
    most 8 neighbor-graph edges; the workhorse corpus for the S-matching
    oracle-equivalence and cut-bound suites."""
    g33 = grid(3, 3)
    g34 = grid(3, 4)
    g22 = grid(2, 2)
    g23 = grid(2, 3)
    c6 = torus(1, 6)
    t25 = torus(2, 5)
    return [
        ("grid33-center", g33, SubsetSpec.from_labels(g33, [(1, 1)])),
        ("grid33-corner", g33, SubsetSpec.from_labels(g33, [(0, 0)])),
        ("grid33-center+top", g33, SubsetSpec.from_labels(g33, [(0, 1), (1, 1)])),
        ("grid34-pair", g34, SubsetSpec.from_labels(g34, [(1, 1), (1, 2)])),
        ("grid22-full", g22, SubsetSpec.of(range(4))),
        ("grid23-full", g23, SubsetSpec.of(range(6))),
        ("grid22-diagonal", g22, SubsetSpec.from_labels(g22, [(0, 0), (1, 1)])),
        ("grid23-toprow", g23, SubsetSpec.from_labels(g23, [(0, 0), (0, 1), (0, 2)])),
        ("cycle6-edge", c6, SubsetSpec.of([0, 1])),
        ("cycle6-alternate", c6, SubsetSpec.of([0, 2, 4])),
        ("torus25-toprun", t25, SubsetSpec.of([0, 1, 2])),
    ]


@pytest.fixture(scope="session")
def corpus():
    return smatching_corpus()
