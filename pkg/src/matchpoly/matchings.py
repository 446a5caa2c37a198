"""Perfect matchings and S-matchings, enumerated by backtracking, and their
characteristic vectors (the polytope vertices)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .graphs import Graph, NeighborGraph

Ambient = Union[Graph, NeighborGraph]


def ambient_edge_count(ambient: Ambient) -> int:
    return ambient.n_edges


@dataclass(frozen=True)
class EdgeVector:
    """Exact-integer vector indexed by the canonical edge order of its ambient
    edge set (the edges of a Graph, or the slots of a NeighborGraph)."""

    entries: tuple[int, ...]
    ambient: Ambient

    def __post_init__(self):
        if len(self.entries) != ambient_edge_count(self.ambient):
            raise ValueError("entry count does not match ambient edge count")

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def shift(self, delta: int = 1) -> "EdgeVector":
        """The vector plus delta on every coordinate (the map x -> x + δ·1)."""
        return EdgeVector(tuple(e + delta for e in self.entries), self.ambient)

    def total(self) -> int:
        return sum(self.entries)


def all_ones(ambient: Ambient) -> EdgeVector:
    return EdgeVector((1,) * ambient_edge_count(ambient), ambient)


@dataclass(frozen=True)
class Matching:
    """A matching as sorted canonical edge ids.

    With a Graph ambient the scope is "perfect": edges pairwise disjoint and
    every vertex covered exactly once.  With a NeighborGraph ambient the scope
    is "s": no two edges meet at a vertex of S, every S-vertex covered exactly
    once (edges may share Γ(S) endpoints).
    """

    edge_ids: tuple[int, ...]
    ambient: Ambient

    @property
    def scope(self) -> str:
        return "perfect" if isinstance(self.ambient, Graph) else "s"

    def validate(self) -> None:
        for a, b in zip(self.edge_ids, self.edge_ids[1:]):
            if a >= b:
                raise ValueError("edge ids must be strictly sorted")
        if self.scope == "perfect":
            g: Graph = self.ambient  # type: ignore[assignment]
            seen: set[int] = set()
            for ei in self.edge_ids:
                u, v = g.edges[ei]
                if u in seen or v in seen:
                    raise ValueError("matching edges share a vertex")
                seen.add(u)
                seen.add(v)
            if len(seen) != g.n_vertices:
                raise ValueError("matching does not cover every vertex")
        else:
            ng: NeighborGraph = self.ambient  # type: ignore[assignment]
            sset = set(ng.s.members)
            count: dict[int, int] = {v: 0 for v in sset}
            for k in self.edge_ids:
                for w in ng.edge_slots[k].endpoints:
                    if w in sset:
                        count[w] += 1
            if any(c != 1 for c in count.values()):
                raise ValueError("each S-vertex must lie on exactly one edge")


def characteristic_vector(m: Matching) -> EdgeVector:
    """0/1 vector with ones exactly on the matching's edges."""
    n = ambient_edge_count(m.ambient)
    entries = [0] * n
    for ei in m.edge_ids:
        entries[ei] = 1
    return EdgeVector(tuple(entries), m.ambient)


def enumerate_perfect_matchings(g: Graph) -> list[Matching]:
    """All perfect matchings, each exactly once, in lexicographic order of
    their sorted edge-id tuples.

    Backtracks on the lowest-index uncovered vertex, trying incident edges in
    canonical order, which yields the lexicographic output order directly.
    """
    if g.n_vertices % 2 != 0:
        return []
    covered = [False] * g.n_vertices
    out: list[Matching] = []
    chosen: list[int] = []
    edges = g.edges
    incident = g.incident

    def rec(lowest: int) -> None:
        while lowest < g.n_vertices and covered[lowest]:
            lowest += 1
        if lowest == g.n_vertices:
            out.append(Matching(tuple(chosen), g))
            return
        for ei in incident[lowest]:
            u, v = edges[ei]
            w = v if u == lowest else u
            if not covered[w]:
                covered[lowest] = covered[w] = True
                chosen.append(ei)
                rec(lowest + 1)
                chosen.pop()
                covered[lowest] = covered[w] = False

    rec(0)
    return out


def enumerate_s_matchings(ng: NeighborGraph) -> list[Matching]:
    """All S-matchings of a neighbor graph, each exactly once, sorted.

    Same backtracking scheme on the lowest uncovered S-vertex; two bridge
    edges may share a Γ(S) endpoint, so only S-coverage is tracked.
    """
    s_members = ng.s.members
    sset = set(s_members)
    covered = {v: False for v in s_members}
    slots = ng.edge_slots
    out: list[Matching] = []
    chosen: list[int] = []

    def rec(idx: int) -> None:
        while idx < len(s_members) and covered[s_members[idx]]:
            idx += 1
        if idx == len(s_members):
            out.append(Matching(tuple(sorted(chosen)), ng))
            return
        v = s_members[idx]
        for k in ng.s_incident[v]:
            other = None
            for w in slots[k].endpoints:
                if w in sset and w != v:
                    other = w
            if other is not None and covered[other]:
                continue
            covered[v] = True
            if other is not None:
                covered[other] = True
            chosen.append(k)
            rec(idx + 1)
            chosen.pop()
            covered[v] = False
            if other is not None:
                covered[other] = False

    rec(0)
    # unlike the perfect case, generation order is not lexicographic here
    # (an internal edge can cover a later S-vertex whose bridges sort earlier)
    out.sort(key=lambda m: m.edge_ids)
    return out


def matching_vectors(matchings: Sequence[Matching]) -> list[EdgeVector]:
    return [characteristic_vector(m) for m in matchings]
