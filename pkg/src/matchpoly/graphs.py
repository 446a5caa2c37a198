"""Simple undirected graphs with a canonical edge order, plus the grid/torus
families, neighbor graphs, cuts and exhaustive minimum-cut search.

The canonical edge order — edges as (u, v) with u < v, sorted lexicographically,
vertices indexed row-major by their (i, j) lattice label — is part of the
external contract: every edge-indexed vector emitted anywhere in this package
uses it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence


class Graph:
    """Immutable simple undirected graph.

    Invariants enforced at construction: no loops, no duplicate edges, and the
    edge list strictly increasing in lexicographic order on normalized (u, v)
    pairs with u < v.  That order is THE canonical edge index.
    """

    __slots__ = ("n_vertices", "edges", "labels", "family", "shape",
                 "edge_index", "incident", "_neighbors")

    def __init__(self, n_vertices: int,
                 edges: Iterable[tuple[int, int]],
                 labels: Sequence[tuple[int, int]] | None = None,
                 family: str = "custom",
                 shape: tuple[int, int] | None = None):
        if n_vertices < 0:
            raise ValueError("n_vertices must be nonnegative")
        norm = []
        for (u, v) in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise ValueError(f"edge ({u},{v}) out of vertex range")
            norm.append((u, v) if u < v else (v, u))
        for a, b in zip(norm, norm[1:]):
            if a >= b:
                raise ValueError(f"edge list not strictly sorted at {a}, {b}")
        if labels is not None and len(labels) != n_vertices:
            raise ValueError("labels length must equal n_vertices")
        self.n_vertices = n_vertices
        self.edges = tuple(norm)
        self.labels = tuple(tuple(l) for l in labels) if labels is not None else None
        self.family = family
        self.shape = shape
        self.edge_index = {e: i for i, e in enumerate(self.edges)}
        inc: list[list[int]] = [[] for _ in range(n_vertices)]
        nb: list[list[int]] = [[] for _ in range(n_vertices)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
            nb[u].append(v)
            nb[v].append(u)
        self.incident = tuple(tuple(x) for x in inc)
        self._neighbors = tuple(tuple(x) for x in nb)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.incident[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._neighbors[v]

    def vertex_id(self, label: tuple[int, int]) -> int:
        """Vertex index for a lattice label (i, j); requires labels."""
        if self.labels is None:
            raise ValueError("graph has no vertex labels")
        try:
            return self.labels.index(tuple(label))
        except ValueError:
            raise ValueError(f"no vertex labeled {label}") from None

    def __repr__(self) -> str:
        return (f"Graph({self.family}, |V|={self.n_vertices}, "
                f"|E|={self.n_edges})")

    def to_json_dict(self) -> dict:
        m, n = self.shape if self.shape is not None else (None, None)
        return {
            "m": m,
            "n": n,
            "family": self.family,
            "vertices": [list(l) for l in self.labels] if self.labels is not None
                        else [[v, 0] for v in range(self.n_vertices)],
            "edges": [list(e) for e in self.edges],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "Graph":
        labels = [tuple(v) for v in d["vertices"]]
        shape = (d["m"], d["n"]) if d.get("m") is not None else None
        return cls(len(labels), [tuple(e) for e in d["edges"]],
                   labels=labels, family=d.get("family", "custom"), shape=shape)

    def to_dot(self) -> str:
        """Plain DOT emitter, no layout logic."""
        lines = ["graph G {"]
        for v in range(self.n_vertices):
            lab = f"{self.labels[v]}" if self.labels is not None else str(v)
            lines.append(f'  {v} [label="{lab}"];')
        for (u, v) in self.edges:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SubsetSpec:
    """A strictly sorted subset of vertex indices."""

    members: tuple[int, ...]

    def __post_init__(self):
        for a, b in zip(self.members, self.members[1:]):
            if a >= b:
                raise ValueError("subset members must be strictly sorted")

    @classmethod
    def of(cls, members: Iterable[int]) -> "SubsetSpec":
        return cls(tuple(sorted(set(members))))

    @classmethod
    def from_labels(cls, g: Graph, labels: Iterable[tuple[int, int]]) -> "SubsetSpec":
        return cls.of(g.vertex_id(l) for l in labels)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: int) -> bool:
        return v in set(self.members)

    def validate_in(self, g: Graph) -> None:
        if self.members and not (0 <= self.members[0] and self.members[-1] < g.n_vertices):
            raise ValueError("subset members out of vertex range")

    def complement(self, g: Graph) -> "SubsetSpec":
        mem = set(self.members)
        return SubsetSpec(tuple(v for v in range(g.n_vertices) if v not in mem))


class EdgeSlot(NamedTuple):
    """One edge of a neighbor graph: its base-graph edge id, endpoints, and
    whether it is a bridge (exactly one endpoint in S) or internal."""
    base_edge: int
    endpoints: tuple[int, int]
    bridge: bool


class NeighborGraph:
    """The subgraph on S and its neighborhood: vertices S ∪ Γ(S), edges all
    base edges incident to S, in base canonical order."""

    __slots__ = ("base", "s", "gamma", "edge_slots", "s_incident")

    def __init__(self, base: Graph, s: SubsetSpec):
        if not s.members:
            raise ValueError("S must be nonempty")
        s.validate_in(base)
        self.base = base
        self.s = s
        sset = set(s.members)
        slots = []
        gamma = set()
        for i, (u, v) in enumerate(base.edges):
            iu, iv = u in sset, v in sset
            if iu or iv:
                slots.append(EdgeSlot(i, (u, v), iu != iv))
                if not iu:
                    gamma.add(u)
                if not iv:
                    gamma.add(v)
        self.gamma = tuple(sorted(gamma))
        self.edge_slots = tuple(slots)
        s_inc: dict[int, list[int]] = {v: [] for v in s.members}
        for k, slot in enumerate(slots):
            for w in slot.endpoints:
                if w in sset:
                    s_inc[w].append(k)
        self.s_incident = {v: tuple(ix) for v, ix in s_inc.items()}

    @property
    def n_edges(self) -> int:
        return len(self.edge_slots)

    def bridge_slots(self) -> tuple[int, ...]:
        return tuple(k for k, slot in enumerate(self.edge_slots) if slot.bridge)

    def __repr__(self) -> str:
        nb = sum(1 for s in self.edge_slots if s.bridge)
        return (f"NeighborGraph(|S|={len(self.s)}, |Γ|={len(self.gamma)}, "
                f"|E_S|={self.n_edges} ({nb} bridges))")


class InducedSubgraph(NamedTuple):
    graph: Graph
    vertex_ids: tuple[int, ...]  # new index -> base vertex id


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def grid(m: int, n: int) -> Graph:
    """The m x n grid graph: vertices (i, j), edges between lattice neighbors."""
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be >= 1")
    labels = [(i, j) for i in range(m) for j in range(n)]
    vid = lambda i, j: i * n + j
    edges = []
    for i in range(m):
        for j in range(n):
            if j + 1 < n:
                edges.append((vid(i, j), vid(i, j + 1)))
            if i + 1 < m:
                edges.append((vid(i, j), vid(i + 1, j)))
    edges = sorted((min(e), max(e)) for e in edges)
    return Graph(m * n, edges, labels=labels, family="grid", shape=(m, n))


def torus(m: int, n: int) -> Graph:
    """The m x n torus graph: the grid plus row/column wraparound edges.

    Wraparound loops (m = 1 or n = 1) and parallels of existing edges
    (m = 2 or n = 2) are silently collapsed so the result is simple.
    """
    if m < 1 or n < 1:
        raise ValueError("torus dimensions must be >= 1")
    base = grid(m, n)
    vid = lambda i, j: i * n + j
    extra = set(base.edges)
    for j in range(n):
        u, v = vid(0, j), vid(m - 1, j)
        if u != v:
            extra.add((min(u, v), max(u, v)))
    for i in range(m):
        u, v = vid(i, 0), vid(i, n - 1)
        if u != v:
            extra.add((min(u, v), max(u, v)))
    return Graph(m * n, sorted(extra), labels=base.labels, family="torus",
                 shape=(m, n))


def neighbor_graph(g: Graph, s: SubsetSpec) -> NeighborGraph:
    return NeighborGraph(g, s)


def induced_subgraph(g: Graph, s: SubsetSpec) -> InducedSubgraph:
    """The subgraph induced by S, reindexed canonically; vertex_ids maps the
    new indices back to the base graph."""
    if not s.members:
        raise ValueError("S must be nonempty")
    s.validate_in(g)
    old = list(s.members)
    new_id = {v: k for k, v in enumerate(old)}
    edges = sorted((new_id[u], new_id[v]) for (u, v) in g.edges
                   if u in new_id and v in new_id)
    labels = [g.labels[v] for v in old] if g.labels is not None else None
    return InducedSubgraph(Graph(len(old), edges, labels=labels), tuple(old))


# ---------------------------------------------------------------------------
# queries
# ---------------------------------------------------------------------------

def is_bipartite(g: Graph) -> Optional[tuple[int, ...]]:
    """A two-coloring (0/1 per vertex, every edge bichromatic) or None.

    Deterministic: BFS from the lowest-index vertex of each component, which
    gets color 0.
    """
    color: list[int | None] = [None] * g.n_vertices
    for start in range(g.n_vertices):
        if color[start] is not None:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            nxt = []
            for v in queue:
                for w in g.neighbors(v):
                    if color[w] is None:
                        color[w] = 1 - color[v]
                        nxt.append(w)
                    elif color[w] == color[v]:
                        return None
            queue = nxt
    return tuple(color)  # type: ignore[arg-type]


def cut(g: Graph, s: SubsetSpec | Iterable[int]) -> tuple[int, ...]:
    """Edge ids with exactly one endpoint in S, in canonical order."""
    members = s.members if isinstance(s, SubsetSpec) else tuple(s)
    sset = set(members)
    return tuple(i for i, (u, v) in enumerate(g.edges)
                 if (u in sset) != (v in sset))


def cut_mask(g: Graph, members: Iterable[int]) -> int:
    """Cut as an edge-id bitmask: XOR of incidence masks (internal edges cancel)."""
    inc = incidence_masks(g)
    m = 0
    for v in members:
        m ^= inc[v]
    return m


def incidence_masks(g: Graph) -> tuple[int, ...]:
    masks = [0] * g.n_vertices
    for i, (u, v) in enumerate(g.edges):
        masks[u] |= 1 << i
        masks[v] |= 1 << i
    return tuple(masks)


def min_cut_over_subsets(g: Graph, size_lo: int, size_hi: int,
                         parity: str = "any") -> tuple[int, SubsetSpec]:
    """Exhaustive minimum of |C(S, S')| over subsets in the size/parity range.

    Ties broken by lexicographically least witness.  Exponential in |V|; the
    CLI caps |V| at 24 unless overridden.
    """
    if parity not in ("any", "odd", "even"):
        raise ValueError("parity must be any|odd|even")
    if not (0 < size_lo <= size_hi < g.n_vertices):
        raise ValueError("empty or invalid size range")
    want = {"any": (0, 1), "odd": (1,), "even": (0,)}[parity]
    if not any(size_lo <= k <= size_hi and (k % 2) in want
               for k in range(size_lo, size_hi + 1)):
        raise ValueError("no subset size matches the parity filter")

    degs = [g.degree(v) for v in range(g.n_vertices)]
    nbrs = g._neighbors
    best_size: int | None = None
    best_members: tuple[int, ...] | None = None
    members: list[int] = []
    in_s = [False] * g.n_vertices

    # depth-first over vertices in increasing order, cut size updated
    # incrementally; include-before-exclude yields lexicographic witnesses
    def rec(v: int, cutsize: int) -> None:
        nonlocal best_size, best_members
        k = len(members)
        if k >= size_lo and (k % 2) in want:
            if best_size is None or cutsize < best_size:
                best_size = cutsize
                best_members = tuple(members)
        if v == g.n_vertices or k == size_hi:
            return
        if k + (g.n_vertices - v) < size_lo:
            return
        delta = degs[v] - 2 * sum(1 for w in nbrs[v] if in_s[w])
        members.append(v)
        in_s[v] = True
        rec(v + 1, cutsize + delta)
        members.pop()
        in_s[v] = False
        rec(v + 1, cutsize)

    rec(0, 0)
    assert best_members is not None
    return best_size, SubsetSpec(best_members)


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    seen = [False] * g.n_vertices
    comps = []
    for start in range(g.n_vertices):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = [start]
        while queue:
            v = queue.pop()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    return comps
