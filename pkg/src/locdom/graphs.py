"""Immutable graph substrate: vertex sets, graphs, bipartitions, twins, components.

Vertices are dense 0-based indices.  Adjacency rows and all vertex sets are
bitmasks wrapped in :class:`VertexSet`, which makes neighborhood-trace
comparisons O(1) and keeps every value hashable and shareable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class VertexSet:
    """A set of vertex indices stored as a bitmask."""

    bits: int = 0

    @classmethod
    def of(cls, items: Iterable[int]) -> "VertexSet":
        m = 0
        for v in items:
            if v < 0:
                raise ValueError(f"vertex index must be nonnegative, got {v}")
            m |= 1 << v
        return cls(m)

    @classmethod
    def single(cls, v: int) -> "VertexSet":
        return cls.of((v,))

    def __contains__(self, v: int) -> bool:
        return v >= 0 and (self.bits >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        # ascending index order
        b = self.bits
        while b:
            low = b & -b
            yield low.bit_length() - 1
            b ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & ~other.bits)

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits ^ other.bits)

    def issubset(self, other: "VertexSet") -> bool:
        return self.bits & ~other.bits == 0

    def add(self, v: int) -> "VertexSet":
        return VertexSet(self.bits | (1 << v))

    def discard(self, v: int) -> "VertexSet":
        return VertexSet(self.bits & ~(1 << v))

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"VertexSet({{{', '.join(map(str, self))}}})"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adj[i]`` is the open neighborhood N(i) as a :class:`VertexSet`.
    Rows are symmetric and irreflexive; use :func:`build_graph` to construct.
    """

    n: int
    adj: tuple[VertexSet, ...]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adj[i]

    def edges(self) -> Iterator[tuple[int, int]]:
        for i in range(self.n):
            for j in self.adj[i]:
                if j > i:
                    yield (i, j)

    def edge_count(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def vertices(self) -> VertexSet:
        return VertexSet((1 << self.n) - 1)


@dataclass(frozen=True)
class Bipartition:
    """Stable sides (U, W) of a connected bipartite graph, with |U| = r <= s = |W|."""

    U: VertexSet
    W: VertexSet
    r: int
    s: int


@dataclass(frozen=True)
class TwinPair:
    """Pair u < v with N(u)=N(v) (kind 'open') or N[u]=N[v] (kind 'closed')."""

    u: int
    v: int
    kind: str


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from a vertex count and an edge list.

    Edges are deduplicated; self-loops and out-of-range endpoints are rejected.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    rows = [0] * n
    for i, j in edges:
        if i == j:
            raise ValueError(f"self-loop rejected: ({i}, {j})")
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"edge ({i}, {j}) out of range for n={n}")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(VertexSet(r) for r in rows))


def complement(g: Graph) -> Graph:
    """Complement graph: ij is an edge iff it is not an edge of g (i != j)."""
    full = (1 << g.n) - 1
    rows = []
    for i in range(g.n):
        rows.append(VertexSet(full & ~g.adj[i].bits & ~(1 << i)))
    return Graph(g.n, tuple(rows))


def connected_components(g: Graph) -> list[VertexSet]:
    """Partition of V into maximal connected pieces, ordered by smallest member."""
    seen = 0
    out = []
    for start in range(g.n):
        if (seen >> start) & 1:
            continue
        comp = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            b = frontier
            while b:
                low = b & -b
                nxt |= g.adj[low.bit_length() - 1].bits
                b ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(VertexSet(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def bipartition(g: Graph) -> Bipartition | None:
    """Two-color a connected graph.

    Returns None when an odd cycle exists.  Raises ValueError on disconnected
    input so that "not connected" is never reported as "not bipartite".
    Sides are normalized so that r <= s; on a tie the side containing vertex 0
    becomes U.
    """
    if g.n == 0:
        raise ValueError("graph is not connected: it has no vertices")
    if not is_connected(g):
        raise ValueError("graph is not connected; split into components first")
    color = [-1] * g.n
    color[0] = 0
    queue = [0]
    while queue:
        v = queue.pop()
        for w in g.adj[v]:
            if color[w] == -1:
                color[w] = 1 - color[v]
                queue.append(w)
            elif color[w] == color[v]:
                return None
    side0 = VertexSet.of(v for v in range(g.n) if color[v] == 0)
    side1 = VertexSet.of(v for v in range(g.n) if color[v] == 1)
    if len(side0) > len(side1):
        side0, side1 = side1, side0
    # tie-break: vertex 0 always has color 0, so side0 already contains it
    return Bipartition(side0, side1, len(side0), len(side1))


def twin_pairs(g: Graph, restrict: VertexSet | None = None) -> list[TwinPair]:
    """All twin pairs inside ``restrict`` (default: all vertices), sorted by (u, v).

    u and v are twins when N(u)=N(v) (open) or N[u]=N[v] (closed); for
    distinct vertices the two equalities are mutually exclusive.
    """
    if restrict is None:
        restrict = g.vertices()
    if not restrict.issubset(g.vertices()):
        raise ValueError("restrict set contains vertices outside the graph")
    verts = restrict.members()
    out = []
    for a in range(len(verts)):
        u = verts[a]
        nu = g.adj[u].bits
        for b in range(a + 1, len(verts)):
            v = verts[b]
            nv = g.adj[v].bits
            if nu == nv:
                out.append(TwinPair(u, v, "open"))
            elif nu | (1 << u) == nv | (1 << v):
                out.append(TwinPair(u, v, "closed"))
    return out


def induced_subgraph(g: Graph, keep: VertexSet) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``keep``, relabeled to 0..|keep|-1.

    Returns the subgraph and the list mapping new indices to original ones
    (ascending, so relabeling preserves index order).
    """
    old = keep.members()
    pos = {v: i for i, v in enumerate(old)}
    rows = []
    for v in old:
        m = 0
        for w in g.adj[v]:
            if w in keep:
                m |= 1 << pos[w]
        rows.append(VertexSet(m))
    return Graph(len(old), tuple(rows)), list(old)


def delete_vertex(g: Graph, u: int) -> tuple[Graph, list[int]]:
    """Graph minus vertex u, relabeled; returns (graph, new->old index map)."""
    if not (0 <= u < g.n):
        raise ValueError(f"vertex {u} out of range")
    return induced_subgraph(g, g.vertices().discard(u))
