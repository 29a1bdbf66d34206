"""Simple undirected graphs, BFS layering and rooted r-hop balls."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DisconnectedGraphError, GraphInputError


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph on vertices ``0..n-1`` with integer vertex colors.

    Adjacency is kept twice: as integer bitsets (``adj[v]``) for fast
    intersections, and as sorted neighbor tuples (``nbrs[v]``) for iteration.
    """

    __slots__ = ("n", "adj", "nbrs", "colors", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), colors: Sequence[int] | None = None):
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if colors is None:
            colors = (0,) * n
        else:
            colors = tuple(int(c) for c in colors)
            if len(colors) != n:
                raise GraphInputError(f"expected {n} vertex colors, got {len(colors)}")
            if any(c < 0 for c in colors):
                raise GraphInputError("vertex colors must be non-negative")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "nbrs", tuple(tuple(_bits(a)) for a in adj))
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "_m", sum(a.bit_count() for a in adj) // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_adjacency(cls, adj: Sequence[int], colors: Sequence[int] | None = None) -> Graph:
        n = len(adj)
        edges = [(u, v) for u in range(n) for v in _bits(adj[u]) if u < v]
        return cls(n, edges, colors)

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return self._m

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self.nbrs[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.nbrs]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.nbrs[u] if u < v]

    def closed_nbhd(self, v: int) -> int:
        """Bitset of N[v]."""
        return self.adj[v] | (1 << v)

    def is_colored(self) -> bool:
        return any(self.colors)

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphInputError(f"invalid vertex {v!r} for graph with n={self.n}")

    # -- derived graphs ------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph on ``vertices`` (kept in the given order) and its back-map."""
        verts = list(vertices)
        index = {v: i for i, v in enumerate(verts)}
        edges = []
        for i, u in enumerate(verts):
            for w in self.nbrs[u]:
                j = index.get(w)
                if j is not None and i < j:
                    edges.append((i, j))
        return Graph(len(verts), edges, [self.colors[v] for v in verts]), verts

    def induced_mask(self, mask: int) -> tuple[Graph, list[int]]:
        return self.induced(_bits(mask))

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph.from_adjacency([full & ~a & ~(1 << v) for v, a in enumerate(self.adj)], self.colors)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphInputError("relabeling must be a permutation of the vertex set")
        colors = [0] * self.n
        for v in range(self.n):
            colors[perm[v]] = self.colors[v]
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()], colors)

    def with_colors(self, colors: Sequence[int] | None) -> Graph:
        return Graph(self.n, self.edges(), colors)

    # -- comparisons ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj and self.colors == other.colors

    def __hash__(self) -> int:
        return hash((self.n, self.adj, self.colors))

    def __repr__(self) -> str:
        tail = ", colored" if self.is_colored() else ""
        return f"Graph(n={self.n}, m={self.m}{tail})"


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    colors: list[int] = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        colors.extend(g.colors)
        offset += g.n
    return Graph(offset, edges, colors)


@dataclass(frozen=True)
class RootedBall:
    """The induced subgraph on all vertices within ``radius`` of ``root``.

    ``subgraph`` is relabeled so that ball vertex 0 is the root and vertices
    appear in BFS order; ``back_map[i]`` is the parent-graph vertex of ball
    vertex ``i`` and ``distance_colors[i]`` its distance from the root.
    """

    root: int
    radius: int
    subgraph: Graph
    distance_colors: tuple[int, ...]
    back_map: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.subgraph.n

    def layers(self) -> list[list[int]]:
        """Ball vertex ids grouped by distance from the root."""
        out: list[list[int]] = [[] for _ in range(max(self.distance_colors, default=-1) + 1)]
        for i, d in enumerate(self.distance_colors):
            out[d].append(i)
        return out

    def colored(self) -> Graph:
        """The ball subgraph seeded with (distance, original color) colors.

        The pair is packed into one integer; for an uncolored parent graph
        this is just the distance.
        """
        cols = self.subgraph.colors
        if not any(cols):
            return self.subgraph.with_colors(self.distance_colors)
        width = self.radius + 1
        return self.subgraph.with_colors([c * width + d for c, d in zip(cols, self.distance_colors)])


def bfs_distances(g: Graph, v: int, limit: int | None = None) -> dict[int, int]:
    g.check_vertex(v)
    dist = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        d = dist[u]
        if limit is not None and d >= limit:
            continue
        for w in g.nbrs[u]:
            if w not in dist:
                dist[w] = d + 1
                queue.append(w)
    return dist


def bfs_layers(g: Graph, v: int) -> list[set[int]]:
    """``layers[i]`` is the set of vertices at distance exactly ``i`` from ``v``."""
    dist = bfs_distances(g, v)
    layers: list[set[int]] = [set() for _ in range(max(dist.values()) + 1)]
    for u, d in dist.items():
        layers[d].add(u)
    return layers


def extract_ball(g: Graph, v: int, r: int) -> RootedBall:
    g.check_vertex(v)
    if r < 0:
        raise GraphInputError(f"radius must be non-negative, got {r}")
    dist = bfs_distances(g, v, limit=r)
    order = sorted(dist, key=lambda u: (dist[u], u))
    sub, back = g.induced(order)
    return RootedBall(v, r, sub, tuple(dist[u] for u in order), tuple(back))


def components(g: Graph) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for v in range(g.n):
        if v not in seen:
            comp = sorted(bfs_distances(g, v))
            seen.update(comp)
            comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(bfs_distances(g, 0)) == g.n


def eccentricity(g: Graph, v: int) -> int:
    dist = bfs_distances(g, v)
    if len(dist) != g.n:
        raise DisconnectedGraphError("eccentricity is infinite in a disconnected graph")
    return max(dist.values())


def eccentricity_center(g: Graph) -> tuple[int, set[int]]:
    """Graph radius and the set of vertices attaining it."""
    if g.n == 0:
        raise GraphInputError("empty graph has no center")
    if not is_connected(g):
        raise DisconnectedGraphError("radius is undefined for a disconnected graph")
    ecc = [eccentricity(g, v) for v in range(g.n)]
    radius = min(ecc)
    return radius, {v for v, e in enumerate(ecc) if e == radius}


def diameter(g: Graph) -> int:
    if not is_connected(g):
        raise DisconnectedGraphError("diameter is undefined for a disconnected graph")
    return max((eccentricity(g, v) for v in range(g.n)), default=0)
