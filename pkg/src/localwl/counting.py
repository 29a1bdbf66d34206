"""Orbit-normalized local subgraph counting.

A pattern ``H`` carries a key vertex ``u``.  For every host vertex ``v`` we
count the copies of ``H`` inside the rooted ball ``G_v^r`` in which ``v``
plays ``u``; summing over ``v`` counts each copy once per vertex in the orbit
of ``u``, so the global count is that sum divided by ``|Orbit_H(u)|``.

Radius guidance for picking k (documentation only, nothing here computes
graph parameters): k-WL equivalence preserves subgraph counts of every
pattern whose spasm has treewidth <= k, and Local k-WL preserves counts of
``H`` whenever ``H - u`` has that property.  Induced counts of patterns on at
most k + 2 vertices are preserved by Local k-WL.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Mapping

from .errors import CapacityError, GraphInputError, InvariantViolation
from .graph import Graph, RootedBall, bfs_distances, extract_ball
from . import generators as gen

MODES = ("subgraph", "induced")
MAX_PATTERN = 8


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise GraphInputError(f"mode must be one of {MODES}, got {mode!r}")


# ---------------------------------------------------------------------------
# pattern metadata


def _automorphism_images(h: Graph, key: int) -> tuple[set[int], int]:
    """Orbit of ``key`` and the size of the automorphism group, by backtracking."""
    n = h.n
    images: set[int] = set()
    count = 0
    perm = [-1] * n
    used = [False] * n

    def extend(i: int) -> None:
        nonlocal count
        if i == n:
            count += 1
            images.add(perm[key])
            return
        for w in range(n):
            if used[w] or h.colors[w] != h.colors[i] or h.degree(w) != h.degree(i):
                continue
            if all(h.has_edge(i, j) == h.has_edge(w, perm[j]) for j in range(i)):
                perm[i] = w
                used[w] = True
                extend(i + 1)
                used[w] = False
        perm[i] = -1

    extend(0)
    return images, count


@dataclass(frozen=True)
class Pattern:
    """A small pattern graph with a designated key vertex.

    ``radius`` is the eccentricity of the key vertex inside the pattern (the
    ball radius needed to see every copy), or ``None`` when the pattern is
    disconnected and copies can leave the key vertex's component.
    """

    graph: Graph
    name: str
    key_vertex: int
    radius: int | None
    orbit_size: int
    aut_size: int = field(default=1, compare=False)

    @property
    def size(self) -> int:
        return self.graph.n

    def stabilizer_size(self) -> int:
        return self.aut_size // self.orbit_size

    def layer_profile(self) -> list[int]:
        """Number of pattern vertices at each distance from the key."""
        dist = bfs_distances(self.graph, self.key_vertex)
        prof = [0] * (max(dist.values()) + 1)
        for d in dist.values():
            prof[d] += 1
        return prof

    def rekey(self, key: int) -> Pattern:
        return make_pattern(self.graph, key, self.name)


def make_pattern(graph: Graph, key: int = 0, name: str = "") -> Pattern:
    if graph.n > MAX_PATTERN:
        raise CapacityError("pattern vertex count", graph.n, MAX_PATTERN)
    graph.check_vertex(key)
    dist = bfs_distances(graph, key)
    radius = max(dist.values()) if len(dist) == graph.n else None
    images, aut = _automorphism_images(graph, key)
    return Pattern(graph, name or f"pattern{graph.n}", key, radius, len(images), aut)


def orbit_size(p: Pattern) -> int:
    return len(_automorphism_images(p.graph, p.key_vertex)[0])


def _g(n, edges):
    return Graph(n, edges)


# name -> (graph, key vertex)
_LIBRARY: dict[str, tuple[Graph, int]] = {
    "nonedge": (_g(2, []), 0),
    "edge": (_g(2, [(0, 1)]), 0),
    "empty3": (_g(3, []), 0),
    "edge-iso": (_g(3, [(0, 1)]), 2),
    "p3": (_g(3, [(0, 1), (0, 2)]), 0),
    "triangle": (gen.complete_graph(3), 0),
    "empty4": (_g(4, []), 0),
    "edge-2iso": (_g(4, [(0, 1)]), 2),
    "2k2": (_g(4, [(0, 1), (2, 3)]), 0),
    "p3-iso": (_g(4, [(0, 1), (0, 2)]), 3),
    "triangle-iso": (_g(4, [(0, 1), (0, 2), (1, 2)]), 3),
    "p4": (gen.path_graph(4), 1),
    "star3": (gen.star_graph(3), 0),
    "paw": (gen.paw_graph(), 3),
    "c4": (gen.cycle_graph(4), 0),
    "diamond": (gen.diamond_graph(), 0),
    "k4": (gen.complete_graph(4), 0),
}

PATTERN_NAMES = tuple(_LIBRARY) + ("star:s",)


def get_pattern(name: str) -> Pattern:
    """Look up a library pattern; ``star:s`` is K_{1,s} keyed at its center."""
    if name.startswith("star:"):
        try:
            s = int(name.split(":", 1)[1])
        except ValueError:
            raise GraphInputError(f"bad star size in {name!r}") from None
        if s < 1:
            raise GraphInputError("star needs at least one leaf")
        return make_pattern(gen.star_graph(s), 0, name)
    if name not in _LIBRARY:
        raise GraphInputError(f"unknown pattern {name!r}; library: {', '.join(PATTERN_NAMES)}")
    graph, key = _LIBRARY[name]
    return make_pattern(graph, key, name)


# ---------------------------------------------------------------------------
# local counting


@dataclass(frozen=True)
class CountReport:
    pattern: str
    mode: str
    total: int
    per_root: tuple[int, ...]
    orbit_size: int

    def to_dict(self) -> dict:
        return {
            "pattern": self.pattern,
            "mode": self.mode,
            "total": self.total,
            "orbit_size": self.orbit_size,
            "per_root": {str(v): c for v, c in enumerate(self.per_root)},
        }


def _search_order(p: Pattern) -> list[int]:
    """Key first, then BFS order; other components appended afterwards."""
    h = p.graph
    dist = bfs_distances(h, p.key_vertex)
    order = sorted(dist, key=lambda u: (dist[u], u))
    for v in range(h.n):
        if v not in dist:
            more = bfs_distances(h, v)
            order.extend(sorted((u for u in more if u not in dist), key=lambda u: (more[u], u)))
            dist.update(more)
    return order


def rooted_count(p: Pattern, host: Graph, root: int, mode: str = "subgraph") -> int:
    """Copies of ``p`` in ``host`` in which ``root`` plays the key vertex.

    Counts injective maps sending the key to ``root`` that preserve edges
    (and non-edges when ``mode == 'induced'``), divided by the number of
    pattern automorphisms fixing the key, so each copy counts once.
    """
    _check_mode(mode)
    h = p.graph
    if h.n > host.n:
        return 0
    induced = mode == "induced"
    colored = h.is_colored()
    order = _search_order(p)
    image = [-1] * h.n
    placed = 0  # bitset of used host vertices
    full = (1 << host.n) - 1
    # earlier pattern vertices split into neighbors and (induced mode) non-neighbors of order[i]
    adjacent = [[w for w in order[:i] if h.has_edge(order[i], w)] for i in range(len(order))]
    apart = [[w for w in order[:i] if not h.has_edge(order[i], w)] if induced else []
             for i in range(len(order))]
    color_mask: dict[int, int] = {}
    if colored:
        for x in range(host.n):
            color_mask[host.colors[x]] = color_mask.get(host.colors[x], 0) | (1 << x)

    def extend(i: int) -> int:
        nonlocal placed
        if i == h.n:
            return 1
        u = order[i]
        cand = full & ~placed
        if colored:
            cand &= color_mask.get(h.colors[u], 0)
        for w in adjacent[i]:
            cand &= host.adj[image[w]]
        for w in apart[i]:
            cand &= ~host.adj[image[w]]
        if i == h.n - 1:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            image[u] = low.bit_length() - 1
            cand ^= low
            placed |= low
            total += extend(i + 1)
            placed ^= low
        image[u] = -1
        return total

    if colored and host.colors[root] != h.colors[p.key_vertex]:
        return 0
    image[p.key_vertex] = root
    placed = 1 << root
    maps = extend(1)
    stab = p.stabilizer_size()
    if maps % stab:
        raise InvariantViolation(f"{maps} rooted maps not divisible by stabilizer size {stab}")
    return maps // stab


def _layer_filter(p: Pattern, ball: RootedBall) -> bool:
    """Necessary condition: for every i, the ball has at least as many vertices
    within distance i of the root as the pattern has within distance i of the key."""
    need = p.layer_profile()
    have = [0] * max(len(need), 1)
    for d in ball.distance_colors:
        if d < len(have):
            have[d] += 1
    need_cum = have_cum = 0
    for a, b in zip(need, have):
        need_cum += a
        have_cum += b
        if have_cum < need_cum:
            return False
    return True


def local_rooted_count(p: Pattern, ball: RootedBall, mode: str = "subgraph") -> int:
    """Copies of ``p`` inside ``ball`` with the root playing the key vertex."""
    _check_mode(mode)
    if p.radius is None:
        raise GraphInputError(f"pattern {p.name!r} is disconnected; it has no finite ball radius")
    if ball.radius < p.radius:
        raise GraphInputError(f"ball radius {ball.radius} is smaller than pattern radius {p.radius}")
    if not _layer_filter(p, ball):
        return 0
    return rooted_count(p, ball.subgraph, 0, mode)


def _report(p: Pattern, mode: str, per_root: list[int]) -> CountReport:
    s = sum(per_root)
    if s % p.orbit_size:
        raise InvariantViolation(f"sum of rooted counts {s} not divisible by orbit size {p.orbit_size} for {p.name}")
    return CountReport(p.name, mode, s // p.orbit_size, tuple(per_root), p.orbit_size)


def count_pattern(g: Graph, p: Pattern, mode: str = "subgraph") -> CountReport:
    """Global count as the orbit-normalized sum of rooted local counts.

    Connected patterns are counted inside ``G_v^r`` with ``r`` the key's
    eccentricity; a disconnected pattern is counted with ``v`` rooted in the
    whole host graph.
    """
    _check_mode(mode)
    per_root = []
    for v in range(g.n):
        if p.radius is None:
            per_root.append(rooted_count(p, g, v, mode))
        else:
            per_root.append(local_rooted_count(p, extract_ball(g, v, p.radius), mode))
    return _report(p, mode, per_root)


def count_radius_one(g: Graph, p: Pattern, mode: str = "subgraph") -> CountReport:
    """Count a pattern with a dominating vertex from 1-hop balls only.

    If the key vertex is not dominating, the pattern is re-keyed at its
    lowest-numbered dominating vertex.
    """
    _check_mode(mode)
    if p.radius != 1:
        dominating = [v for v in range(p.size) if p.graph.degree(v) == p.size - 1]
        if not dominating:
            raise GraphInputError(f"pattern {p.name!r} has no dominating vertex (radius != 1)")
        p = p.rekey(dominating[0])
    per_root = []
    for v in range(g.n):
        if g.degree(v) + 1 < p.size:
            per_root.append(0)
            continue
        per_root.append(local_rooted_count(p, extract_ball(g, v, 1), mode))
    return _report(p, mode, per_root)


# ---------------------------------------------------------------------------
# closed forms


def neighborhood_edges(g: Graph, v: int) -> int:
    """|E(G[N(v)])|, the number of triangles through ``v``."""
    av = g.adj[v]
    return sum((g.adj[a] & av).bit_count() for a in g.nbrs[v]) // 2


def count_triangles_fast(g: Graph) -> int:
    total = sum(neighborhood_edges(g, v) for v in range(g.n))
    if total % 3:
        raise InvariantViolation("neighborhood edge total not divisible by 3")
    return total // 3


def closed_form_star_and_matching(g: Graph, s: int) -> tuple[int, int]:
    """(subgraph count of K_{1,s}, subgraph count of 2K2) from the degree sequence."""
    if s < 1:
        raise GraphInputError("s must be >= 1")
    degs = g.degrees()
    if s == 1:
        stars = g.m  # K_{1,1} is an edge, counted once not twice
    else:
        stars = sum(comb(d, s) for d in degs)
    matching = comb(g.m, 2) - sum(comb(d, 2) for d in degs)
    return stars, matching


def count_c4_subgraph(g: Graph) -> int:
    """Four-cycles as subgraphs: half the sum over vertex pairs of C(codegree, 2)."""
    total = 0
    for u in range(g.n):
        for w in range(u + 1, g.n):
            total += comb((g.adj[u] & g.adj[w]).bit_count(), 2)
    if total % 2:
        raise InvariantViolation("codegree pair total is odd")
    return total // 2


def counts_for(g: Graph, names, mode: str = "subgraph") -> Mapping[str, int]:
    return {name: count_pattern(g, get_pattern(name), mode).total for name in names}
