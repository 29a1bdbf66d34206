"""Exact induced counts of all graphs on at most four vertices from local statistics.

Each target graph gets a :class:`FragPlan`: a per-root combination of small
fragment counts taken from the root's neighborhood ``N(v)``, its complement
``R(v) = V - N[v]`` or its distance-colored 2-hop ball, followed by exact
division by the key vertex's orbit size.  Only quantities that 1-WL on those
local subgraphs determines (vertex, edge, degree and colored-edge counts) are
used, recursively through the size-3 plans.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Callable, Mapping

from .counting import count_triangles_fast, neighborhood_edges
from .errors import GraphInputError, InvariantViolation
from .graph import Graph


class SmallPatternId(str, enum.Enum):
    NONEDGE = "nonedge"
    EDGE = "edge"
    EMPTY3 = "empty3"
    EDGE_ISO = "edge-iso"
    P3 = "p3"
    TRIANGLE = "triangle"
    EMPTY4 = "empty4"
    EDGE_2ISO = "edge-2iso"
    MATCHING = "2k2"
    P3_ISO = "p3-iso"
    TRIANGLE_ISO = "triangle-iso"
    P4 = "p4"
    STAR3 = "star3"
    PAW = "paw"
    C4 = "c4"
    DIAMOND = "diamond"
    K4 = "k4"

    @property
    def size(self) -> int:
        return SIZES[self]


S = SmallPatternId
SIZES = {p: (2 if i < 2 else 3 if i < 6 else 4) for i, p in enumerate(S)}

#: induced pattern -> pattern induced on the same vertex set in the complement
COMPLEMENT = {
    S.NONEDGE: S.EDGE, S.EMPTY3: S.TRIANGLE, S.EDGE_ISO: S.P3,
    S.EMPTY4: S.K4, S.EDGE_2ISO: S.DIAMOND, S.MATCHING: S.C4,
    S.P3_ISO: S.PAW, S.TRIANGLE_ISO: S.STAR3, S.P4: S.P4,
}
COMPLEMENT.update({b: a for a, b in list(COMPLEMENT.items())})


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class LocalStats:
    """Fragment counts seen from one root ``v``.

    ``nbr_*`` are induced counts in G[N(v)], ``rem_*`` in G[V - N[v]].
    The ``colored_*`` fields live in the 2-hop ball with vertices colored by
    distance from ``v`` (1 = neighbor, 2 = second layer).
    """

    vertex: int
    degree: int
    nbr_edges: int
    nbr_p3: int
    nbr_triangles: int
    nbr_empty3: int
    rem_vertices: int
    rem_edges: int
    rem_nonedges: int
    rem_edge_iso: int
    rem_empty3: int
    rem_p3: int
    rem_triangles: int
    #: triangles with one vertex colored 1 and two colored 2
    colored_triangles_122: int
    #: K_{1,2} with center colored 1 and both leaves colored 2 (not necessarily induced)
    colored_k12_122: int
    #: induced K_{1,2} with center colored 2 and both leaves colored 1
    colored_k12_211: int
    #: induced edge + isolated vertex: edge joins colors 1 and 2, isolated vertex colored 1
    colored_edge_iso_121: int


def _basic(g: Graph, v: int) -> tuple[int, int, int, int]:
    deg = g.degree(v)
    rest = g.n - deg - 1
    # edges with no endpoint in N[v]
    touching = deg + sum(g.degree(a) - 1 for a in g.nbrs[v]) - neighborhood_edges(g, v)
    return deg, neighborhood_edges(g, v), rest, g.m - touching


def ind_count_le3(g: Graph) -> dict[SmallPatternId, int]:
    """Induced counts of the six graphs on two and three vertices."""
    basics = [_basic(g, v) for v in range(g.n)]
    out = {
        S.NONEDGE: comb(g.n, 2) - g.m,
        S.EDGE: _div(sum(b[0] for b in basics), 2, S.EDGE),
        S.EMPTY3: _div(sum(comb(b[2], 2) - b[3] for b in basics), 3, S.EMPTY3),
        S.EDGE_ISO: sum(b[3] for b in basics),
        S.P3: sum(comb(b[0], 2) - b[1] for b in basics),
        S.TRIANGLE: _div(sum(b[1] for b in basics), 3, S.TRIANGLE),
    }
    return out


def _div(total: int, by: int, target) -> int:
    if total % by:
        raise InvariantViolation(f"{target}: local total {total} not divisible by {by}")
    return total // by


def local_statistics(g: Graph, v: int) -> LocalStats:
    g.check_vertex(v)
    nv = g.adj[v]
    closed = g.closed_nbhd(v)
    nbr_graph, _ = g.induced_mask(nv)
    rem_mask = ((1 << g.n) - 1) & ~closed
    rem_graph, _ = g.induced_mask(rem_mask)
    nbr = ind_count_le3(nbr_graph)
    rem = ind_count_le3(rem_graph)

    layer2 = 0
    for a in g.nbrs[v]:
        layer2 |= g.adj[a]
    layer2 &= ~closed

    tri_122 = 0
    k12_122 = 0
    for a in g.nbrs[v]:
        outward = g.adj[a] & layer2
        k12_122 += comb(outward.bit_count(), 2)
        tri_122 += sum((g.adj[b] & outward).bit_count() for b in _bits(outward)) // 2

    k12_211 = 0
    for w in _bits(layer2):
        inward = g.adj[w] & nv
        links = sum((g.adj[a] & inward).bit_count() for a in _bits(inward)) // 2
        k12_211 += comb(inward.bit_count(), 2) - links

    edge_iso_121 = 0
    for y in g.nbrs[v]:
        free = nv & ~g.adj[y] & ~(1 << y)
        for z in _bits(g.adj[y] & layer2):
            edge_iso_121 += (free & ~g.adj[z]).bit_count()

    return LocalStats(
        vertex=v,
        degree=g.degree(v),
        nbr_edges=nbr_graph.m,
        nbr_p3=nbr[S.P3],
        nbr_triangles=nbr[S.TRIANGLE],
        nbr_empty3=nbr[S.EMPTY3],
        rem_vertices=rem_graph.n,
        rem_edges=rem_graph.m,
        rem_nonedges=rem[S.NONEDGE],
        rem_edge_iso=rem[S.EDGE_ISO],
        rem_empty3=rem[S.EMPTY3],
        rem_p3=rem[S.P3],
        rem_triangles=rem[S.TRIANGLE],
        colored_triangles_122=tri_122,
        colored_k12_122=k12_122,
        colored_k12_211=k12_211,
        colored_edge_iso_121=edge_iso_121,
    )


# ---------------------------------------------------------------------------
# plans


@dataclass(frozen=True)
class FragPlan:
    """How one induced count is assembled.

    ``fragments`` lists (statistic, region) pairs, each evaluated as is
    (alpha = identity).  ``beta`` combines them into the root's rooted count,
    ``gamma`` is the orbit divisor applied to the sum over roots, and
    ``global_term`` adds graph-level terms computed from earlier targets.
    """

    target: SmallPatternId
    key: str
    fragments: tuple[tuple[str, str], ...]
    beta: Callable[[LocalStats], int] | None
    gamma: int
    global_term: Callable[[Graph, Mapping[SmallPatternId, int]], int] | None = None
    formula: str = ""

    def evaluate(self, g: Graph, stats: list[LocalStats], done: Mapping[SmallPatternId, int]) -> int:
        total = 0
        if self.beta is not None:
            total = _div(sum(self.beta(s) for s in stats), self.gamma, self.target)
        if self.global_term is not None:
            total += self.global_term(g, done)
        if total < 0:
            raise InvariantViolation(f"{self.target.value}: negative count {total}")
        return total


def _matching_term(g: Graph, done: Mapping[SmallPatternId, int]) -> int:
    # disjoint edge pairs, minus those sitting inside denser induced 4-sets
    pairs = comb(g.m, 2) - sum(comb(d, 2) for d in g.degrees())
    return pairs - done[S.P4] - 2 * done[S.C4] - done[S.PAW] - 2 * done[S.DIAMOND] - 3 * done[S.K4]


PLANS: tuple[FragPlan, ...] = (
    FragPlan(S.NONEDGE, "-", (), None, 1, lambda g, _: comb(g.n, 2) - g.m, "C(n,2) - |E|"),
    FragPlan(S.EDGE, "any", (("degree", "N(v)"),), lambda s: s.degree, 2, formula="sum deg(v) / 2"),
    FragPlan(S.EMPTY3, "any", (("nonedges", "R(v)"),), lambda s: s.rem_nonedges, 3,
             formula="sum nonedges(R(v)) / 3"),
    FragPlan(S.EDGE_ISO, "isolated", (("edges", "R(v)"),), lambda s: s.rem_edges, 1,
             formula="sum |E(R(v))|"),
    FragPlan(S.P3, "center", (("degree", "N(v)"), ("edges", "N(v)")),
             lambda s: comb(s.degree, 2) - s.nbr_edges, 1, formula="sum C(deg v, 2) - |E(N(v))|"),
    FragPlan(S.TRIANGLE, "any", (("edges", "N(v)"),), lambda s: s.nbr_edges, 3,
             formula="sum |E(N(v))| / 3"),
    FragPlan(S.EMPTY4, "any", (("empty3", "R(v)"),), lambda s: s.rem_empty3, 4,
             formula="sum IndCount(empty3, R(v)) / 4"),
    FragPlan(S.EDGE_2ISO, "isolated", (("edge-iso", "R(v)"),), lambda s: s.rem_edge_iso, 2,
             formula="sum IndCount(edge-iso, R(v)) / 2"),
    FragPlan(S.P3_ISO, "isolated", (("p3", "R(v)"),), lambda s: s.rem_p3, 1,
             formula="sum IndCount(p3, R(v))"),
    FragPlan(S.TRIANGLE_ISO, "isolated", (("triangle", "R(v)"),), lambda s: s.rem_triangles, 1,
             formula="sum IndCount(triangle, R(v))"),
    FragPlan(S.K4, "any", (("triangle", "N(v)"),), lambda s: s.nbr_triangles, 4,
             formula="sum IndCount(triangle, N(v)) / 4"),
    FragPlan(S.DIAMOND, "degree-3", (("p3", "N(v)"),), lambda s: s.nbr_p3, 2,
             formula="sum IndCount(p3, N(v)) / 2"),
    FragPlan(S.STAR3, "center", (("empty3", "N(v)"),), lambda s: s.nbr_empty3, 1,
             formula="sum IndCount(empty3, N(v))"),
    FragPlan(S.PAW, "pendant", (("triangle colored 1,2,2", "2-hop ball"),),
             lambda s: s.colored_triangles_122, 1, formula="sum ColoredTriangles122(v)"),
    FragPlan(S.C4, "any", (("induced K_{1,2} colored 2,1,1", "2-hop ball"),),
             lambda s: s.colored_k12_211, 4, formula="sum ColoredK12_211(v) / 4"),
    FragPlan(S.P4, "inner", (("edge+isolated colored (1-2),1", "2-hop ball"),),
             lambda s: s.colored_edge_iso_121, 2, formula="sum ColoredEdgeIso121(v) / 2"),
    FragPlan(S.MATCHING, "-", (), None, 1, _matching_term,
             "C(|E|,2) - sum C(deg,2) - p4 - 2 c4 - paw - 2 diamond - 3 k4"),
)

PLAN_BY_TARGET = {p.target: p for p in PLANS}


def ind_count_le4(g: Graph) -> dict[SmallPatternId, int]:
    """Induced counts of all 17 graphs on 2, 3 and 4 vertices."""
    stats = [local_statistics(g, v) for v in range(g.n)]
    done: dict[SmallPatternId, int] = {}
    for plan in PLANS:
        done[plan.target] = plan.evaluate(g, stats, done)
    return {p: done[p] for p in S}


def partition_check(g: Graph, counts: Mapping[SmallPatternId, int]) -> bool:
    """Counts of each size must add up to the number of vertex subsets of that size."""
    for size in (2, 3, 4):
        if sum(c for p, c in counts.items() if SmallPatternId(p).size == size) != comb(g.n, size):
            return False
    return True


# ---------------------------------------------------------------------------
# single-target plans with the key vertices used in the fragmentation proofs


def frag_count(g: Graph, target: str) -> int:
    """Induced count of ``paw``, ``diamond`` or ``star3`` through its fragments.

    * paw, pendant key: triangles in the 2-hop ball with one vertex in the
      first layer and two in the second (orbit 1).
    * diamond, degree-3 key: K_{1,2} subgraphs inside N(v) minus three per
      triangle of N(v), which removes the K4 copies (orbit 2).
    * star3, pendant key: K_{1,2} with center in layer 1 and leaves in layer
      2, minus the colored triangles among them (orbit 3).
    """
    target = SmallPatternId(target)
    if target == S.PAW:
        total = sum(local_statistics(g, v).colored_triangles_122 for v in range(g.n))
        return _div(total, 1, target)
    if target == S.DIAMOND:
        total = 0
        for v in range(g.n):
            nbr, _ = g.induced_mask(g.adj[v])
            k12 = sum(comb(d, 2) for d in nbr.degrees())
            total += k12 - 3 * count_triangles_fast(nbr)
        return _div(total, 2, target)
    if target == S.STAR3:
        total = 0
        for v in range(g.n):
            s = local_statistics(g, v)
            total += s.colored_k12_122 - s.colored_triangles_122
        return _div(total, 3, target)
    raise GraphInputError(f"frag_count supports paw, diamond and star3, not {target.value!r}")


def clique_lift(g: Graph, base_counter: Callable[[Graph], int] = count_triangles_fast, size: int = 4) -> int:
    """Number of K_size, reduced to triangle counting in neighborhoods.

    K_{t+1} copies through ``v`` are the K_t copies inside G[N(v)]; each is seen
    from all of its t + 1 vertices.
    """
    if size < 3 or size > 6:
        raise GraphInputError(f"clique size must be between 3 and 6, got {size}")
    if size == 3:
        return base_counter(g)
    total = 0
    for v in range(g.n):
        nbr, _ = g.induced_mask(g.adj[v])
        total += clique_lift(nbr, base_counter, size - 1)
    return _div(total, size, f"K{size}")
