"""Named small graphs and a seeded G(n, p) generator."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .errors import GraphInputError
from .graph import Graph, disjoint_union


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def paw_graph() -> Graph:
    """Triangle 0-1-2 with pendant 3 attached to 0."""
    return Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


def diamond_graph() -> Graph:
    """K4 minus the edge {2, 3}; vertices 0 and 1 have degree 3."""
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def rook_graph(k: int) -> Graph:
    """k x k rook's graph (line graph of K_{k,k})."""
    cells = [(i, j) for i in range(k) for j in range(k)]
    edges = [(a, b) for a, b in combinations(range(len(cells)), 2)
             if cells[a][0] == cells[b][0] or cells[a][1] == cells[b][1]]
    return Graph(len(cells), edges)


def shrikhande_graph() -> Graph:
    """Cayley graph on Z4 x Z4; strongly regular with the 4x4 rook's parameters."""
    gens = {(0, 1), (0, 3), (1, 0), (3, 0), (1, 1), (3, 3)}
    idx = lambda a, b: 4 * a + b
    edges = set()
    for a in range(4):
        for b in range(4):
            for da, db in gens:
                u, v = idx(a, b), idx((a + da) % 4, (b + db) % 4)
                edges.add((min(u, v), max(u, v)))
    return Graph(16, sorted(edges))


def circulant_graph(n: int, offsets) -> Graph:
    edges = set()
    for i in range(n):
        for d in offsets:
            j = (i + d) % n
            if i != j:
                edges.add((min(i, j), max(i, j)))
    return Graph(n, sorted(edges))


def prism_graph(k: int) -> Graph:
    """Cartesian product C_k x K2."""
    top = [(i, (i + 1) % k) for i in range(k)]
    bottom = [(k + i, k + (i + 1) % k) for i in range(k)]
    return Graph(2 * k, top + bottom + [(i, k + i) for i in range(k)])


def moebius_ladder(k: int) -> Graph:
    """Moebius ladder on 2k vertices, a 3-regular companion of the prism."""
    n = 2 * k
    return Graph(n, [(i, (i + 1) % n) for i in range(n)] + [(i, i + k) for i in range(k)])


def copies(g: Graph, times: int) -> Graph:
    return disjoint_union(*([g] * times))


def gen_random(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) drawn from numpy's PCG64 generator.

    Pairs ``u < v`` are visited in lexicographic order and each consumes one
    uniform draw, so a seed fixes the graph across platforms.
    """
    if n < 0:
        raise GraphInputError(f"n must be non-negative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise GraphInputError(f"p must lie in [0, 1], got {p}")
    rng = np.random.Generator(np.random.PCG64(seed))
    pairs = list(combinations(range(n), 2))
    draws = rng.random(len(pairs))
    return Graph(n, [pair for pair, x in zip(pairs, draws) if x < p])
