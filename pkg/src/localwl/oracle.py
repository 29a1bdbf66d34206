"""Brute-force ground truth: subgraph counts, homomorphisms, spasms, isomorphism.

Nothing in this module calls into the WL or counting code paths it is used
to check, except :func:`iso`, which uses 1-WL colors purely as a pruning
filter (the search itself is exhaustive).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Sequence

from .errors import CapacityError, GraphInputError
from .graph import Graph

DEFAULT_SUBSET_BUDGET = 5_000_000
DEFAULT_HOM_BUDGET = 10**9
MAX_PATTERN = 8


def _as_graph(p) -> Graph:
    return p.graph if hasattr(p, "graph") else p


def _pair_order(k: int) -> list[tuple[int, int]]:
    return list(combinations(range(k), 2))


def _edge_mask(g: Graph, verts: Sequence[int], pairs) -> int:
    mask = 0
    for bit, (i, j) in enumerate(pairs):
        if g.has_edge(verts[i], verts[j]):
            mask |= 1 << bit
    return mask


def canonical_form(g: Graph) -> tuple:
    """Permutation-minimal encoding of a small (colored) graph; equal iff isomorphic."""
    if g.n > MAX_PATTERN:
        raise CapacityError("canonical form by permutation", g.n, MAX_PATTERN)
    pairs = _pair_order(g.n)
    best = None
    for perm in permutations(range(g.n)):
        code = (tuple(g.colors[v] for v in perm), _edge_mask(g, perm, pairs))
        if best is None or code < best:
            best = code
    return (g.n,) + (best or ((), 0))


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms of ``g`` as tuples ``perm[v]``, by exhaustive search."""
    if g.n > MAX_PATTERN:
        raise CapacityError("automorphism enumeration", g.n, MAX_PATTERN)
    out = []
    edges = g.edges()
    for perm in permutations(range(g.n)):
        if any(g.colors[v] != g.colors[perm[v]] for v in range(g.n)):
            continue
        if all(g.has_edge(perm[u], perm[v]) for u, v in edges):
            out.append(perm)
    return out


@lru_cache(maxsize=1 << 16)
def _embeddings_into_mask(k: int, pattern_mask: int, mask: int, induced: bool) -> int:
    """Bijections of a k-vertex pattern onto a k-vertex host, both given as
    edge bitmasks over :func:`_pair_order`, preserving edges (and non-edges if
    induced)."""
    pairs = _pair_order(k)
    index = {pair: bit for bit, pair in enumerate(pairs)}
    count = 0
    for perm in permutations(range(k)):
        image = 0
        for bit, (u, v) in enumerate(pairs):
            a, b = perm[u], perm[v]
            if mask >> index[(min(a, b), max(a, b))] & 1:
                image |= 1 << bit
        # image: host edges pulled back onto pattern pairs
        if induced:
            count += image == pattern_mask
        else:
            count += image & pattern_mask == pattern_mask
    return count


def oracle_count(g: Graph, pattern, mode: str = "subgraph", budget: int = DEFAULT_SUBSET_BUDGET) -> int:
    """Number of copies of ``pattern`` in ``g`` by enumerating vertex subsets.

    ``induced``: subsets whose induced graph is isomorphic to the pattern.
    ``subgraph``: distinct (vertex set, edge set) copies, i.e. edge-preserving
    bijections onto each subset divided by the pattern's automorphism count.
    """
    p = _as_graph(pattern)
    if mode not in ("subgraph", "induced"):
        raise GraphInputError(f"mode must be 'subgraph' or 'induced', got {mode!r}")
    k = p.n
    if k > MAX_PATTERN:
        raise CapacityError("pattern size", k, MAX_PATTERN)
    subsets = comb(g.n, k)
    if subsets > budget:
        raise CapacityError(f"C({g.n}, {k}) vertex subsets", subsets, budget)
    pairs = _pair_order(k)
    induced = mode == "induced"
    pattern_mask = _edge_mask(p, range(k), pairs)
    by_mask: dict[int, int] = {}
    for verts in combinations(range(g.n), k):
        mask = _edge_mask(g, verts, pairs)
        by_mask[mask] = by_mask.get(mask, 0) + 1
    total = sum(cnt * _embeddings_into_mask(k, pattern_mask, mask, induced) for mask, cnt in by_mask.items())
    aut = len(automorphisms(p.with_colors(None)))
    if total % aut:
        raise AssertionError("embedding total not divisible by |Aut|")
    return total // aut


def induced_census(g: Graph, k: int, budget: int = DEFAULT_SUBSET_BUDGET) -> dict[tuple, int]:
    """Canonical form -> number of k-subsets inducing that graph."""
    subsets = comb(g.n, k)
    if subsets > budget:
        raise CapacityError(f"C({g.n}, {k}) vertex subsets", subsets, budget)
    pairs = _pair_order(k)
    by_mask: dict[int, int] = {}
    for verts in combinations(range(g.n), k):
        mask = _edge_mask(g, verts, pairs)
        by_mask[mask] = by_mask.get(mask, 0) + 1
    out: dict[tuple, int] = {}
    for mask, cnt in by_mask.items():
        h = Graph(k, [pair for bit, pair in enumerate(pairs) if mask >> bit & 1])
        key = canonical_form(h)
        out[key] = out.get(key, 0) + cnt
    return out


# ---------------------------------------------------------------------------
# homomorphisms and spasm


def hom_count(h: Graph, g: Graph, budget: int = DEFAULT_HOM_BUDGET, max_pattern: int = 6) -> int:
    """Number of edge-preserving maps V(h) -> V(g) (not necessarily injective)."""
    if h.n > max_pattern:
        raise CapacityError("homomorphism pattern size", h.n, max_pattern)
    if g.n ** h.n > budget:
        raise CapacityError(f"{g.n}^{h.n} candidate maps", g.n ** h.n, budget)
    if h.n == 0:
        return 1
    # order pattern vertices so each one (after the first of its component) has an earlier neighbor
    order: list[int] = []
    seen: set[int] = set()
    for start in range(h.n):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        while stack:
            u = stack.pop(0)
            order.append(u)
            for w in h.nbrs[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    pos = {u: i for i, u in enumerate(order)}
    back = [[w for w in h.nbrs[u] if pos[w] < pos[u]] for u in order]
    full = (1 << g.n) - 1
    image = [0] * h.n

    def extend(i: int) -> int:
        cand = full
        for w in back[i]:
            cand &= g.adj[image[pos[w]]]
        if i == h.n - 1:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            image[i] = low.bit_length() - 1
            total += extend(i + 1)
            cand ^= low
        return total

    return extend(0)


def _merge(h: Graph, a: int, b: int) -> Graph:
    """Identify non-adjacent vertices ``a`` and ``b`` (b disappears)."""
    keep = [v for v in range(h.n) if v != b]
    idx = {v: i for i, v in enumerate(keep)}
    idx[b] = idx[a]
    edges = {(min(idx[u], idx[v]), max(idx[u], idx[v])) for u, v in h.edges()}
    return Graph(len(keep), sorted(edges))


def spasm(h: Graph, max_pattern: int = 6) -> list[Graph]:
    """All homomorphic images of ``h`` up to isomorphism (including ``h``)."""
    if h.n > max_pattern:
        raise CapacityError("spasm pattern size", h.n, max_pattern)
    found = {canonical_form(h): h}
    frontier = [h]
    while frontier:
        nxt = []
        for f in frontier:
            for a, b in combinations(range(f.n), 2):
                if f.has_edge(a, b):
                    continue
                img = _merge(f, a, b)
                key = canonical_form(img)
                if key not in found:
                    found[key] = img
                    nxt.append(img)
        frontier = nxt
    return [found[key] for key in sorted(found)]


def injective_hom_count(h: Graph, g: Graph, budget: int = DEFAULT_SUBSET_BUDGET) -> int:
    """Injective homomorphisms (subgraph embeddings) of ``h`` into ``g``."""
    return oracle_count(g, h, "subgraph", budget) * len(automorphisms(h))


# ---------------------------------------------------------------------------
# isomorphism


@dataclass(frozen=True)
class IsoCertificate:
    isomorphic: bool
    mapping: tuple[int, ...] | None
    method: str

    @property
    def verdict(self) -> str:
        return "Isomorphic" if self.isomorphic else "NonIsomorphic"


def check_isomorphism(g1: Graph, g2: Graph, mapping: Sequence[int]) -> bool:
    if g1.n != g2.n or sorted(mapping) != list(range(g1.n)):
        return False
    if any(g1.colors[v] != g2.colors[mapping[v]] for v in range(g1.n)):
        return False
    return all(g1.has_edge(u, v) == g2.has_edge(mapping[u], mapping[v])
               for u, v in combinations(range(g1.n), 2))


def iso(g1: Graph, g2: Graph, max_n: int = 16, node_budget: int = 20_000_000) -> IsoCertificate:
    """Sound and complete isomorphism test by backtracking.

    Candidate images are restricted to vertices with the same 1-WL color in
    a joint refinement of both graphs; every extension is checked against all
    previously mapped vertices.
    """
    method = "wl-pruned backtracking"
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.colors) != sorted(g2.colors):
        return IsoCertificate(False, None, method)
    n = g1.n
    if n > max_n:
        raise CapacityError("isomorphism search vertex count", n, max_n)
    from .wl import refine_1wl_batch  # pruning only

    c1, c2 = refine_1wl_batch([g1, g2])
    col1, col2 = c1.vertex_colors(), c2.vertex_colors()
    if sorted(col1) != sorted(col2):
        return IsoCertificate(False, None, method)
    # map rarest classes first, then by adjacency to mapped vertices
    freq: dict[int, int] = {}
    for c in col1:
        freq[c] = freq.get(c, 0) + 1
    order: list[int] = []
    remaining = set(range(n))
    while remaining:
        mapped = set(order)
        v = min(remaining, key=lambda x: (-len(set(g1.nbrs[x]) & mapped), freq[col1[x]], x))
        order.append(v)
        remaining.discard(v)
    mapping = [-1] * n
    used = [False] * n
    nodes = 0

    def search(i: int) -> bool:
        nonlocal nodes
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or col2[w] != col1[v]:
                continue
            nodes += 1
            if nodes > node_budget:
                raise CapacityError("isomorphism search nodes", nodes, node_budget)
            if all(g1.has_edge(v, order[j]) == g2.has_edge(w, mapping[order[j]]) for j in range(i)):
                mapping[v] = w
                used[w] = True
                if search(i + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    if search(0):
        assert check_isomorphism(g1, g2, mapping)
        return IsoCertificate(True, tuple(mapping), method)
    return IsoCertificate(False, None, method)
