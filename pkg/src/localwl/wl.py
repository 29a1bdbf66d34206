"""Color refinement (1-WL) and folklore k-WL.

Every refinement here runs on a *batch* of graphs in lockstep.  Color ids in a
round are assigned by sorting the full signatures of all vertices (or tuples)
across the batch, so ids are deterministic and directly comparable between
batch members.  For 1-WL this is exactly refinement of the disjoint union.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import CapacityError, GraphInputError
from .graph import Graph

#: default ceiling on sum over the batch of n^(k+1) * k neighbor entries
DEFAULT_TUPLE_BUDGET = 60_000_000


class Verdict(str, enum.Enum):
    DISTINGUISHED = "Distinguished"
    EQUIVALENT = "Equivalent"

    @classmethod
    def of(cls, equal: bool) -> Verdict:
        return cls.EQUIVALENT if equal else cls.DISTINGUISHED


@dataclass(frozen=True)
class ColorHistogram:
    """Multiset of color ids, stored as sorted ``(color, multiplicity)`` pairs."""

    items: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, colors) -> ColorHistogram:
        vals, counts = np.unique(np.asarray(colors).ravel(), return_counts=True)
        return cls(tuple((int(v), int(c)) for v, c in zip(vals, counts)))

    @property
    def total(self) -> int:
        return sum(c for _, c in self.items)

    def as_dict(self) -> dict[int, int]:
        return dict(self.items)

    def __len__(self) -> int:
        return len(self.items)


@dataclass(frozen=True)
class Coloring:
    """Result of a refinement run.

    ``colors`` has shape ``(n,) * arity``; ``colors[t]`` is the color of the
    tuple ``t``.  ``class_counts[i]`` is the number of classes after round ``i``
    (index 0 is the initial coloring), counted over the whole batch.
    """

    arity: int
    colors: np.ndarray = field(repr=False)
    iteration: int
    stable: bool
    class_counts: tuple[int, ...] = ()

    @property
    def n(self) -> int:
        return self.colors.shape[0] if self.colors.ndim else 0

    def histogram(self) -> ColorHistogram:
        return ColorHistogram.of(self.colors)

    def vertex_colors(self) -> list[int]:
        """Per-vertex colors; for arity > 1 the color of the diagonal tuple (v, ..., v)."""
        if self.arity == 1:
            return [int(c) for c in self.colors]
        idx = np.arange(self.n)
        return [int(c) for c in self.colors[(idx,) * self.arity]]

    def get(self, tup) -> int:
        if self.arity == 1 and not isinstance(tup, tuple):
            tup = (tup,)
        return int(self.colors[tuple(tup)])

    def num_classes(self) -> int:
        return len(np.unique(self.colors))


def _rank(keys: list) -> list[int]:
    """Map each key to the rank of its value among the distinct keys."""
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


# ---------------------------------------------------------------------------
# 1-WL


def refine_1wl_batch(
    graphs: Sequence[Graph],
    max_rounds: int | None = None,
    seeds: Sequence[Sequence] | None = None,
) -> list[Coloring]:
    """Run color refinement jointly on ``graphs``.

    Initial colors are the graphs' vertex colors, or ``seeds`` (any sortable
    per-vertex labels) when given.
    """
    if seeds is None:
        seeds = [g.colors for g in graphs]
    flat_keys = [s for seed in seeds for s in seed]
    offsets = np.cumsum([0] + [g.n for g in graphs])
    colors = _rank(flat_keys)
    counts = [len(set(colors))]
    rounds = 0
    stable = False
    while max_rounds is None or rounds < max_rounds:
        sigs = []
        for gi, g in enumerate(graphs):
            base = offsets[gi]
            for v in range(g.n):
                sigs.append((colors[base + v], tuple(sorted(colors[base + w] for w in g.nbrs[v]))))
        new = _rank(sigs)
        rounds += 1
        num = len(set(new))
        colors = new
        counts.append(num)
        if num == counts[-2]:
            stable = True
            break
    out = []
    for gi, g in enumerate(graphs):
        arr = np.asarray(colors[offsets[gi]:offsets[gi + 1]], dtype=np.int64)
        out.append(Coloring(1, arr, rounds, stable, tuple(counts)))
    return out


def refine_1wl(g: Graph, max_rounds: int | None = None) -> Coloring:
    return refine_1wl_batch([g], max_rounds)[0]


# ---------------------------------------------------------------------------
# folklore k-WL


def _tuple_index(n: int, k: int) -> np.ndarray:
    """Shape (k, n**k): entries of every k-tuple in row-major order."""
    return np.indices((n,) * k).reshape(k, -1)


def _neighbor_index(n: int, k: int) -> np.ndarray:
    """Shape (n**k, n, k): flat index of t[j <- w] for tuple t, vertex w, position j."""
    idx = _tuple_index(n, k)
    strides = [n ** (k - 1 - j) for j in range(k)]
    flat = sum(idx[j] * strides[j] for j in range(k))
    w = np.arange(n)
    out = np.empty((n ** k, n, k), dtype=np.int64)
    for j in range(k):
        out[:, :, j] = (flat - idx[j] * strides[j])[:, None] + w[None, :] * strides[j]
    return out


def atomic_types(g: Graph, k: int) -> np.ndarray:
    """Rows describing the isomorphism type of each k-tuple (with vertex colors).

    Columns: equality bits, adjacency bits for every position pair i < j, then
    the vertex color at every position.
    """
    idx = _tuple_index(g.n, k)
    adj = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges():
        adj[u, v] = adj[v, u] = 1
    vcol = np.asarray(g.colors, dtype=np.int64)
    cols = []
    for i in range(k):
        for j in range(i + 1, k):
            cols.append((idx[i] == idx[j]).astype(np.int64))
            cols.append(adj[idx[i], idx[j]])
    for i in range(k):
        cols.append(vcol[idx[i]])
    if not cols:
        return np.zeros((g.n ** k, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def _check_budget(graphs: Sequence[Graph], k: int, budget: int) -> None:
    need = sum(g.n ** (k + 1) * k for g in graphs)
    if need > budget:
        biggest = max(g.n for g in graphs)
        raise CapacityError(f"{k}-WL over {len(graphs)} graph(s), largest n^k = {biggest ** k}", need, budget)


def refine_kwl_batch(
    graphs: Sequence[Graph],
    k: int,
    max_rounds: int | None = None,
    tuple_seeds: Sequence[np.ndarray | None] | None = None,
    budget: int = DEFAULT_TUPLE_BUDGET,
) -> list[Coloring]:
    """Folklore k-WL run jointly on ``graphs``.

    A tuple's new color is the pair (old color, multiset over w of the vector
    of colors of its j-neighbors t[j <- w], j = 1..k).  ``tuple_seeds`` may
    supply an extra integer label per tuple (flat, row-major) that is folded
    into the initial atomic type.
    """
    if k < 2:
        raise GraphInputError("folklore k-WL needs k >= 2; use refine_1wl for k = 1")
    _check_budget(graphs, k, budget)
    sizes = [g.n ** k for g in graphs]
    offsets = np.cumsum([0] + sizes)

    init_rows = []
    for gi, g in enumerate(graphs):
        rows = atomic_types(g, k)
        seed = None if tuple_seeds is None else tuple_seeds[gi]
        extra = np.full((sizes[gi], 1), -1, dtype=np.int64) if seed is None else np.asarray(seed, dtype=np.int64).reshape(-1, 1)
        init_rows.append(np.hstack([rows, extra]))
    allrows = np.vstack(init_rows) if init_rows else np.zeros((0, 1), dtype=np.int64)
    colors = np.unique(allrows, axis=0, return_inverse=True)[1].ravel().astype(np.int64)
    counts = [len(np.unique(colors))]

    nbr = [_neighbor_index(g.n, k) for g in graphs]
    rounds = 0
    stable = False
    while max_rounds is None or rounds < max_rounds:
        # canonical ids for the k-vectors of neighbor colors, across the batch
        vecs = [colors[offsets[gi]:offsets[gi + 1]][nbr[gi]].reshape(-1, k) for gi in range(len(graphs))]
        stacked = np.vstack(vecs) if vecs else np.zeros((0, k), dtype=np.int64)
        vec_ids = np.unique(stacked, axis=0, return_inverse=True)[1].ravel() if len(stacked) else stacked[:, 0]
        pos = 0
        by_size: dict[int, list[tuple[int, np.ndarray]]] = {}
        for gi, g in enumerate(graphs):
            cnt = sizes[gi] * g.n
            block = np.sort(vec_ids[pos:pos + cnt].reshape(sizes[gi], g.n), axis=1)
            pos += cnt
            sig = np.hstack([colors[offsets[gi]:offsets[gi + 1]].reshape(-1, 1), block])
            by_size.setdefault(g.n, []).append((gi, sig))
        # rank signatures: (old color, n, sorted multiset); rows of different n never coincide
        keys = []
        parts = []
        for n, members in sorted(by_size.items()):
            mat = np.vstack([s for _, s in members])
            uniq, inv = np.unique(mat, axis=0, return_inverse=True)
            base = len(keys)
            keys.extend((int(row[0]), n, tuple(row[1:].tolist())) for row in uniq)
            parts.append((members, inv.ravel() + base))
        rank = np.asarray(_rank(keys), dtype=np.int64) if keys else np.zeros(0, dtype=np.int64)
        new = np.empty_like(colors)
        for members, inv in parts:
            at = 0
            for gi, _ in members:
                new[offsets[gi]:offsets[gi + 1]] = rank[inv[at:at + sizes[gi]]]
                at += sizes[gi]
        rounds += 1
        num = len(np.unique(new))
        colors = new
        counts.append(num)
        if num == counts[-2]:
            stable = True
            break
    return [
        Coloring(k, colors[offsets[gi]:offsets[gi + 1]].reshape((g.n,) * k), rounds, stable, tuple(counts))
        for gi, g in enumerate(graphs)
    ]


def refine_kwl(g: Graph, k: int, max_rounds: int | None = None, budget: int = DEFAULT_TUPLE_BUDGET) -> Coloring:
    return refine_kwl_batch([g], k, max_rounds, budget=budget)[0]


def refine_batch(graphs: Sequence[Graph], k: int, max_rounds: int | None = None, **kw) -> list[Coloring]:
    """1-WL when ``k == 1``, folklore k-WL otherwise."""
    if k < 1:
        raise GraphInputError(f"k must be >= 1, got {k}")
    if k == 1:
        return refine_1wl_batch(graphs, max_rounds)
    return refine_kwl_batch(graphs, k, max_rounds, **kw)


def compare(g1: Graph, g2: Graph, k: int, max_rounds: int | None = None) -> Verdict:
    """Whether k-WL distinguishes ``g1`` from ``g2`` (joint refinement)."""
    if g1.n != g2.n:
        return Verdict.DISTINGUISHED
    c1, c2 = refine_batch([g1, g2], k, max_rounds)
    return Verdict.of(c1.histogram() == c2.histogram())
