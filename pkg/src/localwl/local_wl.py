"""Localized WL variants: Local k-WL, Layer k-WL and Recursive (1,2)-WL.

All variants refine many small graphs at once through the batch refiners in
:mod:`localwl.wl`, so the per-vertex attributes they produce are comparable
across vertices and across graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Sequence

import numpy as np

from .errors import GraphInputError
from .graph import Graph, RootedBall, extract_ball
from .wl import (
    ColorHistogram,
    Coloring,
    Verdict,
    _tuple_index,
    refine_1wl_batch,
    refine_batch,
    refine_kwl_batch,
)

VARIANTS = ("plain", "local", "layer", "recursive12")


def _hist_key(h: ColorHistogram):
    return h.items


@dataclass(frozen=True)
class LocalSignature:
    """Per-vertex attributes from Local k-WL (stable histogram of each rooted ball)."""

    k: int
    r: int
    attributes: tuple[ColorHistogram, ...]

    def multiset(self) -> list:
        return sorted(_hist_key(a) for a in self.attributes)

    def classes(self) -> list[int]:
        """Attribute class id of every vertex (ids local to this signature)."""
        keys = [_hist_key(a) for a in self.attributes]
        order = {key: i for i, key in enumerate(sorted(set(keys)))}
        return [order[key] for key in keys]


def local_kwl_batch(graphs: Sequence[Graph], k: int, r: int) -> list[LocalSignature]:
    if k < 1:
        raise GraphInputError(f"k must be >= 1, got {k}")
    if r < 1:
        raise GraphInputError(f"r must be >= 1, got {r}")
    balls = [extract_ball(g, v, r).colored() for g in graphs for v in range(g.n)]
    colorings = refine_batch(balls, k)
    out = []
    pos = 0
    for g in graphs:
        attrs = tuple(c.histogram() for c in colorings[pos:pos + g.n])
        pos += g.n
        out.append(LocalSignature(k, r, attrs))
    return out


def local_kwl(g: Graph, k: int, r: int) -> LocalSignature:
    return local_kwl_batch([g], k, r)[0]


# ---------------------------------------------------------------------------
# Layer k-WL


@dataclass(frozen=True)
class LayerState:
    """Stabilized colorings of the consecutive-layer runs of one rooted ball.

    ``histograms[s]`` belongs to the run on layers ``(s + 1, s + 2)``;
    ``layer_vertices[s]`` lists the ball vertices of that run in the order
    used for the coloring's axes.
    """

    k: int
    histograms: tuple[ColorHistogram, ...]
    colorings: tuple[Coloring, ...]
    layer_vertices: tuple[tuple[int, ...], ...]

    @property
    def final(self) -> ColorHistogram | None:
        return self.histograms[-1] if self.histograms else None

    def key(self):
        return tuple(_hist_key(h) for h in self.histograms)


def _layer_plan(ball: RootedBall) -> list[tuple[list[int], list[int]]]:
    """(lower layer, upper layer) vertex lists for each run, lower first."""
    layers = ball.layers()
    depth = len(layers) - 1
    if depth < 1:
        return []
    plan = [(layers[1], layers[2] if depth >= 2 else [])]
    for i in range(2, depth):
        plan.append((layers[i], layers[i + 1]))
    return plan


def _seed_tuples(k: int, n_sub: int, low_prev: np.ndarray, prev: Coloring | None) -> np.ndarray | None:
    """Per-tuple seed: previous color of the processed sub-tuple, padded with its first entry.

    Processed vertices are the lower layer, sub-indices ``< len(low_prev)``;
    ``low_prev[i]`` is the index of lower vertex ``i`` in the previous run.
    Returns ``None`` when nothing was processed yet.
    """
    if prev is None:
        return None
    n_low = len(low_prev)
    idx = _tuple_index(n_sub, k)
    seed = np.full(idx.shape[1], -1, dtype=np.int64)
    processed = idx < n_low
    for mask in range(1, 1 << k):
        bits = [(mask >> j) & 1 for j in range(k)]
        sel = np.all([processed[j] == bool(bits[j]) for j in range(k)], axis=0)
        if not sel.any():
            continue
        positions = [j for j in range(k) if bits[j]]
        sub = [idx[j][sel] for j in positions]
        sub += [sub[0]] * (k - len(sub))
        mapped = [low_prev[col] for col in sub]
        seed[sel] = prev.colors[tuple(mapped)]
    return seed


def layer_kwl_batch(balls: Sequence[RootedBall], k: int) -> list[LayerState]:
    """Layer k-WL on every ball, jointly canonical across the batch."""
    if k < 1:
        raise GraphInputError(f"k must be >= 1, got {k}")
    plans = [_layer_plan(b) for b in balls]
    colored = [b.colored() for b in balls]
    steps = max((len(p) for p in plans), default=0)
    hists: list[list[ColorHistogram]] = [[] for _ in balls]
    cols: list[list[Coloring]] = [[] for _ in balls]
    verts: list[list[tuple[int, ...]]] = [[] for _ in balls]
    prev: list[tuple[Coloring, dict[int, int], int] | None] = [None] * len(balls)

    for s in range(steps):
        members = [bi for bi, p in enumerate(plans) if s < len(p)]
        subs = []
        seeds = []
        for bi in members:
            low, high = plans[bi][s]
            order = low + high
            sub, _ = colored[bi].induced(order)
            subs.append(sub)
            state = prev[bi]
            if k == 1:
                if state is None:
                    seeds.append([(c, -1) for c in sub.colors])
                else:
                    pc, pidx, _ = state
                    seeds.append([(c, int(pc.colors[pidx[v]]) if i < len(low) else -1)
                                  for i, (v, c) in enumerate(zip(order, sub.colors))])
            else:
                if state is None:
                    seeds.append(None)
                else:
                    pc, pidx, _ = state
                    low_prev = np.asarray([pidx[v] for v in low], dtype=np.int64)
                    seeds.append(_seed_tuples(k, sub.n, low_prev, pc))
        if k == 1:
            results = refine_1wl_batch(subs, seeds=seeds)
        else:
            results = refine_kwl_batch(subs, k, tuple_seeds=seeds)
        for bi, res in zip(members, results):
            low, high = plans[bi][s]
            order = low + high
            hists[bi].append(res.histogram())
            cols[bi].append(res)
            verts[bi].append(tuple(order))
            prev[bi] = (res, {v: i for i, v in enumerate(order)}, len(low))
    return [LayerState(k, tuple(h), tuple(c), tuple(v)) for h, c, v in zip(hists, cols, verts)]


def layer_kwl(ball: RootedBall, k: int) -> LayerState:
    return layer_kwl_batch([ball], k)[0]


def compare_balls(b1: RootedBall, b2: RootedBall, k: int, method: str = "local") -> Verdict:
    """Verdict on two rooted balls: whole-ball k-WL (``local``) or Layer k-WL (``layer``)."""
    if method == "local":
        c1, c2 = refine_batch([b1.colored(), b2.colored()], k)
        return Verdict.of(c1.histogram() == c2.histogram())
    if method == "layer":
        s1, s2 = layer_kwl_batch([b1, b2], k)
        return Verdict.of(s1.key() == s2.key())
    raise GraphInputError(f"unknown ball comparison method {method!r}")


# ---------------------------------------------------------------------------
# Recursive (1,2)-WL


def _relabel(labels: list) -> list[int]:
    order = {x: i for i, x in enumerate(sorted(set(labels)))}
    return [order[x] for x in labels]


def _class_runs(graphs: Sequence[Graph], colors: list[list[int]], pairs: bool) -> list[list]:
    """2-WL on induced subgraphs over color classes (or unions of two classes).

    Returns, per graph and vertex, the sorted tuple of (run label, diagonal color).
    """
    jobs = []  # (graph index, run label, vertex list)
    for gi, g in enumerate(graphs):
        classes: dict[int, list[int]] = {}
        for v in range(g.n):
            classes.setdefault(colors[gi][v], []).append(v)
        ids = sorted(classes)
        if pairs:
            for a, b in combinations_with_replacement(ids, 2):
                jobs.append((gi, (a, b), classes[a] + (classes[b] if a != b else [])))
        else:
            for a in ids:
                jobs.append((gi, (a,), classes[a]))
    subs = []
    for gi, _, vs in jobs:
        sub, _ = graphs[gi].induced(vs)
        subs.append(sub.with_colors([colors[gi][v] for v in vs]))
    results = refine_kwl_batch(subs, 2) if subs else []
    extra: list[list[list]] = [[[] for _ in range(g.n)] for g in graphs]
    for (gi, label, vs), res in zip(jobs, results):
        diag = res.vertex_colors()
        for v, d in zip(vs, diag):
            extra[gi][v].append((label, d))
    return [[tuple(sorted(x)) for x in per_graph] for per_graph in extra]


def recursive_12_wl_batch(graphs: Sequence[Graph], max_iterations: int | None = None) -> list[Coloring]:
    """Recursive (1,2)-WL, jointly canonical across ``graphs``.

    Alternates 1-WL on the whole graph with 2-WL on the subgraphs induced by
    single color classes and by pairs of classes, until the vertex partition
    stops changing.  A vertex takes the color of its diagonal pair (v, v).
    """
    first = refine_1wl_batch(graphs)
    colors = [c.vertex_colors() for c in first]
    num = len({c for cs in colors for c in cs})
    iterations = 0

    def rerank(labels_per_graph):
        flat = [x for labels in labels_per_graph for x in labels]
        ranked = _relabel(flat)
        out, pos = [], 0
        for g in graphs:
            out.append(ranked[pos:pos + g.n])
            pos += g.n
        return out

    stable = False
    while max_iterations is None or iterations < max_iterations:
        iterations += 1
        # 2-WL on each color class
        extra = _class_runs(graphs, colors, pairs=False)
        seeds = [[(colors[gi][v], extra[gi][v]) for v in range(g.n)] for gi, g in enumerate(graphs)]
        colors = [c.vertex_colors() for c in refine_1wl_batch(graphs, seeds=rerank(seeds))]
        # 2-WL on each pair of the new classes
        extra = _class_runs(graphs, colors, pairs=True)
        colors = rerank([[(colors[gi][v], extra[gi][v]) for v in range(g.n)] for gi, g in enumerate(graphs)])
        new_num = len({c for cs in colors for c in cs})
        if new_num == num:
            stable = True
            break
        num = new_num
    return [Coloring(1, np.asarray(c, dtype=np.int64), iterations, stable) for c in colors]


def recursive_12_wl(g: Graph) -> Coloring:
    return recursive_12_wl_batch([g])[0]


# ---------------------------------------------------------------------------
# verdicts


def compare_local(g1: Graph, g2: Graph, variant: str = "local", k: int = 1, r: int | None = 1) -> Verdict:
    """Whether the chosen localized variant tells ``g1`` and ``g2`` apart.

    ``plain`` is ordinary k-WL, kept here so every variant shares one entry
    point.  ``recursive12`` ignores ``k`` and ``r``.
    """
    if variant not in VARIANTS:
        raise GraphInputError(f"unknown variant {variant!r}; choose from {', '.join(VARIANTS)}")
    if g1.n != g2.n:
        return Verdict.DISTINGUISHED
    if variant == "plain":
        c1, c2 = refine_batch([g1, g2], k)
        return Verdict.of(c1.histogram() == c2.histogram())
    if variant == "recursive12":
        c1, c2 = recursive_12_wl_batch([g1, g2])
        return Verdict.of(c1.histogram() == c2.histogram())
    if r is None:
        raise GraphInputError(f"variant {variant!r} needs a radius r")
    if variant == "local":
        s1, s2 = local_kwl_batch([g1, g2], k, r)
        return Verdict.of(s1.multiset() == s2.multiset())
    balls1 = [extract_ball(g1, v, r) for v in range(g1.n)]
    balls2 = [extract_ball(g2, v, r) for v in range(g2.n)]
    states = layer_kwl_batch(balls1 + balls2, k)
    keys1 = sorted(s.key() for s in states[:g1.n])
    keys2 = sorted(s.key() for s in states[g1.n:])
    return Verdict.of(keys1 == keys2)
