"""Test corpora and the oracle-equivalence check behind ``localwl verify``.

Three corpora are built here, all deterministic:

* :func:`random_corpus` - G(n, p) graphs cycling through n in {8, 10, 12}
  and p in {0.2, 0.5, 0.8}
* :func:`wl_pairs` - graph pairs of equal order, including classic
  1-WL-equivalent regular pairs and random relabelings
* :func:`ball_pairs` - pairs of rooted balls of equal size, from random hosts,
  2-regular hosts and isomorphic relabelings
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from . import generators as gen
from .counting import (
    closed_form_star_and_matching,
    count_c4_subgraph,
    count_pattern,
    count_radius_one,
    count_triangles_fast,
    get_pattern,
)
from .fragmentation import SmallPatternId, clique_lift, frag_count, ind_count_le4, partition_check
from .graph import Graph, RootedBall, disjoint_union, extract_ball
from .oracle import oracle_count

RANDOM_NS = (8, 10, 12)
RANDOM_PS = (0.2, 0.5, 0.8)

#: patterns checked in both modes by :func:`check_graph`
CHECK_PATTERNS = ("triangle", "p3", "star3", "paw", "diamond", "c4", "k4", "2k2", "star:1", "star:4")


def random_params(i: int) -> tuple[int, float, int]:
    """(n, p, seed) of the ``i``-th random corpus graph."""
    return RANDOM_NS[i % 3], RANDOM_PS[(i // 3) % 3], i


def random_corpus(count: int = 200) -> list[tuple[str, Graph]]:
    out = []
    for i in range(count):
        n, p, seed = random_params(i)
        out.append((f"gnp-n{n}-p{p}-s{seed}", gen.gen_random(n, p, seed)))
    return out


def random_permutation(n: int, seed: int) -> list[int]:
    rng = np.random.Generator(np.random.PCG64(seed))
    return [int(x) for x in rng.permutation(n)]


def wl_pairs(random_count: int = 24) -> list[tuple[str, Graph, Graph]]:
    """Named pairs plus random pairs, relabelings and same-degree-sequence pairs."""
    c = gen.cycle_graph
    pairs = [
        ("C6|2C3", c(6), gen.copies(c(3), 2)),
        ("C8|C5+C3", c(8), disjoint_union(c(5), c(3))),
        ("C8|2C4", c(8), gen.copies(c(4), 2)),
        ("C7|C4+C3", c(7), disjoint_union(c(4), c(3))),
        ("C9|3C3", c(9), gen.copies(c(3), 3)),
        ("K33|prism3", gen.complete_bipartite(3, 3), gen.prism_graph(3)),
        ("cube|moebius4", gen.prism_graph(4), gen.moebius_ladder(4)),
        ("prism5|moebius5", gen.prism_graph(5), gen.moebius_ladder(5)),
        ("rook4|shrikhande", gen.rook_graph(4), gen.shrikhande_graph()),
        ("circ10-13|circ10-14", gen.circulant_graph(10, (1, 3)), gen.circulant_graph(10, (1, 4))),
        ("circ12-15|circ12-14", gen.circulant_graph(12, (1, 5)), gen.circulant_graph(12, (1, 4))),
        ("petersen|relabeled", gen.petersen_graph(), gen.petersen_graph().relabel(random_permutation(10, 7))),
        ("P4|K13", gen.path_graph(4), gen.star_graph(3)),
        ("paw|C4", gen.paw_graph(), c(4)),
        ("K4|diamond", gen.complete_graph(4), gen.diamond_graph()),
    ]
    for i in range(random_count):
        n = (6, 8, 10)[i % 3]
        g = gen.gen_random(n, 0.4, 1000 + i)
        if i % 2 == 0:
            pairs.append((f"gnp{n}-s{1000 + i}|relabeled", g, g.relabel(random_permutation(n, i))))
        else:
            pairs.append((f"gnp{n}-s{1000 + i}|gnp{n}-s{2000 + i}", g, gen.gen_random(n, 0.4, 2000 + i)))
    return pairs


def _two_regular_hosts() -> list[tuple[str, Graph]]:
    c = gen.cycle_graph
    return [
        ("C6", c(6)), ("2C3", gen.copies(c(3), 2)), ("C7", c(7)), ("C4+C3", disjoint_union(c(4), c(3))),
        ("C8", c(8)), ("2C4", gen.copies(c(4), 2)), ("C5+C3", disjoint_union(c(5), c(3))),
        ("C9", c(9)), ("3C3", gen.copies(c(3), 3)), ("C5", c(5)), ("C4", c(4)), ("C3", c(3)),
    ]


def ball_pairs(random_count: int = 40, seed: int = 0) -> list[tuple[str, RootedBall, RootedBall]]:
    """Rooted-ball pairs of equal size for the Layer vs Local comparison."""
    out: list[tuple[str, RootedBall, RootedBall]] = []
    hosts = _two_regular_hosts()
    for r in (1, 2, 3, 4):
        balls = [(name, extract_ball(g, 0, r)) for name, g in hosts]
        for i in range(len(balls)):
            for j in range(i, len(balls)):
                (na, a), (nb, b) = balls[i], balls[j]
                if a.size == b.size:
                    out.append((f"2reg r{r} {na}|{nb}", a, b))
    rng = np.random.Generator(np.random.PCG64(seed))
    graphs = [gen.gen_random(n, p, s) for s in range(20) for n in (8, 10) for p in (0.2, 0.3)]
    tries = 0
    found = 0
    while found < random_count and tries < 50 * random_count:
        tries += 1
        g1 = graphs[int(rng.integers(len(graphs)))]
        g2 = graphs[int(rng.integers(len(graphs)))]
        r = int(rng.integers(2, 5))
        v1, v2 = int(rng.integers(g1.n)), int(rng.integers(g2.n))
        b1 = extract_ball(g1, v1, r)
        if found % 2 == 0:
            perm = random_permutation(g1.n, tries)
            b2 = extract_ball(g1.relabel(perm), perm[v1], r)
            label = f"random r{r} iso"
        else:
            b2 = extract_ball(g2, v2, r)
            label = f"random r{r}"
        if b1.size != b2.size or b1.size < 3:
            continue
        out.append((label, b1, b2))
        found += 1
    for name, (g1, g2) in (("rook4|shrikhande", (gen.rook_graph(4), gen.shrikhande_graph())),
                           ("cube|moebius4", (gen.prism_graph(4), gen.moebius_ladder(4)))):
        for r in (1, 2):
            out.append((f"{name} r{r}", extract_ball(g1, 0, r), extract_ball(g2, 0, r)))
    return out


# ---------------------------------------------------------------------------
# oracle-equivalence check of a single graph


@dataclass
class GraphCheck:
    """Library counts next to oracle counts for one graph."""

    name: str
    n: int
    m: int
    induced: dict[str, int] = field(default_factory=dict)
    subgraph: dict[str, int] = field(default_factory=dict)
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def golden(self) -> dict:
        return {"n": self.n, "m": self.m, "induced": dict(self.induced), "subgraph": dict(self.subgraph)}


def _expect(check: GraphCheck, what: str, got: int, want: int) -> None:
    if got != want:
        check.mismatches.append(f"{check.name}: {what} = {got}, oracle {want}")


def check_graph(g: Graph, name: str = "graph", golden: Mapping | None = None) -> GraphCheck:
    """Compare every exact counter in the package against the brute-force oracle.

    If ``golden`` (a record previously produced by :meth:`GraphCheck.golden`)
    is given, the oracle values are also compared with it.
    """
    check = GraphCheck(name, g.n, g.m)
    counts = ind_count_le4(g)
    for pid in SmallPatternId:
        want = oracle_count(g, get_pattern(pid.value), "induced")
        check.induced[pid.value] = want
        _expect(check, f"ind_count_le4[{pid.value}]", counts[pid], want)
    if not partition_check(g, counts):
        check.mismatches.append(f"{name}: partition identities fail")
    for target in ("paw", "diamond", "star3"):
        _expect(check, f"frag_count[{target}]", frag_count(g, target), check.induced[target])

    for pname in CHECK_PATTERNS:
        p = get_pattern(pname)
        for mode in ("subgraph", "induced"):
            want = oracle_count(g, p, mode)
            if mode == "subgraph":
                check.subgraph[pname] = want
            _expect(check, f"count_pattern[{pname},{mode}]", count_pattern(g, p, mode).total, want)
            if p.radius == 1 or any(p.graph.degree(v) == p.size - 1 for v in range(p.size)):
                _expect(check, f"count_radius_one[{pname},{mode}]", count_radius_one(g, p, mode).total, want)

    sub = check.subgraph
    _expect(check, "count_triangles_fast", count_triangles_fast(g), sub["triangle"])
    _expect(check, "count_c4_subgraph", count_c4_subgraph(g), sub["c4"])
    _expect(check, "clique_lift", clique_lift(g), sub["k4"])
    for s, pname in ((1, "star:1"), (2, "p3"), (3, "star3"), (4, "star:4")):
        star, matching = closed_form_star_and_matching(g, s)
        _expect(check, f"closed_form_star[{s}]", star, sub[pname])
        _expect(check, "closed_form_matching", matching, sub["2k2"])

    if golden is not None:
        for section in ("induced", "subgraph"):
            for key, want in golden.get(section, {}).items():
                have = getattr(check, section).get(key)
                if have != want:
                    check.mismatches.append(f"{name}: golden {section}[{key}] = {want}, oracle {have}")
        for key in ("n", "m"):
            if key in golden and golden[key] != getattr(check, key):
                check.mismatches.append(f"{name}: golden {key} = {golden[key]}, graph has {getattr(check, key)}")
    return check

