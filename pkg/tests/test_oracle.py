from __future__ import annotations

from itertools import product

import networkx as nx
import pytest
from hypothesis import given, settings

from localwl import generators as gen
from localwl.errors import CapacityError, GraphInputError
from localwl.graph import Graph, disjoint_union
from localwl.oracle import (
    automorphisms,
    canonical_form,
    check_isomorphism,
    hom_count,
    induced_census,
    injective_hom_count,
    iso,
    oracle_count,
    spasm,
)

from conftest import graph_and_perm, graphs

K2 = Graph(2, [(0, 1)])
TWO_K2 = Graph(4, [(0, 1), (2, 3)])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def naive_hom_count(h: Graph, g: Graph) -> int:
    return sum(all(g.has_edge(f[u], f[v]) for u, v in h.edges()) for f in product(range(g.n), repeat=h.n))


def test_oracle_count_examples(k4):
    c4 = gen.cycle_graph(4)
    assert oracle_count(k4, gen.complete_graph(3)) == 4
    assert oracle_count(c4, TWO_K2, "subgraph") == 2
    assert oracle_count(c4, TWO_K2, "induced") == 0
    assert oracle_count(k4, gen.paw_graph(), "subgraph") == 12
    assert oracle_count(k4, gen.paw_graph(), "induced") == 0


def test_oracle_count_guards(k4):
    with pytest.raises(GraphInputError):
        oracle_count(k4, K2, "walks")
    with pytest.raises(CapacityError):
        oracle_count(gen.complete_graph(40), gen.cycle_graph(6), budget=1000)
    with pytest.raises(CapacityError):
        oracle_count(k4, gen.cycle_graph(9))


def test_hom_count_examples():
    assert hom_count(K2, gen.cycle_graph(4)) == 8
    assert hom_count(gen.complete_graph(3), gen.complete_graph(3)) == 6
    assert hom_count(gen.path_graph(3), K2) == 2
    assert hom_count(Graph(0), K2) == 1
    with pytest.raises(CapacityError):
        hom_count(gen.cycle_graph(7), K2)
    with pytest.raises(CapacityError):
        hom_count(gen.cycle_graph(5), gen.complete_graph(100), budget=10**6)


def test_spasm_examples():
    forms = lambda gs: {canonical_form(g) for g in gs}
    assert forms(spasm(gen.path_graph(3))) == forms([gen.path_graph(3), K2])
    assert forms(spasm(gen.complete_graph(3))) == forms([gen.complete_graph(3)])
    assert forms(spasm(TWO_K2)) == forms([TWO_K2, gen.path_graph(3), K2])
    assert len(spasm(gen.cycle_graph(4))) == 3  # C4, P3, K2


def test_automorphism_counts():
    assert len(automorphisms(gen.cycle_graph(5))) == 10
    assert len(automorphisms(gen.petersen_graph().induced(range(8))[0])) >= 1
    assert len(automorphisms(gen.complete_graph(4).with_colors([1, 0, 0, 0]))) == 6


def test_induced_census_sums_to_subsets():
    census = induced_census(gen.petersen_graph(), 4)
    assert sum(census.values()) == 210


def test_iso_examples(c6, two_c3):
    assert not iso(c6, two_c3).isomorphic
    assert iso(c6, two_c3).verdict == "NonIsomorphic"
    c5_c3 = disjoint_union(gen.cycle_graph(5), gen.cycle_graph(3))
    assert not iso(gen.cycle_graph(8), c5_c3).isomorphic
    assert not iso(gen.rook_graph(4), gen.shrikhande_graph()).isomorphic


def test_iso_witness_on_relabeling():
    g = gen.petersen_graph()
    perm = [4, 0, 8, 1, 9, 3, 7, 5, 2, 6]
    cert = iso(g, g.relabel(perm))
    assert cert.isomorphic and cert.verdict == "Isomorphic"
    assert check_isomorphism(g, g.relabel(perm), cert.mapping)


def test_iso_capacity_guard():
    with pytest.raises(CapacityError):
        iso(gen.cycle_graph(20), gen.cycle_graph(20))


@settings(max_examples=60, deadline=None)
@given(graphs(0, 6), graphs(0, 5))
def test_hom_count_matches_naive(h, g):
    assert hom_count(h, g) == naive_hom_count(h, g)


@settings(max_examples=40, deadline=None)
@given(graphs(1, 5), graphs(0, 6))
def test_hom_decomposes_over_spasm(h, g):
    # every homomorphism factors uniquely as a surjection onto its image
    # followed by an injective map, so hom(h, g) = sum over images F of
    # surj(h -> F) / |Aut F| * inj(F -> g)
    total = 0
    for f in spasm(h):
        surj = sum(
            1 for m in product(range(f.n), repeat=h.n)
            if set(m) == set(range(f.n))
            and all(f.has_edge(m[u], m[v]) for u, v in h.edges())
            and len({(min(m[u], m[v]), max(m[u], m[v])) for u, v in h.edges()}) == f.m
        )
        aut = len(automorphisms(f))
        assert surj % aut == 0
        total += surj // aut * injective_hom_count(f, g)
    assert total == hom_count(h, g)


@settings(max_examples=60, deadline=None)
@given(graphs(1, 9), graphs(1, 9))
def test_iso_agrees_with_networkx(g1, g2):
    assert iso(g1, g2).isomorphic == nx.is_isomorphic(to_nx(g1), to_nx(g2))


@settings(max_examples=60, deadline=None)
@given(graph_and_perm(1, 9))
def test_iso_finds_witness(gp):
    g, perm = gp
    cert = iso(g, g.relabel(perm))
    assert cert.isomorphic and check_isomorphism(g, g.relabel(perm), cert.mapping)


@settings(max_examples=40, deadline=None)
@given(graphs(0, 8))
def test_oracle_complement_dual(g):
    for p in (gen.paw_graph(), gen.path_graph(4), gen.cycle_graph(4), gen.complete_graph(3)):
        if p.n <= g.n:
            assert oracle_count(g, p, "induced") == oracle_count(g.complement(), p.complement(), "induced")


@settings(max_examples=40, deadline=None)
@given(graph_and_perm(1, 8))
def test_canonical_form_invariant(gp):
    g, perm = gp
    assert canonical_form(g) == canonical_form(g.relabel(perm))


@settings(max_examples=40, deadline=None)
@given(graphs(0, 9))
def test_triangle_count_against_networkx(g):
    assert oracle_count(g, gen.complete_graph(3)) == sum(nx.triangles(to_nx(g)).values()) // 3
