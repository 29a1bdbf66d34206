from __future__ import annotations

import pytest
from hypothesis import given, settings

from localwl import generators as gen
from localwl.errors import CapacityError
from localwl.graph import Graph
from localwl.wl import (
    ColorHistogram,
    Verdict,
    atomic_types,
    compare,
    refine_1wl,
    refine_1wl_batch,
    refine_kwl,
    refine_kwl_batch,
)

from conftest import graph_and_perm, graphs


def partition(colors) -> set[frozenset[int]]:
    classes: dict[int, set[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, set()).add(v)
    return {frozenset(s) for s in classes.values()}


def refines(fine, coarse) -> bool:
    return all(any(a <= b for b in coarse) for a in fine)


def test_1wl_triangle_single_class():
    col = refine_1wl(gen.complete_graph(3))
    assert col.histogram().items == ((0, 3),)
    assert col.stable and col.iteration == 1


def test_1wl_path_two_classes():
    col = refine_1wl(gen.path_graph(3))
    assert partition(col.vertex_colors()) == {frozenset({0, 2}), frozenset({1})}
    assert sorted(c for _, c in col.histogram().items) == [1, 2]


def test_1wl_c6_vs_two_triangles(c6, two_c3):
    a, b = refine_1wl_batch([c6, two_c3])
    assert a.histogram() == b.histogram() == ColorHistogram(((0, 6),))
    assert compare(c6, two_c3, 1) == Verdict.EQUIVALENT


def test_1wl_respects_input_colors():
    g = gen.cycle_graph(4).with_colors([1, 0, 0, 0])
    col = refine_1wl(g)
    assert partition(col.vertex_colors()) == {frozenset({0}), frozenset({1, 3}), frozenset({2})}


def test_1wl_max_rounds_stops_early():
    col = refine_1wl(gen.path_graph(7), max_rounds=1)
    assert col.iteration == 1 and not col.stable
    assert col.num_classes() == 2


def test_kwl_triangle_two_classes():
    hist = refine_kwl(gen.complete_graph(3), 2).histogram()
    assert sorted(m for _, m in hist.items) == [3, 6]
    assert hist.total == 9


def test_kwl_c6_vs_two_triangles(c6, two_c3):
    assert compare(c6, two_c3, 2) == Verdict.DISTINGUISHED


def test_kwl_petersen_relabeled():
    g = gen.petersen_graph()
    h = g.relabel([3, 7, 1, 0, 9, 2, 8, 4, 6, 5])
    for k in (1, 2):
        assert compare(g, h, k) == Verdict.EQUIVALENT


def test_rook_vs_shrikhande_needs_three():
    rook, shr = gen.rook_graph(4), gen.shrikhande_graph()
    assert compare(rook, shr, 1) == Verdict.EQUIVALENT
    assert compare(rook, shr, 2) == Verdict.EQUIVALENT


def test_different_orders_distinguished():
    assert compare(gen.cycle_graph(4), gen.cycle_graph(5), 2) == Verdict.DISTINGUISHED


def test_atomic_types_encode_equality_and_adjacency():
    g = gen.path_graph(3)
    rows = atomic_types(g, 2)
    types = {(i, j): tuple(rows[3 * i + j]) for i in range(3) for j in range(3)}
    assert types[0, 1] == types[1, 0] == types[1, 2]
    assert types[0, 2] != types[0, 1]
    assert types[0, 0] == types[1, 1] != types[0, 1]


def test_kwl_capacity_guard():
    with pytest.raises(CapacityError) as err:
        refine_kwl(gen.complete_graph(30), 3, budget=1000)
    assert err.value.budget == 1000


def test_kwl_diagonal_matches_1wl_partition_on_trees():
    g = Graph(6, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)])
    one = partition(refine_1wl(g).vertex_colors())
    two = partition(refine_kwl(g, 2).vertex_colors())
    assert refines(two, one)


@settings(max_examples=60, deadline=None)
@given(graph_and_perm(1, 8))
def test_permutation_invariance(gp):
    g, perm = gp
    h = g.relabel(perm)
    assert compare(g, h, 1) == Verdict.EQUIVALENT
    a, b = refine_kwl_batch([g, h], 2)
    assert a.histogram() == b.histogram()
    # colors travel with the vertices
    ca, cb = a.vertex_colors(), b.vertex_colors()
    assert all(ca[v] == cb[perm[v]] for v in range(g.n))


@settings(max_examples=60, deadline=None)
@given(graphs(1, 9))
def test_refinement_is_monotone(g):
    col = refine_1wl(g)
    assert list(col.class_counts) == sorted(col.class_counts)
    assert col.iteration <= g.n
    previous = None
    for rounds in range(col.iteration + 1):
        part = partition(refine_1wl(g, max_rounds=rounds).vertex_colors())
        if previous is not None:
            assert refines(part, previous)
        previous = part


@settings(max_examples=40, deadline=None)
@given(graphs(1, 8), graphs(1, 8))
def test_hierarchy_on_random_pairs(g1, g2):
    if compare(g1, g2, 1) == Verdict.DISTINGUISHED:
        assert compare(g1, g2, 2) == Verdict.DISTINGUISHED


@settings(max_examples=40, deadline=None)
@given(graphs(2, 8))
def test_seeded_refinement_refines_plain(g):
    seeded = g.with_colors([v % 2 for v in range(g.n)])
    assert refines(partition(refine_1wl(seeded).vertex_colors()), partition(refine_1wl(g).vertex_colors()))


def test_repeated_runs_identical(c6):
    a = refine_kwl(c6, 2)
    b = refine_kwl(c6, 2)
    assert (a.colors == b.colors).all() and a.histogram() == b.histogram()
