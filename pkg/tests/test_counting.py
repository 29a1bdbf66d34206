from __future__ import annotations

import pytest
from hypothesis import given, settings

from localwl import generators as gen
from localwl.counting import (
    PATTERN_NAMES,
    closed_form_star_and_matching,
    count_c4_subgraph,
    count_pattern,
    count_radius_one,
    count_triangles_fast,
    get_pattern,
    local_rooted_count,
    make_pattern,
    orbit_size,
)
from localwl.errors import CapacityError, GraphInputError
from localwl.graph import Graph, eccentricity_center, extract_ball, is_connected
from localwl.oracle import oracle_count

from conftest import graph_and_perm, graphs

LIBRARY = [name for name in PATTERN_NAMES if name != "star:s"]


def test_orbit_size_examples():
    assert orbit_size(get_pattern("triangle")) == 3
    assert orbit_size(get_pattern("c4")) == 4
    assert orbit_size(get_pattern("paw")) == 1
    assert orbit_size(get_pattern("diamond")) == 2
    assert orbit_size(get_pattern("star3")) == 1
    assert orbit_size(make_pattern(gen.star_graph(3), 1)) == 3


def test_pattern_capacity_guard():
    with pytest.raises(CapacityError):
        make_pattern(gen.cycle_graph(9))


def test_library_lookup():
    assert get_pattern("star:4").size == 5
    with pytest.raises(GraphInputError) as err:
        get_pattern("pentagon")
    assert "triangle" in str(err.value)
    with pytest.raises(GraphInputError):
        get_pattern("star:x")


@pytest.mark.parametrize("name", LIBRARY)
def test_library_key_radius(name):
    p = get_pattern(name)
    if not is_connected(p.graph):
        assert p.radius is None
        return
    radius, centers = eccentricity_center(p.graph)
    if name == "paw":
        # the pendant key sees the far triangle vertices at distance 2
        assert p.radius == 2 and radius == 1
    else:
        assert p.key_vertex in centers and p.radius == radius


def test_local_rooted_count_examples(k4, c6):
    assert local_rooted_count(get_pattern("triangle"), extract_ball(k4, 0, 1)) == 3
    assert local_rooted_count(get_pattern("paw"), extract_ball(c6, 0, 2), "induced") == 0
    assert local_rooted_count(get_pattern("c4"), extract_ball(k4, 0, 2)) == 3


def test_local_rooted_count_radius_guard(k4):
    with pytest.raises(GraphInputError):
        local_rooted_count(get_pattern("c4"), extract_ball(k4, 0, 1))
    with pytest.raises(GraphInputError):
        local_rooted_count(get_pattern("2k2"), extract_ball(k4, 0, 1))


def test_count_pattern_examples(k4):
    rep = count_pattern(k4, get_pattern("triangle"), "subgraph")
    assert rep.total == 4 and rep.per_root == (3, 3, 3, 3)
    assert sum(rep.per_root) == rep.total * rep.orbit_size
    assert count_pattern(gen.petersen_graph(), get_pattern("triangle")).total == 0
    c4 = gen.cycle_graph(4)
    assert count_pattern(c4, get_pattern("2k2"), "induced").total == 0
    assert count_pattern(c4, get_pattern("2k2"), "subgraph").total == 2


def test_count_pattern_rejects_mode(k4):
    with pytest.raises(GraphInputError):
        count_pattern(k4, get_pattern("triangle"), "homomorphism")


def test_count_report_to_dict(k4):
    d = count_pattern(k4, get_pattern("triangle")).to_dict()
    assert d["total"] == 4 and d["per_root"] == {"0": 3, "1": 3, "2": 3, "3": 3}


def test_count_radius_one_examples(k4, c6):
    assert count_radius_one(k4, get_pattern("star3")).total == 4
    assert count_radius_one(c6, get_pattern("triangle")).total == 0
    assert count_radius_one(gen.paw_graph(), get_pattern("paw"), "induced").total == 1
    with pytest.raises(GraphInputError):
        count_radius_one(k4, get_pattern("c4"))


def test_fast_triangles():
    assert count_triangles_fast(gen.complete_graph(4)) == 4
    assert count_triangles_fast(gen.cycle_graph(6)) == 0
    assert count_triangles_fast(gen.complete_graph(5)) == 10


def test_closed_forms():
    assert closed_form_star_and_matching(gen.cycle_graph(4), 2)[1] == 2
    assert closed_form_star_and_matching(gen.path_graph(4), 2)[1] == 1
    assert closed_form_star_and_matching(gen.complete_graph(4), 3)[0] == 4
    assert closed_form_star_and_matching(gen.cycle_graph(4), 1)[0] == 4
    with pytest.raises(GraphInputError):
        closed_form_star_and_matching(gen.cycle_graph(4), 0)


def test_fast_c4():
    assert count_c4_subgraph(gen.cycle_graph(4)) == 1
    assert count_c4_subgraph(gen.complete_graph(4)) == 3
    assert count_c4_subgraph(gen.cycle_graph(6)) == 0


@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("mode", ["subgraph", "induced"])
def test_every_library_pattern_matches_oracle(seed, mode):
    g = gen.gen_random(9, 0.45, seed)
    for name in LIBRARY + ["star:1", "star:4"]:
        p = get_pattern(name)
        rep = count_pattern(g, p, mode)
        assert rep.total == oracle_count(g, p, mode), name
        assert sum(rep.per_root) == rep.total * p.orbit_size


@settings(max_examples=40, deadline=None)
@given(graphs(0, 9))
def test_fast_counters_match_oracle(g):
    assert count_triangles_fast(g) == oracle_count(g, gen.complete_graph(3))
    assert count_c4_subgraph(g) == oracle_count(g, gen.cycle_graph(4))
    for s in (1, 2, 3):
        star, matching = closed_form_star_and_matching(g, s)
        assert star == oracle_count(g, gen.star_graph(s))
    assert matching == oracle_count(g, Graph(4, [(0, 1), (2, 3)]))


@settings(max_examples=40, deadline=None)
@given(graphs(1, 8))
def test_any_key_gives_same_total(g):
    for base in (gen.paw_graph(), gen.path_graph(4), gen.diamond_graph()):
        totals = {count_pattern(g, make_pattern(base, key), "induced").total for key in range(base.n)}
        assert len(totals) == 1


@settings(max_examples=30, deadline=None)
@given(graph_and_perm(1, 8))
def test_counts_isomorphism_invariant(gp):
    g, perm = gp
    h = g.relabel(perm)
    for name in ("triangle", "paw", "c4", "p4", "2k2"):
        p = get_pattern(name)
        a, b = count_pattern(g, p, "induced"), count_pattern(h, p, "induced")
        assert a.total == b.total
        assert all(a.per_root[v] == b.per_root[perm[v]] for v in range(g.n))


def test_star_and_matching_agree_on_1wl_equivalent_pair(c6, two_c3):
    for s in (1, 2, 3):
        assert closed_form_star_and_matching(c6, s) == closed_form_star_and_matching(two_c3, s)
