import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chordal_tim.analysis import conflict_graph, is_chordal
from chordal_tim.corpus import random_point_in_region
from chordal_tim.errors import KeyMismatchError, NotChordalError, SizeLimitError
from chordal_tim.region import (
    NOT_CHORDAL_WARNING,
    build_region,
    contains,
    enumerate_vertices,
    integral_vertices_check,
    sum_capacity,
    symmetric_capacity,
    violated_inequalities,
)
from chordal_tim.topology import Message, MessageSet, all_unicast, gen_cycle
from oracles import brute_vertices
from strategies import topologies

F = Fraction
W = Message
IC3 = MessageSet([W(0, 0), W(1, 1), W(2, 2)])


def coords(vs):
    return [v.coordinates for v in vs]


def test_z_network_region(z_network):
    rp = build_region(z_network, all_unicast(z_network))
    assert rp.inequalities == ((W(0, 0), W(0, 1), W(1, 1)),)
    assert rp.chordal and rp.warning is None


def test_matching_region(matching):
    rp = build_region(matching, all_unicast(matching))
    assert rp.inequalities == ((W(0, 0),), (W(1, 1),))


def test_cycle_three_interference_region_flagged():
    rp = build_region(gen_cycle(3), IC3)
    assert rp.inequalities == ((W(0, 0), W(1, 1), W(2, 2)),)
    assert not rp.chordal
    assert rp.to_dict()["warning"] == NOT_CHORDAL_WARNING
    half = {m: F(1, 2) for m in IC3}
    assert not contains(rp, half)
    assert violated_inequalities(rp, half) == [rp.inequalities[0]]


def test_contains_examples(z_network):
    rp = build_region(z_network, all_unicast(z_network))
    ms = rp.messages
    assert contains(rp, {m: F(1, 3) for m in ms})
    assert not contains(rp, {m: F(1, 2) for m in ms})
    assert contains(rp, {m: F(0) for m in ms})
    assert contains(rp, {})
    assert not contains(rp, {ms[0]: F(-1, 5)})
    with pytest.raises(KeyMismatchError):
        contains(rp, {W(1, 0): F(0)})


@given(topologies(max_edges=10))
def test_zero_tuple_always_inside(g):
    rp = build_region(g, all_unicast(g))
    assert contains(rp, {m: F(0) for m in rp.messages})


def test_z_network_vertices(z_network):
    rp = build_region(z_network, all_unicast(z_network))
    assert coords(enumerate_vertices(rp)) == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert integral_vertices_check(rp)


def test_matching_vertices_form_box(matching):
    rp = build_region(matching, all_unicast(matching))
    assert coords(enumerate_vertices(rp)) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_cycle_three_interference_simplex_is_integral():
    rp = build_region(gen_cycle(3), IC3)
    assert integral_vertices_check(rp)
    assert len(enumerate_vertices(rp)) == 4


def test_odd_hole_region_has_half_vertex():
    g = gen_cycle(5)
    ic = MessageSet(W(k, k) for k in range(5))
    rp = build_region(g, ic)
    vs = coords(enumerate_vertices(rp))
    assert tuple([F(1, 2)] * 5) in vs
    assert vs == brute_vertices(rp)
    assert not integral_vertices_check(rp)


def test_vertex_size_cap():
    g = gen_cycle(7)
    rp = build_region(g, all_unicast(g))
    with pytest.raises(SizeLimitError):
        enumerate_vertices(rp)
    with pytest.raises(ValueError):
        enumerate_vertices(build_region(gen_cycle(2), all_unicast(gen_cycle(2))), method="simplex")


@given(topologies(max_side=4, max_edges=7))
def test_vertex_methods_agree_with_brute_force(g):
    rp = build_region(g, all_unicast(g))
    dd = coords(enumerate_vertices(rp))
    assert dd == coords(enumerate_vertices(rp, method="tight-set"))
    assert dd == brute_vertices(rp)


@given(topologies(max_side=4, max_edges=9))
def test_all_clique_option_gives_same_polytope(g):
    ms = all_unicast(g)
    a = build_region(g, ms)
    b = build_region(g, ms, all_cliques=True)
    assert set(a.inequalities) <= set(b.inequalities)
    assert coords(enumerate_vertices(a)) == coords(enumerate_vertices(b))


@given(topologies(max_side=4, max_edges=10))
def test_chordal_regions_are_integral(g):
    if is_chordal(g):
        rp = build_region(g, all_unicast(g))
        assert integral_vertices_check(rp)


@given(topologies(max_side=4, max_edges=10))
def test_vertex_membership_and_tightness(g):
    rp = build_region(g, all_unicast(g))
    eps = F(1, 1000)
    for v in enumerate_vertices(rp):
        r = v.as_rates(rp.messages)
        assert contains(rp, r)
        tight = [c for c in rp.inequalities if sum(r[m] for m in c) == 1]
        for c in tight:
            for m in c:
                if r[m] != 0:
                    bumped = dict(r)
                    bumped[m] = r[m] * (1 + eps)
                    assert not contains(rp, bumped)


@given(topologies(max_side=4, max_edges=10))
def test_integral_supports_are_independent(g):
    rp = build_region(g, all_unicast(g))
    cg = conflict_graph(g, rp.messages)
    for v in enumerate_vertices(rp):
        if v.is_integral():
            assert cg.is_independent(v.support(rp.messages))


@given(topologies(max_side=4, max_edges=10, min_edges=2), st.integers(0, 10_000))
def test_region_monotone_under_message_removal(g, seed):
    rng = random.Random(seed)
    ms = all_unicast(g)
    full = build_region(g, ms)
    drop = ms[rng.randrange(len(ms))]
    sub = build_region(g, MessageSet(m for m in ms if m != drop))
    for _ in range(5):
        x = random_point_in_region(sub, rng)
        assert contains(full, x | {drop: F(0)})
        y = random_point_in_region(full, rng)
        assert contains(sub, {m: v for m, v in y.items() if m != drop})


def test_capacity_examples(z_network, matching, star):
    assert symmetric_capacity(z_network, all_unicast(z_network)) == F(1, 3)
    assert sum_capacity(z_network, all_unicast(z_network)) == 1
    assert symmetric_capacity(matching, all_unicast(matching)) == 1
    assert sum_capacity(matching, all_unicast(matching)) == 2
    assert symmetric_capacity(star, all_unicast(star)) == F(1, 2)
    assert sum_capacity(star, all_unicast(star)) == 1


def test_capacity_refuses_non_chordal():
    with pytest.raises(NotChordalError):
        symmetric_capacity(gen_cycle(4), all_unicast(gen_cycle(4)))
    with pytest.raises(NotChordalError):
        sum_capacity(gen_cycle(3), IC3)


def test_region_json(z_network):
    doc = build_region(z_network, all_unicast(z_network)).to_dict()
    assert doc == {
        "messages": [[0, 0], [0, 1], [1, 1]],
        "inequalities": [{"clique": [[0, 0], [0, 1], [1, 1]], "bound": "1"}],
        "chordal": True,
    }
