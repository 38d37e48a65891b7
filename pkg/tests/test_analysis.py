from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from chordal_tim import analysis
from chordal_tim.analysis import (
    ChordlessCycleWitness,
    ConflictGraph,
    chromatic_number,
    clique_number,
    conflict_graph,
    find_chordless_long_cycle,
    independence_number,
    is_chordal,
    is_perfect,
    maximal_cliques,
    square_of_line_graph,
)
from chordal_tim.errors import SizeLimitError, TopologyError
from chordal_tim.topology import Message, MessageSet, TopologyGraph, all_unicast, gen_convex1d, gen_cycle, gen_tree
from oracles import (
    brute_chromatic_number,
    brute_conflicts,
    brute_has_chordless_long_cycle,
    brute_independence_number,
    brute_is_perfect,
    brute_maximal_cliques,
    edge_set,
)
from strategies import topologies


def abstract_graph(n, edges):
    """Conflict graph on placeholder messages 0..n-1."""
    ms = MessageSet(Message(k, 0) for k in range(n))
    return ConflictGraph(ms, [(Message(a, 0), Message(b, 0)) for a, b in edges])


def cycle_graph(n):
    return abstract_graph(n, [(k, (k + 1) % n) for k in range(n)])


@st.composite
def small_graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return abstract_graph(n, edges)


IC3 = MessageSet([Message(0, 0), Message(1, 1), Message(2, 2)])


# --- conflict graph ---------------------------------------------------------


def test_hexagon_interference_messages_form_triangle(hexagon):
    cg = conflict_graph(hexagon, IC3)
    assert cg.num_edges() == 3 and cg.is_clique(IC3)


def test_z_network_conflicts(z_network):
    cg = conflict_graph(z_network, all_unicast(z_network))
    w00, w10, w11 = Message(0, 0), Message(0, 1), Message(1, 1)
    assert cg.adjacent(w00, w10)  # same source
    assert cg.adjacent(w10, w11)  # same destination
    assert cg.adjacent(w00, w11)  # t_10 = 1: S0 reaches D1
    assert cg.num_edges() == 3


def test_matching_has_no_conflicts(matching):
    assert conflict_graph(matching, all_unicast(matching)).num_edges() == 0


@given(topologies())
def test_conflict_graph_matches_definition(g):
    ms = all_unicast(g)
    assert edge_set(conflict_graph(g, ms)) == brute_conflicts(g, ms)


# --- square of the line graph ---------------------------------------------------


def test_square_of_line_graph_single_edge():
    g = TopologyGraph.from_edges(1, 1, [(0, 0)])
    sq = square_of_line_graph(g)
    assert len(sq) == 1 and sq.num_edges() == 0


def test_square_of_line_graph_star():
    g = TopologyGraph.from_edges(1, 3, [(0, 0), (0, 1), (0, 2)])
    sq = square_of_line_graph(g)
    assert sq.num_edges() == 3


@given(topologies(max_edges=12))
def test_square_of_line_graph_equals_conflict_graph(g):
    assert square_of_line_graph(g) == conflict_graph(g, all_unicast(g))


@given(topologies(max_edges=12, min_edges=1))
def test_square_of_line_graph_against_networkx(g):
    G = nx.Graph()
    G.add_edges_from((("S", i), ("D", j)) for i, j in g.edges)
    sq = nx.power(nx.line_graph(G), 2)

    def msg(e):
        (a, b) = e
        s, d = (a, b) if a[0] == "S" else (b, a)
        return Message(s[1], d[1])

    expected = {frozenset((msg(u), msg(v))) for u, v in sq.edges()}
    assert edge_set(square_of_line_graph(g)) == expected


# --- chordality -------------------------------------------------------------------


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_cycle_witness(n):
    w = find_chordless_long_cycle(gen_cycle(n))
    assert w is not None and w.length == 2 * n
    assert w.sources == tuple(range(n)) and w.destinations == tuple(range(n))
    w.validate(gen_cycle(n))


def test_cycle_two_is_chordal():
    assert is_chordal(gen_cycle(2))
    assert find_chordless_long_cycle(gen_cycle(2)) is None


def test_cycle_four_not_chordal():
    assert not is_chordal(gen_cycle(4))


@given(st.integers(0, 5000), st.integers(2, 16))
def test_trees_are_chordal(seed, size):
    assert is_chordal(gen_tree(seed, size))


@given(st.integers(0, 5000), st.integers(1, 7), st.integers(1, 7))
def test_convex1d_has_no_witness(seed, m, n):
    g, _ = gen_convex1d(seed, m, n)
    assert find_chordless_long_cycle(g) is None


@given(topologies(max_side=5, max_edges=14))
def test_chordality_matches_brute_force(g):
    w = find_chordless_long_cycle(g)
    assert (w is None) == (not brute_has_chordless_long_cycle(g))
    assert is_chordal(g) == (w is None)
    if w is not None:
        w.validate(g)


def test_shortest_cycle_selected():
    # 6-cycle on S0..S2/D0..D2 plus a disjoint 8-cycle on S3..S6/D3..D6
    edges = [(i, j) for i, j in gen_cycle(3).edges]
    edges += [(3 + i, 3 + j) for i, j in gen_cycle(4).edges]
    g = TopologyGraph.from_edges(7, 7, edges)
    w = find_chordless_long_cycle(g)
    assert w.length == 6 and w.sources == (0, 1, 2)
    assert [c.length for c in analysis.chordless_long_cycles(g)] == [6, 8]


def test_witness_validation_rejects_chord():
    g = gen_cycle(3)
    chorded = TopologyGraph(3, 3, g.edges | {(0, 1)})
    with pytest.raises(TopologyError):
        ChordlessCycleWitness((0, 1, 2), (0, 1, 2)).validate(chorded)
    with pytest.raises(TopologyError):
        ChordlessCycleWitness((0, 1), (0, 1)).validate(gen_cycle(2))


# --- cliques and colourings -------------------------------------------------------


def test_triangle_clique():
    assert len(maximal_cliques(abstract_graph(3, [(0, 1), (1, 2), (0, 2)]))) == 1


def test_isolated_vertices_cliques():
    assert [len(c) for c in maximal_cliques(abstract_graph(2, []))] == [1, 1]


def test_cycle_four_cliques_match_brute_force():
    g = gen_cycle(4)
    cg = conflict_graph(g, all_unicast(g))
    cliques = maximal_cliques(cg)
    assert cliques == brute_maximal_cliques(cg.vertices, edge_set(cg))
    assert all(len(c) >= 2 for c in cliques)
    # C_8 squared: the maximal cliques are the 8 runs of three consecutive edges
    assert len(cliques) == 8 and all(len(c) == 3 for c in cliques)


@given(small_graphs(max_n=10))
def test_maximal_cliques_match_brute_force(cg):
    assert maximal_cliques(cg) == brute_maximal_cliques(cg.vertices, edge_set(cg))


@given(topologies(max_edges=12))
def test_maximal_cliques_on_conflict_graphs(g):
    cg = conflict_graph(g, all_unicast(g))
    assert maximal_cliques(cg) == brute_maximal_cliques(cg.vertices, edge_set(cg))


def test_independence_examples():
    g4 = gen_cycle(4)
    assert independence_number(conflict_graph(g4, all_unicast(g4))) == 2
    assert independence_number(conflict_graph(gen_cycle(3), IC3)) == 1
    assert independence_number(abstract_graph(5, [])) == 5


@given(small_graphs(max_n=10))
def test_independence_matches_brute_force(cg):
    assert independence_number(cg) == brute_independence_number(cg.vertices, edge_set(cg))


def test_chromatic_examples():
    assert chromatic_number(abstract_graph(3, [(0, 1), (1, 2), (0, 2)])) == 3
    assert chromatic_number(abstract_graph(4, [])) == 1
    assert chromatic_number(cycle_graph(5)) == 3
    assert chromatic_number(cycle_graph(6)) == 2


@given(small_graphs(max_n=9))
def test_chromatic_matches_brute_force(cg):
    assert chromatic_number(cg) == brute_chromatic_number(cg.vertices, edge_set(cg))


@given(small_graphs(max_n=9))
def test_optimal_coloring_is_proper(cg):
    classes = analysis.optimal_coloring(cg)
    assert len(classes) == chromatic_number(cg)
    assert sorted(m for c in classes for m in c) == list(cg.vertices)
    assert all(cg.is_independent(c) for c in classes)


# --- perfection ------------------------------------------------------------------


def test_perfect_examples():
    assert is_perfect(abstract_graph(3, [(0, 1), (1, 2), (0, 2)]))
    assert not is_perfect(cycle_graph(5))
    assert is_perfect(cycle_graph(6))
    assert analysis.find_odd_hole(cycle_graph(7)) is not None


def test_odd_antihole_detected():
    c7 = cycle_graph(7)
    anti = abstract_graph(7, [(a, b) for a, b in combinations(range(7), 2) if (b - a) % 7 not in (1, 6)])
    assert analysis.find_odd_hole(anti) is None
    assert analysis.find_odd_antihole(anti) is not None
    assert not is_perfect(anti)
    assert is_perfect(abstract_graph(7, [])) and not is_perfect(c7)


def test_perfect_size_cap():
    with pytest.raises(SizeLimitError):
        is_perfect(abstract_graph(17, []))
    assert is_perfect(abstract_graph(17, []), max_size=20)


@given(small_graphs(max_n=7))
def test_perfect_matches_definition(cg):
    assert is_perfect(cg) == brute_is_perfect(cg.vertices, edge_set(cg))


@given(topologies(max_side=4, max_edges=12))
def test_chordal_conflict_graphs_are_perfect(g):
    if is_chordal(g):
        cg = conflict_graph(g, all_unicast(g))
        assert is_perfect(cg)
        assert chromatic_number(cg) == clique_number(cg)


def test_interference_channel_five_cycle_is_odd_hole():
    g = gen_cycle(5)
    ic = MessageSet(Message(k, k) for k in range(5))
    cg = conflict_graph(g, ic)
    assert not is_perfect(cg)
    assert independence_number(cg) == 2
