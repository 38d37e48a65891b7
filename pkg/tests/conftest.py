import pytest
from hypothesis import settings

from chordal_tim.topology import TopologyGraph, gen_cycle

settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile("ci")


@pytest.fixture
def z_network():
    # S0 -> {D0, D1}, S1 -> {D1}
    return TopologyGraph.from_edges(2, 2, [(0, 0), (0, 1), (1, 1)])


@pytest.fixture
def matching():
    return TopologyGraph.from_edges(2, 2, [(0, 0), (1, 1)])


@pytest.fixture
def star():
    return TopologyGraph.from_edges(1, 2, [(0, 0), (0, 1)])


@pytest.fixture
def hexagon():
    # S'_1-{D'_3, D'_1}, S'_2-{D'_1, D'_2}, S'_3-{D'_2, D'_3}, 0-based
    return TopologyGraph.from_edges(3, 3, [(0, 2), (0, 0), (1, 0), (1, 1), (2, 1), (2, 2)])


@pytest.fixture(params=[3, 4, 5])
def long_cycle(request):
    return gen_cycle(request.param)
