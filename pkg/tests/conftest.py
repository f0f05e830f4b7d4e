import pytest

from cliquebound.corpus import (
    complete_graph,
    cycle_graph,
    named_small_graphs,
    octahedron,
    paw_graph,
)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def paw():
    return paw_graph()


@pytest.fixture
def octa():
    return octahedron()


@pytest.fixture
def named():
    return named_small_graphs()
