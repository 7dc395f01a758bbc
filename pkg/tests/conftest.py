import pytest

from antimagic.graph import Graph


def k4_plus_pendant() -> Graph:
    """Clique 0..3, pendant vertex 4 hanging off 0."""
    return Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)])


def paw() -> Graph:
    """Triangle 0,1,2 with pendant vertex 3 on 0."""
    return Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


@pytest.fixture
def k4p() -> Graph:
    return k4_plus_pendant()


@pytest.fixture
def paw_graph() -> Graph:
    return paw()
