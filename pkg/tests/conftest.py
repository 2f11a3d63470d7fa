import pytest

import mwis


@pytest.fixture
def p3a():
    """Path 1-2-3 with weights (2, 3, 2); optimum is the two endpoints, 4."""
    g = mwis.new_graph(3, [2, 3, 2])
    g.add_edge(0, 1)
    g.add_edge(1, 2)
    return g


@pytest.fixture
def s3():
    """Star with center weight 5 and three leaves of weight 1."""
    g = mwis.new_graph(4, [5, 1, 1, 1])
    for leaf in (1, 2, 3):
        g.add_edge(0, leaf)
    return g


@pytest.fixture
def k3u():
    """Triangle with weights (4, 2, 1); optimum is the single vertex 0."""
    g = mwis.new_graph(3, [4, 2, 1])
    g.add_edge(0, 1)
    g.add_edge(0, 2)
    g.add_edge(1, 2)
    return g


@pytest.fixture
def c4a():
    """Cycle a-b-c-d with weights (1, 2, 3, 2); optimum {a, c} = 4."""
    g = mwis.new_graph(4, [1, 2, 3, 2])
    g.add_edge(0, 1)
    g.add_edge(1, 2)
    g.add_edge(2, 3)
    g.add_edge(3, 0)
    return g
