import pytest

from coverlattice import graph_from_edges, parse_graph

FIVE_VERTEX_TEXT = "1 2\n2 3\n3 4\n1 4\n4 5\n"
FOUR_CYCLE_TEXT = "1 2\n2 3\n3 4\n1 4\n"


@pytest.fixture
def five_vertex_graph():
    """Square 1-2-3-4 with a pendant vertex 5 hanging off 4."""
    return parse_graph(FIVE_VERTEX_TEXT)


@pytest.fixture
def four_cycle():
    return parse_graph(FOUR_CYCLE_TEXT)


@pytest.fixture
def single_edge():
    return parse_graph("1 2\n")


@pytest.fixture
def two_disjoint_edges():
    return parse_graph("1 2\n3 4\n")


def matching_graph(n: int):
    """n disjoint edges (1,2), (3,4), ..., on 2n vertices."""
    return graph_from_edges([(2 * i + 1, 2 * i + 2) for i in range(n)])
