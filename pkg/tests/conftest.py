import pytest

from polyclique.graph import complete_graph, from_edge_list, path_graph


def desk():
    # 4 vertices, degrees (2,3,3,2); triangles {1,2,3} and {2,3,4}; 1 and 4 non-adjacent
    return from_edge_list(4, [(1, 2), (2, 3), (3, 4), (1, 3), (2, 4)])


@pytest.fixture
def desk_graph():
    return desk()


@pytest.fixture
def triangle():
    return complete_graph(3)


@pytest.fixture
def p3():
    return path_graph(3)
