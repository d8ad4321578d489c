import pytest

from ctfpolys import build_graph


@pytest.fixture(scope="session")
def p8():
    """The worked-example graph: triangle u,v,w with doubled u-v and v-w."""
    return build_graph(3, [(0, 2), (0, 1), (1, 2), (0, 1), (1, 2)])


@pytest.fixture(scope="session")
def k2():
    return build_graph(2, [(0, 1)])


@pytest.fixture(scope="session")
def l1():
    return build_graph(1, [(0, 0)])


@pytest.fixture(scope="session")
def c3():
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture(scope="session")
def digon_loop():
    return build_graph(2, [(0, 1), (0, 1), (0, 0)])


@pytest.fixture(scope="session")
def small_corpus():
    """Hand-picked graphs exercising loops, bridges, parallels, and
    disconnection."""
    return [
        build_graph(1, []),
        build_graph(2, []),
        build_graph(2, [(0, 1)]),
        build_graph(1, [(0, 0)]),
        build_graph(3, [(0, 1), (1, 2)]),
        build_graph(3, [(0, 1), (1, 2), (0, 2)]),
        build_graph(2, [(0, 1), (0, 1)]),
        build_graph(2, [(0, 1), (0, 1), (0, 0)]),
        build_graph(4, [(0, 1), (2, 3)]),
        build_graph(3, [(0, 1), (0, 1), (1, 2), (0, 0)]),
    ]
