import pytest

from movdom import family, join, make_graph


@pytest.fixture
def p3():
    return family("path", 3)


@pytest.fixture
def p4():
    return family("path", 4)


@pytest.fixture
def c4():
    return family("cycle", 4)


@pytest.fixture
def k2():
    return family("complete", 2)


@pytest.fixture
def k4():
    return family("complete", 4)


@pytest.fixture
def fan4(p3):
    """join(P3, K1): path 0-1-2 plus hub vertex 3."""
    return join(p3, family("complete", 1))
