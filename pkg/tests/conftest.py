import pytest

from kneserlab.graphs import Family, build


@pytest.fixture(scope="session")
def odd3():
    return build(Family.odd(3))


@pytest.fixture(scope="session")
def odd4():
    return build(Family.odd(4))


@pytest.fixture(scope="session")
def odd5():
    return build(Family.odd(5))


@pytest.fixture(scope="session")
def middle2():
    return build(Family.middle_levels(2))


@pytest.fixture(scope="session")
def middle3():
    return build(Family.middle_levels(3))


@pytest.fixture(scope="session")
def middle4():
    return build(Family.middle_levels(4))
