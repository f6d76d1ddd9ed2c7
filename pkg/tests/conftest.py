import pytest

from dimfock.scalars import make_point

STANDARD_SEEDS = (101, 198, 295)


@pytest.fixture(scope="session")
def point2():
    return make_point(101, 2, 4)


@pytest.fixture(scope="session")
def point1():
    return make_point(101, 1, 4)


@pytest.fixture(scope="session")
def point3():
    return make_point(101, 3, 4)


@pytest.fixture(scope="session")
def points2():
    return [make_point(s, 2, 4) for s in STANDARD_SEEDS]


@pytest.fixture(scope="session")
def points3():
    return [make_point(s, 3, 4) for s in STANDARD_SEEDS]


@pytest.fixture(scope="session")
def sym_point2():
    return make_point(101, 2, 3, "q")
