import pytest

from eicartan.cartan import CartanTriple
from eicartan.ffield import make_field
from eicartan.io import fixture_names, load_fixture

from oracles import BisetOracle

FIXTURES = fixture_names()


@pytest.fixture(scope="session")
def g2():
    return CartanTriple.create([[2, -1], [-3, 2]], (3, 1))


@pytest.fixture(scope="session")
def c2():
    return CartanTriple.create([[2, -2], [-1, 2]], (1, 2))


@pytest.fixture(scope="session")
def b2():
    return CartanTriple.create([[2, -1], [-2, 2]], (2, 1))


@pytest.fixture(scope="session")
def a11():
    return CartanTriple.create([[2, -1], [-4, 2]], (4, 1))


@pytest.fixture(scope="session")
def f4():
    return make_field(2, 3)


@pytest.fixture(params=FIXTURES)
def fixture_triple(request):
    return load_fixture(request.param)


@pytest.fixture
def oracle_factory():
    return BisetOracle
