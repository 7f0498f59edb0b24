import pytest

from quandlehom.constructions import (alexander_poly, alexander_zn, dihedral,
                                      trivial)


@pytest.fixture(scope="session")
def dih3():
    return dihedral(3)


@pytest.fixture(scope="session")
def az52():
    return alexander_zn(5, 2)


@pytest.fixture(scope="session")
def az53():
    return alexander_zn(5, 3)


@pytest.fixture(scope="session")
def az43():
    """Alexander over Z_4 with t = 3: type 2, not connected, not faithful."""
    return alexander_zn(4, 3)


@pytest.fixture(scope="session")
def gf4():
    """Affine quandle over the field of 4 elements: type 3, connected."""
    return alexander_poly(2, (1, 1, 1), (0, 1))


@pytest.fixture(scope="session")
def oct_a():
    """Order-8 affine quandle over Z_2[t]/(t^3 + t^2 + 1)."""
    return alexander_poly(2, (1, 0, 1, 1), (0, 1))


@pytest.fixture(scope="session")
def oct_b():
    """Order-8 affine quandle over Z_2[t]/(t^3 + t + 1)."""
    return alexander_poly(2, (1, 1, 0, 1), (0, 1))


@pytest.fixture(scope="session")
def triv1():
    return trivial(1)


@pytest.fixture(scope="session")
def triv2():
    return trivial(2)
