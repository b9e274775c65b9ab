import pytest

from residua import PolynomialRing


@pytest.fixture(scope="session")
def R3():
    return PolynomialRing(("x", "y", "z"))


@pytest.fixture(scope="session")
def R2():
    return PolynomialRing(("x", "y"))


@pytest.fixture(scope="session")
def R4():
    return PolynomialRing(("x", "y", "z", "w"))
