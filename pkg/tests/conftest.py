import pytest

from nearvec import build_nearfield


@pytest.fixture(scope="session")
def dn32():
    return build_nearfield(3, 2)


@pytest.fixture(scope="session")
def dn52():
    return build_nearfield(5, 2)
