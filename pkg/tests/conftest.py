import pytest

from jumpgraph.catalog import generate


@pytest.fixture(scope="session")
def catalog6():
    return generate(6)


@pytest.fixture(scope="session")
def catalog7():
    return generate(7)
