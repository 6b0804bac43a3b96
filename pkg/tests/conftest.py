import pytest

from apportion import datasets


@pytest.fixture(scope="session")
def eu27():
    return datasets.eu27()


@pytest.fixture(scope="session")
def eu28():
    return datasets.eu28()


@pytest.fixture(scope="session")
def eu29():
    return datasets.eu29()
