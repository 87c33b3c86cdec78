import functools

import pytest

from quasihopf import corpus


@functools.lru_cache(maxsize=None)
def entry(name: str) -> dict:
    """Corpus entry with derived structures, built once per session."""
    return corpus.structures(name, check=False)


@pytest.fixture(scope="session")
def qz2():
    return entry("QZ2")


@pytest.fixture(scope="session")
def h2():
    return entry("H2")


@pytest.fixture(scope="session")
def sw4():
    return entry("Sweedler4")


@pytest.fixture(scope="session")
def fp52():
    return entry("FpZn(5,2)")


@pytest.fixture(scope="session")
def fp73():
    return entry("FpZn(7,3)")
