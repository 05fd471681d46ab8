import pytest

from _helpers import mixed_corpus, named_graphs


@pytest.fixture(scope="session")
def named():
    return named_graphs()


@pytest.fixture(scope="session")
def corpus():
    """Named small graphs plus a deterministic seeded G(n, p) sample, n <= 10."""
    return mixed_corpus()
