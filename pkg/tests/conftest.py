import pytest

from cliquebounds import enumerate_graphs


@pytest.fixture(scope="session")
def corpus():
    """All non-isomorphic graphs up to 7 vertices, keyed by vertex count."""
    return {n: enumerate_graphs(n) for n in range(1, 8)}


@pytest.fixture(scope="session")
def corpus6(corpus):
    return [g for n in range(1, 7) for g in corpus[n]]
