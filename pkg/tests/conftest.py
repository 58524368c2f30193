import pytest

from koszulkit import corpus
from koszulkit.resolutions import betti_numbers_k

_BETTI_CACHE = {}


@pytest.fixture(scope="session")
def betti_k():
    """Memoized betti_numbers_k so acceptance and unit tests share work."""

    def get(name: str, limit: int):
        key = (name, limit)
        if key not in _BETTI_CACHE:
            _BETTI_CACHE[key] = betti_numbers_k(corpus.get_ring(name), limit)
        return _BETTI_CACHE[key]

    return get
