import pytest

from dyckgen import oracle


@pytest.fixture(scope="session")
def oracle_words():
    """Memoized access to the brute-force word lists, keyed by half-length."""
    cache: dict[int, list[int]] = {}

    def get(n: int) -> list[int]:
        if n not in cache:
            cache[n] = oracle.brute_force_all(n)
        return cache[n]

    return get
