import pytest

from lukas import quotient


@pytest.fixture(scope="session")
def oracle_counts():
    """Class counts for every relation, lengths 0..12, computed once."""
    return {n: quotient.class_counts_all(n) for n in range(13)}
