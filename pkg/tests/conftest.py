import pytest

from hookcert.primes import get_tables


@pytest.fixture(scope="session")
def tables():
    # one shared sieve; big enough for every test including the gap scans
    return get_tables()
