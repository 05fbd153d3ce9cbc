import pytest

from chiral_primes.enumerator import Direction, enumerate_all


@pytest.fixture(scope="session")
def right_enum():
    return enumerate_all(Direction.RIGHT)


@pytest.fixture(scope="session")
def left_enum():
    return enumerate_all(Direction.LEFT)
