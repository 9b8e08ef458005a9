import pytest

from primeforms.conjectures import RunContext
from primeforms.sieve import build

TEST_BOUND = 2_000_000


@pytest.fixture(scope="session")
def table():
    return build(TEST_BOUND)


@pytest.fixture(scope="session")
def ctx(table):
    return RunContext(table)
