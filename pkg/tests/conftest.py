import pytest

from ordalg import terms_to_depth


@pytest.fixture(scope="session")
def depth2_terms():
    return terms_to_depth(2)
