import numpy as np
import pytest

from artifact.formats import fixtures


@pytest.fixture(scope="session")
def fixture_records():
    return fixtures()


@pytest.fixture(scope="session")
def tour1(fixture_records):
    return fixture_records[0].arrangement


def random_perm(rng):
    return rng.permutation(64) + 1


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
