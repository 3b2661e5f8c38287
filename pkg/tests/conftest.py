from pathlib import Path

import pytest

from lexminer import load_repository, mine

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def desk_repo():
    return load_repository(FIXTURES / "desk")


@pytest.fixture(scope="session")
def desk_index(desk_repo):
    return mine(desk_repo)


@pytest.fixture(scope="session")
def toy3_repo():
    return load_repository(FIXTURES / "toy3")


@pytest.fixture(scope="session")
def toy3_index(toy3_repo):
    return mine(toy3_repo)
