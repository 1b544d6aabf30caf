import sys
from pathlib import Path

import pytest
from hypothesis import settings

from goodsg import GoodSemigroup, fileformat

HERE = Path(__file__).parent
FIXTURES = HERE / "fixtures"
sys.path.insert(0, str(HERE))

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def S27():
    return GoodSemigroup(fileformat.read(str(FIXTURES / "fixture27.gsg")))


@pytest.fixture(scope="session")
def S26():
    return GoodSemigroup(fileformat.read(str(FIXTURES / "fixture26.gsg")))


@pytest.fixture(scope="session")
def P3():
    return GoodSemigroup(fileformat.read(str(FIXTURES / "product3.gsg")))
