import random
from collections.abc import Iterator
from pathlib import Path

import pytest

from relmod.oracles import (
    BSOracle,
    ChainAmalgamOracle,
    CyclicAmalgamOracle,
    FreeOracle,
)
from relmod.presentations import X, Y, u

TEST_DATA = Path(__file__).resolve().parent.parent / "test_data"

SEED = 20240611


@pytest.fixture(autouse=True)
def _isolated_settings(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    # settings are cached per process
    from relmod.config import get_settings

    for name in ("LOG_LEVEL", "VERTEX_BUDGET", "SKEW_WINDOW", "JOBS"):
        monkeypatch.delenv(f"RELMOD_{name}", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


@pytest.fixture(scope="session")
def test_data() -> Path:
    return TEST_DATA


@pytest.fixture(scope="session")
def free() -> FreeOracle:
    return FreeOracle((X, Y))


@pytest.fixture(scope="session")
def bs23() -> BSOracle:
    return BSOracle(2, 3)


@pytest.fixture(scope="session")
def bs_z() -> BSOracle:
    """BS(2,3) reading z_i as x^i y^4 x^-i."""
    return BSOracle(2, 3, family="z", family_word=Y.word(4))


@pytest.fixture(scope="session")
def trefoil_oracle() -> CyclicAmalgamOracle:
    return CyclicAmalgamOracle(X, Y, 2, 3)


@pytest.fixture(scope="session")
def vertex_pair() -> CyclicAmalgamOracle:
    return CyclicAmalgamOracle(u(0), u(1), 3, 2)


@pytest.fixture(scope="session")
def chain01() -> ChainAmalgamOracle:
    return ChainAmalgamOracle("u", 3, 2, 0, 1)


@pytest.fixture(scope="session")
def chain04() -> ChainAmalgamOracle:
    return ChainAmalgamOracle("u", 3, 2, 0, 4)
