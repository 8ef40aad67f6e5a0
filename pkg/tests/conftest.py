"""
Pytest conftest for pylyndon package testing.
"""
import random
from pathlib import Path
from typing import Iterable

import pytest

from pylyndon.numth import SieveTables, sieve_upto
from pylyndon.settings import Settings, configure

TESTS_SETTINGS = Path(__file__).parent / "settings.yaml"


def pytest_addoption(parser: pytest.Parser) -> None:
    """Add options to select the settings file and the random seed."""
    parser.addoption("--settings", action="store", default=str(TESTS_SETTINGS), help="settings YAML file")
    parser.addoption("--seed", action="store", type=int, default=2024, help="seed of the random test points")


@pytest.fixture(scope="session", autouse=True)
def settings(request: pytest.FixtureRequest) -> Iterable[Settings]:
    """Yield the process-wide settings loaded from the tests settings file."""
    path = request.config.getoption("--settings")
    yield configure(path)
    configure(None)


@pytest.fixture
def rng(request: pytest.FixtureRequest) -> random.Random:
    """Yield a seeded random generator."""
    return random.Random(request.config.getoption("--seed"))


@pytest.fixture(scope="session")
def sieve(settings: Settings) -> SieveTables:
    """Yield shared Möbius and totient tables up to the property test limit."""
    return sieve_upto(settings.limits.property_limit)
