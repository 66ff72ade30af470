"""
Shared fixtures: the bundled algebras, loaded once per session.
"""

from pathlib import Path

import pytest

from src.algebra import load_algebra

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_path(name: str) -> str:
    return str(FIXTURES / name)


@pytest.fixture(scope="session")
def a2():
    return load_algebra(fixture_path("a2.alg"))


@pytest.fixture(scope="session")
def a3():
    return load_algebra(fixture_path("a3.alg"))


@pytest.fixture(scope="session")
def kalck():
    return load_algebra(fixture_path("kalck.alg"))


@pytest.fixture(scope="session")
def ss3():
    return load_algebra(fixture_path("ss3.alg"))


@pytest.fixture(scope="session")
def dual_numbers():
    return load_algebra(fixture_path("dual_numbers.sc"))


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES
