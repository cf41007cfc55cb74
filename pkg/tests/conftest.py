from pathlib import Path

import pytest


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def pairs_dir(fixtures_dir) -> Path:
    return fixtures_dir / "pairs"
