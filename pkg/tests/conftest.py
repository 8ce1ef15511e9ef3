"""Pytest configuration and shared fixtures."""

import sys
from pathlib import Path

import pytest

# Make the package importable without installing it
sys.path.insert(0, str(Path(__file__).parent.parent))

from loopsmith.core.bose import BoseParams, bose_loop  # noqa: E402
from loopsmith.core.catalog import by_name  # noqa: E402
from loopsmith.core.loop import LoopTable  # noqa: E402
from loopsmith.formats import parse_loop  # noqa: E402

DATA_DIR = Path(__file__).parent / "data"

NON_IP_ROWS = [
    [1, 2, 3, 4, 5],
    [2, 1, 4, 5, 3],
    [3, 5, 1, 2, 4],
    [4, 3, 5, 1, 2],
    [5, 4, 2, 3, 1],
]

# Loops every property suite runs over
CORPUS = ["order10", "c2", "c3", "s3", "klein", *(f"bose{n}" for n in range(3, 16, 2))]


def load_loop(name: str) -> LoopTable:
    """Resolve a corpus name to a loop."""
    if name == "order10":
        return parse_loop((DATA_DIR / "order10.txt").read_text(encoding="utf-8"))
    if name.startswith("bose"):
        return bose_loop(BoseParams(n=int(name[4:])))
    return by_name(name)


@pytest.fixture(scope="session")
def test_data_dir():
    """Return the path to test data directory."""
    return DATA_DIR


@pytest.fixture(scope="session")
def order10():
    """The Steiner loop of order 10 from the data directory."""
    return load_loop("order10")


@pytest.fixture(scope="session")
def c2():
    return by_name("c2")


@pytest.fixture(scope="session")
def c3():
    return by_name("c3")


@pytest.fixture(scope="session")
def s3():
    return by_name("s3")


@pytest.fixture(scope="session")
def klein():
    return by_name("klein")


@pytest.fixture(scope="session")
def non_ip_loop():
    """Order 5, exponent 2, neither commutative nor IP."""
    from loopsmith.core.loop import validate_table

    return validate_table(NON_IP_ROWS)


@pytest.fixture(scope="session", params=CORPUS)
def corpus_loop(request):
    """Each loop of the property-suite corpus in turn."""
    return load_loop(request.param)


@pytest.fixture(autouse=True)
def setup_test_env(monkeypatch):
    """Pin the environment so scans are sequential and quiet."""
    for name in ("LOOPSMITH_PARALLEL_MIN_ORDER", "LOOPSMITH_CHUNK_ROWS"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("LOOPSMITH_JOBS", "1")
    monkeypatch.setenv("LOOPSMITH_LOG_LEVEL", "WARNING")


def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line("markers", "unit: mark test as a unit test")
    config.addinivalue_line("markers", "integration: mark test as an integration test")
    config.addinivalue_line("markers", "slow: mark test as slow running")
