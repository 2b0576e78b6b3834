import pytest

from maxarc.constants import PAPER_EXAMPLE_MODULUS
from maxarc.gf2m import build_field


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the full acceptance sweeps")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full parameter sweeps, skipped unless --runslow is given")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def gf4():
    return build_field(2)


@pytest.fixture(scope="session")
def gf8():
    return build_field(3)


@pytest.fixture(scope="session")
def gf16():
    return build_field(4)


@pytest.fixture(scope="session")
def gf32():
    return build_field(5, PAPER_EXAMPLE_MODULUS)


@pytest.fixture(autouse=True)
def clean_budget_env(monkeypatch):
    monkeypatch.delenv("MAXARC_BUDGET", raising=False)
