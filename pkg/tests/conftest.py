import os
from pathlib import Path

import pytest

from siegelcount.census.store import CensusStore, default_data_dir
from siegelcount.motives import Tracer


def pytest_collection_modifyitems(config, items):
    if os.environ.get("SIEGELCOUNT_LONGRUN") == "1":
        return
    skip = pytest.mark.skip(reason="set SIEGELCOUNT_LONGRUN=1 to run")
    for item in items:
        if "longrun" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def store() -> CensusStore:
    """Censuses shared across the session; missing ones are built on first use."""
    root = Path(os.environ.get("SIEGELCOUNT_DATA") or default_data_dir())
    root.mkdir(parents=True, exist_ok=True)
    return CensusStore(root)


@pytest.fixture(scope="session")
def tracer(store) -> Tracer:
    return Tracer(store)


def pytest_terminal_summary(terminalreporter):
    try:
        from tests.test_acceptance import RESULTS
    except ImportError:
        import sys
        RESULTS = getattr(sys.modules.get("test_acceptance"), "RESULTS", {})
    if RESULTS:
        terminalreporter.section("acceptance")
        for n in sorted(RESULTS):
            terminalreporter.write_line(f"AC{n} {'PASS' if RESULTS[n] else 'FAIL'}")
