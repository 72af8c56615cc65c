import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from g3enum.gw_core import MemoStore, using_store  # noqa: E402


@pytest.fixture
def fresh_store():
    store = MemoStore()
    with using_store(store):
        yield store


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
