import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ternary_leibniz import catalog  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def catalog_params():
    return [pytest.param(A, id=A.name) for _, A in catalog.instances()]
