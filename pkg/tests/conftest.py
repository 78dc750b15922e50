import os

os.environ.setdefault("JKRES_VERIFY", "1")

import pytest  # noqa: E402

from jkres.arrangement import new_system  # noqa: E402


@pytest.fixture
def triangle():
    """e1, e2, e1+e2."""
    return new_system([[1, 0], [0, 1], [1, 1]])


@pytest.fixture
def paper():
    return new_system([[1, 0]] * 3 + [[0, 1]] * 3 + [[1, 1]] * 3)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
