import pytest

from desing.fixtures import ex61_ideal, ex62_ideal

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def ex61():
    return ex61_ideal()


@pytest.fixture(scope="session")
def ex62():
    return ex62_ideal()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
