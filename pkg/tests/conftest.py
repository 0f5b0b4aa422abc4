import pytest

from macpresym.conventions import default_conventions

CRITERIA = {}


@pytest.fixture(scope="session")
def conv():
    return default_conventions()


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        terminalreporter.write_line(CRITERIA[num])
