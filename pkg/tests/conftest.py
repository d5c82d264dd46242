import pytest

from uniroot.generate import diamond, fork


@pytest.fixture
def dia():
    return diamond()


@pytest.fixture
def frk():
    return fork()


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda s: int(s.split()[1].rstrip("."))):
            terminalreporter.write_line(line)
