import pytest

from parity_backdoors.program import parse_program

RUNNING_EXAMPLE = """\
b :- a.
d :- a.
b :- not c.
a :- d, not c.
a | c :- d, not b.
d.
"""

ACCEPTANCE_LINES: list = []


@pytest.fixture
def running_example():
    return parse_program(RUNNING_EXAMPLE)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(line)
