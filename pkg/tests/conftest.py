import sys

import pytest

from schubtorus.perm import parse_permutation


def P(text):
    return parse_permutation(text)


@pytest.fixture
def perm():
    return P


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.REPORT:
        terminalreporter.section("acceptance criteria")
        for line in mod.REPORT:
            terminalreporter.write_line(line)
