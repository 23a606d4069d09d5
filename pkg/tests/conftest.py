import sys
from pathlib import Path

import pytest

from mismatch import GroupSpec, parse_word

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES = []


@pytest.fixture
def spec12():
    return GroupSpec((1, 2))


@pytest.fixture
def w12():
    spec = GroupSpec((1, 2))
    return lambda text: parse_word(spec, text)


@pytest.fixture
def record_acceptance():
    def record(number, title, passed, detail=""):
        status = "PASS" if passed else "FAIL"
        ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
