import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record a named acceptance check; the line is printed in the summary."""

    def check(name, ok, detail=""):
        _ACCEPTANCE.append((name, bool(ok), detail))
        assert ok, f"{name}: {detail}"

    return check


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        terminalreporter.write_line(f"{line}  ({detail})" if detail else line)
