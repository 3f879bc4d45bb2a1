import sys
from pathlib import Path

import pytest
from hypothesis import settings

settings.register_profile("repro", derandomize=True)
settings.load_profile("repro")

TESTS = Path(__file__).parent
FAKE_ADAPTER = [sys.executable, str(TESTS / "fake_adapter.py")]

_acceptance_lines: list[str] = []


def record_acceptance(number: int, name: str, passed: bool, detail: str = "") -> None:
    status = "PASS" if passed else "FAIL"
    line = f"[criterion {number:>2}] {status}  {name}"
    if detail:
        line += f"  ({detail})"
    _acceptance_lines.append(line)
    print(line)


@pytest.fixture
def accept():
    return record_acceptance


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines):
            terminalreporter.write_line(line)
