import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

CRITERIA = []


def record(number, name, ok, detail=""):
    CRITERIA.append((number, name, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, ok, detail in sorted(CRITERIA):
        terminalreporter.write_line(
            f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name}  {detail}")
