import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

CRITERIA = {}


def record(number, ok, detail=""):
    CRITERIA[number] = (ok, detail)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'}" + (f"  ({detail})" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        ok, detail = CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else ""))
