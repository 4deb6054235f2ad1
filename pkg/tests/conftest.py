import re
import sys
from pathlib import Path

# make the test-only oracles importable as a plain module
sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA: dict[int, bool] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        num = int(m.group(1))
        _CRITERIA[num] = _CRITERIA.get(num, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion that ran."""
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if _CRITERIA[num] else 'FAIL'}")
