import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ghwlab.cyclotomy import cyclotomy_params  # noqa: E402
from ghwlab.field import build_field  # noqa: E402


@pytest.fixture
def params():
    def make(p, m, N=1):
        return cyclotomy_params(build_field(p, m), N)
    return make


_criteria = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or report.failed:
        num = int(report.nodeid.split("test_criterion_")[1][:2])
        ok = _criteria.get(num, True) and report.outcome == "passed"
        _criteria[num] = ok


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        terminalreporter.write_line(f"criterion {num}: {'PASS' if _criteria[num] else 'FAIL'}")
