import pytest

from wangtiling.reduction import Cm13Instance

_acceptance: dict[str, str] = {}


@pytest.fixture
def phi() -> Cm13Instance:
    """The three-variable worked example: (x1 x1 x3)(x2 x2 x3)(x1 x2 x3)."""
    return Cm13Instance(3, ((1, 1, 3), (2, 2, 3), (1, 2, 3)))


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        _acceptance[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        verdict = "PASS" if _acceptance[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
