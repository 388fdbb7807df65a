import pytest

from sturmian.cf import SturmCF

# slopes used throughout: Fibonacci, the worked [0;2,(3)] example, √2 - 1,
# and one Sturm number with a longer period
CRITERION_CFS = ["0;2,(1)", "0;2,(3)", "0;(2)", "0;3,(2,3)"]

_acceptance_report: list[tuple[str, bool, str]] = []


@pytest.fixture(params=CRITERION_CFS)
def sturm_cf(request) -> SturmCF:
    return SturmCF.parse(request.param)


@pytest.fixture
def report():
    """Record one acceptance line: report(criterion, passed, detail)."""

    def record(name: str, passed: bool, detail: str = "") -> None:
        _acceptance_report.append((name, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_report:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _acceptance_report:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {name}" + (f" -- {detail}" if detail else ""))
