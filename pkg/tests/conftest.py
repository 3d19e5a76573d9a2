import re

_OUTCOMES: dict[int, str] = {}
_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_")


def pytest_runtest_logreport(report):
    match = _CRITERION.search(report.nodeid)
    if not match:
        return
    k = int(match.group(1))
    if report.when == "call" or report.failed:
        if report.failed:
            _OUTCOMES[k] = "FAIL"
        else:
            _OUTCOMES.setdefault(k, "PASS" if report.passed else report.outcome.upper())


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for k in sorted(_OUTCOMES):
        terminalreporter.write_line(f"criterion {k:2d} {CRITERIA[k]}: {_OUTCOMES[k]}")
