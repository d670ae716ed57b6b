"""Shared test plumbing: acceptance criteria get one summary line each."""

_criteria = {}


def record_criterion(num, ok, detail=""):
    word = "PASS" if ok else "FAIL"
    _criteria[num] = f"criterion {num:2d}: {word}  {detail}"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        terminalreporter.write_line(_criteria[num])
