import pytest

ACCEPTANCE_RESULTS = []


@pytest.fixture
def record():
    """Record an acceptance verdict for the summary, then assert it."""

    def _record(criterion: str, ok: bool, detail: str) -> None:
        ACCEPTANCE_RESULTS.append((criterion, bool(ok), detail))
        assert ok, f"{criterion}: {detail}"

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {criterion}: {detail}")
