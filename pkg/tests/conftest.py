import pytest

_criteria = []


@pytest.fixture
def criterion():
    """Record ``(label, ok, detail)`` for the acceptance summary, then assert."""

    def record(label, ok, detail=""):
        _criteria.append((label, bool(ok), detail))
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _criteria:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
