import pytest

ACCEPTANCE_LOG: list[str] = []


@pytest.fixture
def gate():
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""

    def _gate(label: str, ok: bool, detail: str = "") -> None:
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        ACCEPTANCE_LOG.append(line)
        print(line)
        assert ok, line

    return _gate


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LOG:
            terminalreporter.write_line(line)
