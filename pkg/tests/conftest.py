"""Replays acceptance verdict lines after the test summary.

pytest's default capture is at file descriptor level, so even writes to
sys.__stdout__ from passing tests vanish from the report. Verdicts are
therefore recorded here and printed once the run is over.
"""

_verdicts: list[str] = []


def record_verdict(line: str) -> None:
    _verdicts.append(line)


def pytest_terminal_summary(terminalreporter) -> None:
    if _verdicts:
        terminalreporter.section("acceptance verdicts")
        for line in _verdicts:
            terminalreporter.write_line(line)
