"""Shared fixtures and the acceptance-criterion result reporter."""

from __future__ import annotations

from datetime import date

import pytest

from crowdmob import DaySequence, SequenceDatabase, SequenceItem

_ACCEPTANCE_RESULTS: dict[str, str] = {}


def pytest_runtest_logreport(report):
    # skipif triggers at setup, real outcomes at call
    if report.when == "call" or (report.when == "setup" and report.outcome == "skipped"):
        marker = getattr(report, "_acceptance_label", None)
        if marker:
            _ACCEPTANCE_RESULTS[marker] = report.outcome


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker and marker.args:
        report._acceptance_label = marker.args[0]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in _ACCEPTANCE_RESULTS.items():
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}.get(outcome, outcome.upper())
        terminalreporter.write_line(f"[{status}] {label}")


def make_database(user_id: str, *symbol_sequences: list[str]) -> SequenceDatabase:
    """Build a SequenceDatabase from bare category lists, one per day."""
    days = []
    for i, symbols in enumerate(symbol_sequences):
        items = tuple(
            SequenceItem(hour_slot=j % 24, category=c, cell_id="cell") for j, c in enumerate(symbols)
        )
        days.append(DaySequence(user_id=user_id, day_key=date(2012, 4, 1) + _days(i), items=items))
    return SequenceDatabase(user_id=user_id, sequences=tuple(days))


def _days(n):
    from datetime import timedelta

    return timedelta(days=n)


@pytest.fixture
def esg_database() -> SequenceDatabase:
    """The worked three-sequence example used across miner and graph tests."""
    return make_database("u", ["E", "S", "G"], ["E", "G"], ["S", "E", "G"])
