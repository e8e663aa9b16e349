"""Sequence database construction: ordering, collapsing, serialization."""

from datetime import date, time

import pytest

from crowdmob import (
    EmptyDatabaseError,
    build_sequence_database,
    parse_checkins,
    serialize_database,
    to_local_events,
)
from crowdmob.synthetic import daily_routine_lines


def events_for(user, day_visits, start=date(2012, 4, 1)):
    """day_visits: list of per-day [(time, category), ...] lists."""
    lines = []
    for offset, visits in enumerate(day_visits):
        day = date(start.year, start.month, start.day + offset)
        lines += daily_routine_lines(user, 1, visits, start=day)
    return to_local_events(parse_checkins("\n".join(lines)).records)


def test_sort_and_collapse():
    events = events_for(
        "u1",
        [[(time(12, 10), "Eatery"), (time(12, 40), "Eatery"), (time(13, 20), "Shops")]],
    )
    db = build_sequence_database(events, "u1", {date(2012, 4, 1)})
    (seq,) = db.sequences
    assert [(it.hour_slot, it.category) for it in seq.items] == [(12, "Eatery"), (13, "Shops")]


def test_single_event_day():
    events = events_for("u1", [[(time(9, 0), "Home")]])
    db = build_sequence_database(events, "u1", {date(2012, 4, 1)})
    assert len(db.sequences) == 1
    assert len(db.sequences[0].items) == 1


def test_two_qualifying_days_two_sequences():
    visits = [(time(9, 0), "Home"), (time(10, 0), "Eatery")]
    events = events_for("u1", [visits, visits])
    db = build_sequence_database(events, "u1", {date(2012, 4, 1), date(2012, 4, 2)})
    assert len(db.sequences) == 2
    assert len({seq.day_key for seq in db.sequences}) == 2


def test_days_outside_qualifying_set_are_dropped():
    visits = [(time(9, 0), "Home")]
    events = events_for("u1", [visits, visits, visits])
    db = build_sequence_database(events, "u1", {date(2012, 4, 2)})
    assert [seq.day_key for seq in db.sequences] == [date(2012, 4, 2)]


def test_no_qualifying_days_raises():
    events = events_for("u1", [[(time(9, 0), "Home")]])
    with pytest.raises(EmptyDatabaseError):
        build_sequence_database(events, "u1", set())


def test_items_ordered_by_local_time():
    events = events_for(
        "u1",
        [[(time(15, 0), "Gym"), (time(8, 0), "Home"), (time(12, 0), "Eatery")]],
    )
    db = build_sequence_database(events, "u1", {date(2012, 4, 1)})
    hours = [it.hour_slot for it in db.sequences[0].items]
    assert hours == sorted(hours)


def test_build_is_idempotent():
    visits = [(time(12, 10), "Eatery"), (time(12, 40), "Eatery"), (time(13, 20), "Shops")]
    events = events_for("u1", [visits])
    days = {date(2012, 4, 1)}
    assert build_sequence_database(events, "u1", days) == build_sequence_database(events, "u1", days)


def test_sequence_length_bounded_by_event_count():
    visits = [(time(12, 0), "Eatery"), (time(12, 30), "Eatery"), (time(12, 50), "Eatery")]
    events = events_for("u1", [visits])
    db = build_sequence_database(events, "u1", {date(2012, 4, 1)})
    assert len(db.sequences[0].items) <= 3


def test_serialize_golden():
    events = events_for(
        "u1",
        [[(time(12, 10), "Eatery"), (time(13, 20), "Shops")]],
    )
    db = build_sequence_database(events, "u1", {date(2012, 4, 1)})
    expected = "2012-04-01\t12:Eatery@0.01_4073_-7399 13:Shops@0.01_4075_-7397\n"
    assert serialize_database(db) == expected
