"""Deterministic synthetic check-in data for demos, fixtures, and verification.

Nothing here is random unless you pass a seeded ``random.Random``; all
generators produce stable output for stable inputs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from datetime import date, datetime, time, timedelta, timezone

from .ingest import TIME_FORMAT
from .sequences import DaySequence, SequenceDatabase, SequenceItem


@dataclass(frozen=True)
class Venue:
    """A synthetic venue: category plus fixed coordinates."""

    venue_id: str
    category_id: str
    category_name: str
    latitude: float
    longitude: float


# A small city block of venues, spread over distinct 0.01-degree cells.
DEFAULT_VENUES = (
    Venue("v_home", "c_home", "Home", 40.7020, -74.0120),
    Venue("v_coffee", "c_coffee", "Coffee", 40.7125, -74.0055),
    Venue("v_office", "c_office", "Office", 40.7230, -73.9980),
    Venue("v_eatery", "c_eatery", "Eatery", 40.7330, -73.9880),
    Venue("v_gym", "c_gym", "Gym", 40.7430, -73.9780),
    Venue("v_shops", "c_shops", "Shops", 40.7530, -73.9680),
)

VENUES_BY_CATEGORY = {v.category_name: v for v in DEFAULT_VENUES}


def checkin_line(
    user_id: str,
    venue: Venue,
    local_when: datetime,
    tz_offset_minutes: int = -240,
) -> str:
    """One foursquare-tsv line whose UTC time maps back to ``local_when``."""
    utc = (local_when - timedelta(minutes=tz_offset_minutes)).replace(tzinfo=timezone.utc)
    return "\t".join(
        (
            user_id,
            venue.venue_id,
            venue.category_id,
            venue.category_name,
            repr(venue.latitude),
            repr(venue.longitude),
            str(tz_offset_minutes),
            utc.strftime(TIME_FORMAT),
        )
    )


def daily_routine_lines(
    user_id: str,
    days: int,
    visits: list[tuple[time, str]],
    start: date = date(2012, 4, 1),
    tz_offset_minutes: int = -240,
) -> list[str]:
    """Check-in lines for a user repeating the same routine every day.

    ``visits`` is a list of (local time-of-day, category name) stops; every
    category must exist in :data:`DEFAULT_VENUES`.
    """
    lines = []
    for offset in range(days):
        day = start + timedelta(days=offset)
        for at, category in visits:
            venue = VENUES_BY_CATEGORY[category]
            lines.append(checkin_line(user_id, venue, datetime.combine(day, at), tz_offset_minutes))
    return lines


def two_user_fixture_lines() -> list[str]:
    """The standard two-user demo dataset: 60 dense days each, Apr-Jun 2012.

    Both users visit Home at 08:xx (a shared crowd cell at hour 8); their
    mornings diverge after that. Consecutive gaps stay under two hours so
    every day qualifies under the default density rules.
    """
    lines = daily_routine_lines(
        "u1",
        60,
        [(time(8, 0), "Home"), (time(9, 45), "Eatery"), (time(11, 15), "Shops")],
    )
    lines += daily_routine_lines(
        "u2",
        60,
        [(time(8, 5), "Home"), (time(9, 30), "Office"), (time(10, 50), "Gym")],
    )
    return lines


def planted_habit_database(
    user_id: str,
    habit: tuple[str, ...],
    days: int,
    probability: float,
    rng: random.Random,
    noise_categories: tuple[str, ...] = ("NoiseA", "NoiseB"),
    start: date = date(2012, 4, 1),
) -> SequenceDatabase:
    """A sequence database with a habit planted on a random subset of days.

    On each day, with the given probability, the habit's categories appear in
    order at consecutive hours; noise items from a disjoint alphabet are mixed
    around them, so the habit's empirical support equals the planted-day
    fraction. Days that get neither habit nor noise still carry one noise item
    so every day has a sequence.
    """
    if set(habit) & set(noise_categories):
        raise ValueError("noise categories must be disjoint from the habit")
    sequences = []
    for offset in range(days):
        day = start + timedelta(days=offset)
        items: list[SequenceItem] = []
        hour = 7
        if rng.random() < probability:
            for category in habit:
                items.append(SequenceItem(hour_slot=hour, category=category, cell_id=f"cell_{category}"))
                hour += 1
        for category in noise_categories:
            if rng.random() < 0.5:
                items.append(SequenceItem(hour_slot=hour, category=category, cell_id=f"cell_{category}"))
                hour += 1
        if not items:
            filler = noise_categories[offset % len(noise_categories)]
            items.append(SequenceItem(hour_slot=hour, category=filler, cell_id=f"cell_{filler}"))
        sequences.append(DaySequence(user_id=user_id, day_key=day, items=tuple(items)))
    return SequenceDatabase(user_id=user_id, sequences=tuple(sequences))


def random_database(
    rng: random.Random,
    user_id: str = "u",
    max_sequences: int = 6,
    max_length: int = 5,
    alphabet: tuple[str, ...] = ("A", "B", "C", "D"),
    start: date = date(2012, 4, 1),
) -> SequenceDatabase:
    """A small random sequence database within the brute-force oracle guards."""
    n = rng.randint(1, max_sequences)
    sequences = []
    for i in range(n):
        length = rng.randint(1, max_length)
        items = tuple(
            SequenceItem(hour_slot=h % 24, category=rng.choice(alphabet), cell_id="cell")
            for h in range(length)
        )
        sequences.append(DaySequence(user_id=user_id, day_key=start + timedelta(days=i), items=items))
    return SequenceDatabase(user_id=user_id, sequences=tuple(sequences))
