"""Check-in parsing, local-time conversion, cohort filtering, and dataset stats.

The canonical input format is ``foursquare-tsv``: eight tab-separated columns
per line (user id, venue id, category id, category name, latitude, longitude,
timezone offset in minutes, UTC timestamp like ``Tue Apr 03 18:00:09 +0000
2012``), UTF-8, LF or CRLF line endings.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from datetime import date, datetime, timedelta, timezone
from typing import IO, Iterable, Mapping

from . import grid
from .errors import DatasetFormatError

FOURSQUARE_TSV = "foursquare-tsv"
TIME_FORMAT = "%a %b %d %H:%M:%S %z %Y"

# Share of malformed lines above which parsing aborts instead of skipping.
MALFORMED_ABORT_RATIO = 0.10

DEFAULT_MIN_DAYS = 50
DEFAULT_MAX_GAP = timedelta(hours=2)
DEFAULT_MIN_EVENTS_PER_DAY = 2


@dataclass(frozen=True)
class CheckIn:
    """One raw geo-tagged record."""

    user_id: str
    venue_id: str
    category_id: str
    category_name: str
    latitude: float
    longitude: float
    tz_offset_minutes: int
    utc_time: datetime  # timezone-aware, normalized to UTC


@dataclass(frozen=True)
class LocalEvent:
    """A check-in shifted to venue-local wall-clock time and binned to a cell."""

    user_id: str
    category: str
    cell_id: str
    local_time: datetime  # naive local wall-clock time
    day_key: date
    hour_slot: int


@dataclass(frozen=True)
class DatasetStats:
    total_records: int
    user_count: int
    records_per_user_mean: float | None
    records_per_user_median: float | None
    date_range: tuple[date, date] | None


@dataclass
class ParseResult:
    """Parsed records plus a report of skipped lines."""

    records: list[CheckIn]
    malformed: list[tuple[int, str]]  # (1-based line number, reason)
    total_lines: int  # non-blank lines seen

    @property
    def malformed_count(self) -> int:
        return len(self.malformed)


def _parse_line(line: str) -> CheckIn:
    fields = line.split("\t")
    if len(fields) != 8:
        raise ValueError(f"expected 8 tab-separated fields, got {len(fields)}")
    if any(f.strip() == "" for f in fields):
        raise ValueError("empty field")
    user_id, venue_id, category_id, category_name, lat_s, lon_s, tz_s, time_s = fields
    latitude = float(lat_s)
    longitude = float(lon_s)
    grid._check_coordinates(latitude, longitude)
    tz_offset = int(tz_s)
    utc_time = datetime.strptime(time_s, TIME_FORMAT).astimezone(timezone.utc)
    return CheckIn(
        user_id=user_id,
        venue_id=venue_id,
        category_id=category_id,
        category_name=category_name,
        latitude=latitude,
        longitude=longitude,
        tz_offset_minutes=tz_offset,
        utc_time=utc_time,
    )


def parse_checkins(stream: IO[bytes] | IO[str] | bytes | str, fmt: str = FOURSQUARE_TSV) -> ParseResult:
    """Parse a check-in stream into records, input order preserved.

    Malformed lines are skipped and reported in the result; blank lines are
    ignored. Raises :class:`DatasetFormatError` when more than
    ``MALFORMED_ABORT_RATIO`` of the non-blank lines are malformed, naming the
    first offending line.
    """
    if fmt != FOURSQUARE_TSV:
        raise ValueError(f"unknown dataset format {fmt!r}")
    if isinstance(stream, (bytes, str)):
        content = stream
    else:
        content = stream.read()
    if isinstance(content, bytes):
        content = content.decode("utf-8")

    records: list[CheckIn] = []
    malformed: list[tuple[int, str]] = []
    total = 0
    for lineno, line in enumerate(content.splitlines(), start=1):
        if not line.strip():
            continue
        total += 1
        try:
            records.append(_parse_line(line))
        except ValueError as exc:
            malformed.append((lineno, str(exc)))

    if total and len(malformed) / total > MALFORMED_ABORT_RATIO:
        first = malformed[0][0]
        raise DatasetFormatError(
            f"{len(malformed)} of {total} lines malformed (>{MALFORMED_ABORT_RATIO:.0%}), "
            f"first offending line: {first}",
            line_number=first,
        )
    return ParseResult(records=records, malformed=malformed, total_lines=total)


def serialize_checkin(checkin: CheckIn) -> str:
    """Render a record back to its foursquare-tsv line (parse round-trips)."""
    return "\t".join(
        (
            checkin.user_id,
            checkin.venue_id,
            checkin.category_id,
            checkin.category_name,
            repr(checkin.latitude),
            repr(checkin.longitude),
            str(checkin.tz_offset_minutes),
            checkin.utc_time.strftime(TIME_FORMAT),
        )
    )


def serialize_checkins(checkins: Iterable[CheckIn]) -> str:
    return "".join(serialize_checkin(c) + "\n" for c in checkins)


def build_category_map(checkins: Iterable[CheckIn]) -> dict[str, str]:
    """Map each category id to its canonical label (first-seen name, trimmed)."""
    mapping: dict[str, str] = {}
    for c in checkins:
        mapping.setdefault(c.category_id, c.category_name.strip())
    return mapping


def local_time_of(checkin: CheckIn) -> datetime:
    """Venue-local wall-clock time: UTC shifted by the record's own offset."""
    shifted = checkin.utc_time + timedelta(minutes=checkin.tz_offset_minutes)
    return shifted.replace(tzinfo=None)


def to_local_events(
    checkins: Iterable[CheckIn],
    categories: Mapping[str, str] | None = None,
    precision: float = grid.DEFAULT_PRECISION,
    slot_minutes: int = 60,
) -> list[LocalEvent]:
    """Convert records to local events with canonical categories and cell ids.

    ``categories`` maps category ids to canonical labels; ids it does not
    cover fall back to the record's own category name. ``slot_minutes`` sets
    the time-slot width (60 gives hour-of-day slots 0..23).
    """
    checkins = list(checkins)
    if categories is None:
        categories = build_category_map(checkins)
    if slot_minutes <= 0 or 1440 % slot_minutes:
        raise ValueError(f"slot_minutes must divide a day, got {slot_minutes}")
    events = []
    for c in checkins:
        local = local_time_of(c)
        events.append(
            LocalEvent(
                user_id=c.user_id,
                category=categories.get(c.category_id, c.category_name.strip()),
                cell_id=grid.assign_cell(c.latitude, c.longitude, precision),
                local_time=local,
                day_key=local.date(),
                hour_slot=(local.hour * 60 + local.minute) // slot_minutes,
            )
        )
    return events


def filter_window(events: Iterable[LocalEvent], start: date, end: date) -> list[LocalEvent]:
    """Keep exactly the events with ``start <= day_key <= end``, order preserved."""
    if start > end:
        raise ValueError(f"window start {start} is after end {end}")
    return [e for e in events if start <= e.day_key <= end]


@dataclass(frozen=True)
class QualificationResult:
    """Per-user qualifying days under the density rules used to compute them.

    A day qualifies when it has at least ``min_events_per_day`` events and
    every gap between consecutive events that day is strictly under
    ``max_gap``. A user qualifies with strictly more than ``min_days``
    qualifying days.
    """

    qualifying_days: dict[str, frozenset[date]]
    min_days: int
    max_gap: timedelta
    min_events_per_day: int

    @property
    def qualified(self) -> set[str]:
        return {u for u, days in self.qualifying_days.items() if len(days) > self.min_days}

    @property
    def day_counts(self) -> dict[str, int]:
        return {u: len(days) for u, days in self.qualifying_days.items()}


def select_qualifying_users(
    events: Iterable[LocalEvent],
    min_days: int = DEFAULT_MIN_DAYS,
    max_gap: timedelta = DEFAULT_MAX_GAP,
    min_events_per_day: int = DEFAULT_MIN_EVENTS_PER_DAY,
) -> QualificationResult:
    """Apply the density filters and report every user's qualifying days."""
    per_day: dict[str, dict[date, list[datetime]]] = {}
    for e in events:
        per_day.setdefault(e.user_id, {}).setdefault(e.day_key, []).append(e.local_time)

    qualifying: dict[str, frozenset[date]] = {}
    for user, days in per_day.items():
        good = set()
        for day, times in days.items():
            if len(times) < min_events_per_day:
                continue
            times = sorted(times)
            if all(b - a < max_gap for a, b in zip(times, times[1:])):
                good.add(day)
        qualifying[user] = frozenset(good)
    return QualificationResult(
        qualifying_days=qualifying,
        min_days=min_days,
        max_gap=max_gap,
        min_events_per_day=min_events_per_day,
    )


def dataset_stats(records: Iterable[CheckIn] | Iterable[LocalEvent]) -> DatasetStats:
    """Per-user record-count mean/median and the local-date range."""
    counts: dict[str, int] = {}
    dates: list[date] = []
    total = 0
    for r in records:
        total += 1
        counts[r.user_id] = counts.get(r.user_id, 0) + 1
        if isinstance(r, LocalEvent):
            dates.append(r.day_key)
        else:
            dates.append(local_time_of(r).date())
    if not total:
        return DatasetStats(0, 0, None, None, None)
    per_user = list(counts.values())
    return DatasetStats(
        total_records=total,
        user_count=len(counts),
        records_per_user_mean=statistics.fmean(per_user),
        records_per_user_median=float(statistics.median(per_user)),
        date_range=(min(dates), max(dates)),
    )
