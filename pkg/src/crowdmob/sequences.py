"""Per-day ordered item sequences, the representation the pattern miner consumes."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date
from typing import Callable, Hashable, Iterable

from .errors import EmptyDatabaseError
from .ingest import LocalEvent


@dataclass(frozen=True)
class SequenceItem:
    hour_slot: int
    category: str
    cell_id: str


@dataclass(frozen=True)
class DaySequence:
    user_id: str
    day_key: date
    items: tuple[SequenceItem, ...]


@dataclass(frozen=True)
class SequenceDatabase:
    user_id: str
    sequences: tuple[DaySequence, ...]

    def __len__(self) -> int:
        return len(self.sequences)


def _default_collapse_key(item: SequenceItem) -> Hashable:
    return (item.hour_slot, item.category)


def build_sequence_database(
    events: Iterable[LocalEvent],
    user_id: str,
    qualifying_days: Iterable[date],
    collapse_key: Callable[[SequenceItem], Hashable] = _default_collapse_key,
) -> SequenceDatabase:
    """Build one DaySequence per qualifying day that has events.

    Within a day, events are ordered by local time (input order breaks ties)
    and consecutive items with an equal ``collapse_key`` are collapsed to the
    first one, so repeated check-ins at one slot do not inflate supports.

    Raises :class:`EmptyDatabaseError` when no qualifying day has events.
    """
    wanted = set(qualifying_days)
    per_day: dict[date, list[LocalEvent]] = {}
    for e in events:
        if e.user_id == user_id and e.day_key in wanted:
            per_day.setdefault(e.day_key, []).append(e)

    sequences = []
    for day in sorted(per_day):
        day_events = sorted(per_day[day], key=lambda e: e.local_time)  # stable
        items: list[SequenceItem] = []
        for e in day_events:
            item = SequenceItem(hour_slot=e.hour_slot, category=e.category, cell_id=e.cell_id)
            if items and collapse_key(items[-1]) == collapse_key(item):
                continue
            items.append(item)
        sequences.append(DaySequence(user_id=user_id, day_key=day, items=tuple(items)))

    if not sequences:
        raise EmptyDatabaseError(f"user {user_id!r} has no events on qualifying days")
    return SequenceDatabase(user_id=user_id, sequences=tuple(sequences))


def serialize_database(db: SequenceDatabase) -> str:
    """Line-oriented text form for golden-file tests: one day per line.

    Items are written as ``slot:category@cell`` separated by spaces; this is a
    write-only format (labels may themselves contain spaces).
    """
    lines = []
    for seq in db.sequences:
        rendered = " ".join(f"{it.hour_slot}:{it.category}@{it.cell_id}" for it in seq.items)
        lines.append(f"{seq.day_key.isoformat()}\t{rendered}")
    return "".join(line + "\n" for line in lines)
