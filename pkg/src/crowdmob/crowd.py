"""Crowd synchronization: per-hour occupancy of microcells by users' frequent habits."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .grid import CellBounds, assign_cell, cell_bounds  # noqa: F401  (cell surface lives here)
from .ingest import LocalEvent
from .sequences import SequenceDatabase

HOUR_SLOTS = 24


@dataclass(frozen=True)
class Microcell:
    cell_id: str
    bounds: CellBounds
    dominant_category: str


@dataclass(frozen=True)
class HabitItem:
    """A (user, cell, hour) habit whose empirical support cleared the threshold."""

    user_id: str
    cell_id: str
    hour_slot: int
    support_ratio: float


@dataclass(frozen=True)
class CrowdSnapshot:
    hour_slot: int
    occupancy: dict[str, frozenset[str]]  # cell_id -> users, no empty entries

    @property
    def counts(self) -> dict[str, int]:
        return {cell: len(users) for cell, users in self.occupancy.items()}


def extract_habits(db: SequenceDatabase, min_support: float) -> set[HabitItem]:
    """Frequent (cell, hour) singletons of one user.

    A habit is emitted when the fraction of day sequences containing at least
    one item at that cell and hour reaches ``min_support``.
    """
    if not 0.0 < min_support <= 1.0:
        raise ValueError(f"min_support must be in (0, 1], got {min_support}")
    day_count = len(db.sequences)
    if not day_count:
        return set()
    seen: Counter = Counter()
    for seq in db.sequences:
        seen.update({(it.cell_id, it.hour_slot) for it in seq.items})
    habits = set()
    for (cell, hour), count in seen.items():
        ratio = count / day_count
        if ratio >= min_support:
            habits.add(HabitItem(user_id=db.user_id, cell_id=cell, hour_slot=hour, support_ratio=ratio))
    return habits


def build_snapshots(habits: Iterable[HabitItem], slots: int = HOUR_SLOTS) -> dict[int, CrowdSnapshot]:
    """Aggregate all users' habits into one snapshot per hour slot.

    Every slot gets a snapshot, possibly empty; a user may appear in several
    cells of one slot when they hold several frequent habits.
    """
    occupancy: dict[int, dict[str, set[str]]] = {h: {} for h in range(slots)}
    for habit in habits:
        occupancy[habit.hour_slot].setdefault(habit.cell_id, set()).add(habit.user_id)
    return {
        h: CrowdSnapshot(
            hour_slot=h,
            occupancy={cell: frozenset(users) for cell, users in cells.items()},
        )
        for h, cells in occupancy.items()
    }


def dominant_categories(events: Iterable[LocalEvent]) -> dict[str, str]:
    """Modal check-in category per cell, ties broken lexicographically."""
    per_cell: dict[str, Counter] = {}
    for e in events:
        per_cell.setdefault(e.cell_id, Counter())[e.category] += 1
    modal = {}
    for cell, counts in per_cell.items():
        top = max(counts.values())
        modal[cell] = min(label for label, n in counts.items() if n == top)
    return modal


def snapshot_document(
    snapshot: CrowdSnapshot,
    dominant: Mapping[str, str] | None = None,
    anonymize: bool = False,
) -> dict:
    """JSON-ready snapshot with per-cell bounds, dominant category, and count.

    The member-user list is omitted when ``anonymize`` is set.
    """
    dominant = dominant or {}
    cells = []
    for cell_id in sorted(snapshot.occupancy):
        users = snapshot.occupancy[cell_id]
        bounds = cell_bounds(cell_id)
        entry = {
            "cell_id": cell_id,
            "bounds": {
                "south": bounds.south,
                "west": bounds.west,
                "north": bounds.north,
                "east": bounds.east,
            },
            "dominant_category": dominant.get(cell_id),
            "count": len(users),
        }
        if not anonymize:
            entry["users"] = sorted(users)
        cells.append(entry)
    return {"hour_slot": snapshot.hour_slot, "cells": cells}
