"""On-disk datasets and the derived-artifact caches built over them.

A persisted dataset is a directory holding ``checkins.tsv`` (normalized
foursquare-tsv, round-trips through the parser) and ``dataset.json`` (the
filter and grid parameters the dataset was ingested with). Everything
derived from those two files is a pure function of them, which is what makes
the caches here safe: identical keys always produce identical payloads.
"""

from __future__ import annotations

import json
import os
import re
import threading
from dataclasses import dataclass
from datetime import date, timedelta
from pathlib import Path

from . import crowd, ingest, mining
from .errors import EmptyDatabaseError
from .grid import DEFAULT_PRECISION
from .sequences import SequenceDatabase, build_sequence_database

CHECKINS_FILE = "checkins.tsv"
META_FILE = "dataset.json"

# Effectively no gap limit; used for relaxed qualification of demo uploads.
NO_GAP_LIMIT = timedelta(days=36500)


@dataclass(frozen=True)
class DatasetMeta:
    """Ingest parameters a dataset directory was built with."""

    window_start: date | None = None
    window_end: date | None = None
    min_days: int = ingest.DEFAULT_MIN_DAYS
    max_gap_hours: float = 2.0
    min_events_per_day: int = ingest.DEFAULT_MIN_EVENTS_PER_DAY
    precision: float = DEFAULT_PRECISION
    relaxed_users: frozenset[str] = frozenset()

    def to_json(self) -> dict:
        return {
            "format": ingest.FOURSQUARE_TSV,
            "window_start": self.window_start.isoformat() if self.window_start else None,
            "window_end": self.window_end.isoformat() if self.window_end else None,
            "min_days": self.min_days,
            "max_gap_hours": self.max_gap_hours,
            "min_events_per_day": self.min_events_per_day,
            "precision": self.precision,
            "relaxed_users": sorted(self.relaxed_users),
        }

    @classmethod
    def from_json(cls, payload: dict) -> "DatasetMeta":
        return cls(
            window_start=date.fromisoformat(payload["window_start"]) if payload.get("window_start") else None,
            window_end=date.fromisoformat(payload["window_end"]) if payload.get("window_end") else None,
            min_days=payload.get("min_days", ingest.DEFAULT_MIN_DAYS),
            max_gap_hours=payload.get("max_gap_hours", 2.0),
            min_events_per_day=payload.get("min_events_per_day", ingest.DEFAULT_MIN_EVENTS_PER_DAY),
            precision=payload.get("precision", DEFAULT_PRECISION),
            relaxed_users=frozenset(payload.get("relaxed_users", ())),
        )


def _write_atomic(path: Path, payload: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(payload, encoding="utf-8")
    os.replace(tmp, path)


def save_dataset(directory: str | Path, checkins: list[ingest.CheckIn], meta: DatasetMeta) -> Path:
    """Persist a dataset directory; the two files are replaced atomically."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    _write_atomic(directory / CHECKINS_FILE, ingest.serialize_checkins(checkins))
    _write_atomic(directory / META_FILE, json.dumps(meta.to_json(), indent=2) + "\n")
    return directory


def load_dataset(directory: str | Path) -> tuple[list[ingest.CheckIn], DatasetMeta]:
    directory = Path(directory)
    meta = DatasetMeta.from_json(json.loads((directory / META_FILE).read_text(encoding="utf-8")))
    parsed = ingest.parse_checkins((directory / CHECKINS_FILE).read_text(encoding="utf-8"))
    return parsed.records, meta


def _safe_name(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9._-]", "_", name)


class DatasetState:
    """Immutable dataset plus lazily computed, internally cached derivations.

    Qualification windows and density rules come from the meta; users in
    ``meta.relaxed_users`` skip the window and qualify with any day that has
    at least one event (demo uploads). All getters are safe for concurrent
    readers: caches are filled under a lock and computation is deterministic.
    """

    def __init__(self, checkins: list[ingest.CheckIn], meta: DatasetMeta, cache_dir: Path | None = None):
        self.checkins = list(checkins)
        self.meta = meta
        self.cache_dir = Path(cache_dir) if cache_dir else None
        self.users = {c.user_id for c in self.checkins}
        self._category_map = ingest.build_category_map(self.checkins)
        self._lock = threading.Lock()
        self._events: dict[float, list[ingest.LocalEvent]] = {}
        self._user_events: dict[float, dict[str, list[ingest.LocalEvent]]] = {}
        self._qualification: ingest.QualificationResult | None = None
        self._dbs: dict[tuple[str, float], SequenceDatabase] = {}
        self._patterns: dict[tuple[str, mining.MinerConfig], mining.PatternSet] = {}
        self._snapshots: dict[tuple[float, float], dict[int, crowd.CrowdSnapshot]] = {}
        self._dominant: dict[float, dict[str, str]] = {}

    # -- events ------------------------------------------------------------

    def events(self, precision: float | None = None) -> list[ingest.LocalEvent]:
        precision = self.meta.precision if precision is None else precision
        with self._lock:
            cached = self._events.get(precision)
        if cached is None:
            cached = ingest.to_local_events(self.checkins, self._category_map, precision=precision)
            with self._lock:
                self._events.setdefault(precision, cached)
        return cached

    def user_events(self, precision: float | None = None) -> dict[str, list[ingest.LocalEvent]]:
        """Per-user events considered for mining: window-filtered unless relaxed."""
        precision = self.meta.precision if precision is None else precision
        with self._lock:
            cached = self._user_events.get(precision)
        if cached is not None:
            return cached
        per_user: dict[str, list[ingest.LocalEvent]] = {}
        for e in self.events(precision):
            per_user.setdefault(e.user_id, []).append(e)
        if self.meta.window_start and self.meta.window_end:
            for user, events in per_user.items():
                if user not in self.meta.relaxed_users:
                    per_user[user] = ingest.filter_window(events, self.meta.window_start, self.meta.window_end)
        with self._lock:
            self._user_events.setdefault(precision, per_user)
        return per_user

    # -- qualification -------------------------------------------------------

    def qualification(self) -> ingest.QualificationResult:
        with self._lock:
            if self._qualification is not None:
                return self._qualification
        per_user = self.user_events()
        regular = [e for u, evs in per_user.items() if u not in self.meta.relaxed_users for e in evs]
        relaxed = [e for u, evs in per_user.items() if u in self.meta.relaxed_users for e in evs]
        result = ingest.select_qualifying_users(
            regular,
            min_days=self.meta.min_days,
            max_gap=timedelta(hours=self.meta.max_gap_hours),
            min_events_per_day=self.meta.min_events_per_day,
        )
        if relaxed:
            loose = ingest.select_qualifying_users(relaxed, min_days=0, max_gap=NO_GAP_LIMIT, min_events_per_day=1)
            merged = dict(result.qualifying_days)
            merged.update(loose.qualifying_days)
            result = ingest.QualificationResult(
                qualifying_days=merged,
                min_days=result.min_days,
                max_gap=result.max_gap,
                min_events_per_day=result.min_events_per_day,
            )
        with self._lock:
            if self._qualification is None:
                self._qualification = result
        return result

    def qualified_users(self) -> list[str]:
        qual = self.qualification()
        relaxed_qualified = {
            u for u in self.meta.relaxed_users if len(qual.qualifying_days.get(u, ())) > 0
        }
        return sorted(qual.qualified | relaxed_qualified)

    def is_known_user(self, user_id: str) -> bool:
        return user_id in self.users

    # -- mining ---------------------------------------------------------------

    def database(self, user_id: str, precision: float | None = None) -> SequenceDatabase:
        precision = self.meta.precision if precision is None else precision
        key = (user_id, precision)
        with self._lock:
            cached = self._dbs.get(key)
        if cached is not None:
            return cached
        events = self.user_events(precision).get(user_id, [])
        days = self.qualification().qualifying_days.get(user_id, frozenset())
        db = build_sequence_database(events, user_id, days)
        with self._lock:
            self._dbs.setdefault(key, db)
        return db

    def patterns(self, user_id: str, config: mining.MinerConfig) -> mining.PatternSet:
        key = (user_id, config)
        with self._lock:
            cached = self._patterns.get(key)
        if cached is not None:
            return cached
        result = mining.mine_patterns(self.database(user_id), config)
        with self._lock:
            self._patterns.setdefault(key, result)
        self._write_pattern_cache(result)
        return result

    def _write_pattern_cache(self, result: mining.PatternSet) -> None:
        if self.cache_dir is None:
            return
        cache = self.cache_dir / "patterns"
        cache.mkdir(parents=True, exist_ok=True)
        suffix = "_t" if result.config.mode is mining.MiningMode.TIME_ANNOTATED else ""
        name = f"{_safe_name(result.user_id)}_{result.config.min_support!r}{suffix}.tsv"
        _write_atomic(cache / name, mining.export_patterns(result))

    # -- crowd ------------------------------------------------------------------

    def snapshots(self, min_support: float, precision: float | None = None) -> dict[int, crowd.CrowdSnapshot]:
        precision = self.meta.precision if precision is None else precision
        key = (min_support, precision)
        with self._lock:
            cached = self._snapshots.get(key)
        if cached is not None:
            return cached
        habits: set[crowd.HabitItem] = set()
        for user in self.qualified_users():
            try:
                db = self.database(user, precision)
            except EmptyDatabaseError:
                continue
            habits |= crowd.extract_habits(db, min_support)
        built = crowd.build_snapshots(habits)
        with self._lock:
            self._snapshots.setdefault(key, built)
        return built

    def dominant_categories(self, precision: float | None = None) -> dict[str, str]:
        precision = self.meta.precision if precision is None else precision
        with self._lock:
            cached = self._dominant.get(precision)
        if cached is not None:
            return cached
        considered = [e for events in self.user_events(precision).values() for e in events]
        result = crowd.dominant_categories(considered)
        with self._lock:
            self._dominant.setdefault(precision, result)
        return result
