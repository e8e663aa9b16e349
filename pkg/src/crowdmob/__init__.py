"""Crowd mobility analytics: mine per-user check-in patterns, aggregate crowds.

The pipeline runs ingest -> sequences -> mining, then fans out into per-user
pattern graphs, city-wide per-hour crowd snapshots, and min-support sweep
experiments. A CLI (``crowdmob``) and an HTTP service expose the same
operations.
"""

from .crowd import (
    CrowdSnapshot,
    HabitItem,
    Microcell,
    build_snapshots,
    dominant_categories,
    extract_habits,
    snapshot_document,
)
from .errors import CrowdmobError, DatasetFormatError, EmptyDatabaseError
from .experiments import Histogram, SweepResult, distribution, export_results, support_sweep
from .grid import CellBounds, DEFAULT_PRECISION, assign_cell, cell_bounds
from .ingest import (
    CheckIn,
    DatasetStats,
    LocalEvent,
    ParseResult,
    QualificationResult,
    dataset_stats,
    filter_window,
    parse_checkins,
    select_qualifying_users,
    serialize_checkin,
    serialize_checkins,
    to_local_events,
)
from .mining import (
    MinerConfig,
    MiningMode,
    Pattern,
    PatternSet,
    brute_force_mine,
    export_patterns,
    mine_patterns,
    support_of,
)
from .pattern_graph import PatternGraph, build_graph, graph_document
from .sequences import (
    DaySequence,
    SequenceDatabase,
    SequenceItem,
    build_sequence_database,
    serialize_database,
)

__version__ = "0.1.0"

__all__ = [
    "CellBounds",
    "CheckIn",
    "CrowdSnapshot",
    "CrowdmobError",
    "DEFAULT_PRECISION",
    "DatasetFormatError",
    "DatasetStats",
    "DaySequence",
    "EmptyDatabaseError",
    "HabitItem",
    "Histogram",
    "LocalEvent",
    "Microcell",
    "MinerConfig",
    "MiningMode",
    "ParseResult",
    "Pattern",
    "PatternGraph",
    "PatternSet",
    "QualificationResult",
    "SequenceDatabase",
    "SequenceItem",
    "SweepResult",
    "assign_cell",
    "brute_force_mine",
    "build_graph",
    "build_sequence_database",
    "build_snapshots",
    "cell_bounds",
    "dataset_stats",
    "distribution",
    "dominant_categories",
    "export_patterns",
    "export_results",
    "extract_habits",
    "filter_window",
    "graph_document",
    "mine_patterns",
    "parse_checkins",
    "select_qualifying_users",
    "serialize_checkin",
    "serialize_checkins",
    "serialize_database",
    "snapshot_document",
    "support_of",
    "support_sweep",
    "to_local_events",
]
