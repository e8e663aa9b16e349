"""Minimum-support sweeps over a user cohort, with histogram and CSV exports."""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Sequence

import numpy as np

from .errors import EmptyDatabaseError
from .mining import MinerConfig, MiningMode, mine_patterns
from .sequences import SequenceDatabase

CSV_HEADER = "min_support,user_id,pattern_count,avg_pattern_length"
DEFAULT_HIST_BINS = 20


@dataclass(frozen=True)
class SweepResult:
    """Per-user pattern counts and average pattern lengths at one threshold."""

    min_support: float
    per_user_counts: dict[str, int]
    per_user_avg_length: dict[str, float]
    skipped_users: tuple[str, ...] = ()

    @property
    def mean_count(self) -> float | None:
        if not self.per_user_counts:
            return None
        return statistics.fmean(self.per_user_counts.values())

    @property
    def mean_avg_length(self) -> float | None:
        if not self.per_user_avg_length:
            return None
        return statistics.fmean(self.per_user_avg_length.values())


@dataclass(frozen=True)
class Histogram:
    bin_edges: tuple[float, ...]
    frequencies: tuple[int, ...]


def support_sweep(
    users: Sequence[SequenceDatabase],
    thresholds: Sequence[float],
    mode: MiningMode = MiningMode.CATEGORY_ONLY,
) -> list[SweepResult]:
    """Mine every user at every threshold, one SweepResult per threshold.

    Users whose databases are empty cannot be mined; they are excluded and
    reported in ``skipped_users``. Users with no frequent patterns get a
    count of 0 and an average length of 0.0.
    """
    if not thresholds:
        raise ValueError("thresholds must not be empty")
    for sigma in thresholds:
        if not 0.0 < sigma <= 1.0:
            raise ValueError(f"min_support must be in (0, 1], got {sigma}")

    ordered = sorted(users, key=lambda db: db.user_id)
    results = []
    for sigma in thresholds:
        counts: dict[str, int] = {}
        lengths: dict[str, float] = {}
        skipped: list[str] = []
        for db in ordered:
            try:
                mined = mine_patterns(db, MinerConfig(min_support=sigma, mode=mode))
            except EmptyDatabaseError:
                skipped.append(db.user_id)
                continue
            counts[db.user_id] = len(mined.patterns)
            if mined.patterns:
                lengths[db.user_id] = statistics.fmean(len(p.items) for p in mined.patterns)
            else:
                lengths[db.user_id] = 0.0
        results.append(
            SweepResult(
                min_support=sigma,
                per_user_counts=counts,
                per_user_avg_length=lengths,
                skipped_users=tuple(skipped),
            )
        )
    return results


def distribution(result: SweepResult, metric: str = "count", bins: int = DEFAULT_HIST_BINS) -> Histogram:
    """Equal-width histogram of a per-user metric over ``[min, max]``.

    Bins are right-open except the last; frequencies sum to the user
    population. ``metric`` is ``"count"`` or ``"avg_length"``.
    """
    if bins < 1:
        raise ValueError(f"bins must be >= 1, got {bins}")
    if metric == "count":
        values = list(result.per_user_counts.values())
    elif metric == "avg_length":
        values = list(result.per_user_avg_length.values())
    else:
        raise ValueError(f"unknown metric {metric!r}")
    if not values:
        raise ValueError("sweep result has no users to bin")
    frequencies, edges = np.histogram(values, bins=bins)
    return Histogram(bin_edges=tuple(float(e) for e in edges), frequencies=tuple(int(f) for f in frequencies))


def _fmt(value: float | None) -> str:
    # repr round-trips floats exactly, so re-exports stay byte-identical
    return "" if value is None else repr(value)


def export_results(results: Iterable[SweepResult], destination: str | Path | IO[str]) -> None:
    """Write the sweep as CSV: one row per (threshold, user), then a summary block.

    Data rows follow ``min_support,user_id,pattern_count,avg_pattern_length``;
    summary rows are prefixed ``#summary``. Row order is thresholds as given,
    users sorted, so re-exporting the same results is byte-identical.
    """
    lines = [CSV_HEADER]
    for result in results:
        for user_id in sorted(result.per_user_counts):
            lines.append(
                f"{result.min_support!r},{user_id},{result.per_user_counts[user_id]},"
                f"{_fmt(result.per_user_avg_length[user_id])}"
            )
    for result in results:
        lines.append(f"#summary,{result.min_support!r},{_fmt(result.mean_count)},{_fmt(result.mean_avg_length)}")
    payload = "".join(line + "\n" for line in lines)
    if hasattr(destination, "write"):
        destination.write(payload)
    else:
        Path(destination).write_text(payload, encoding="utf-8")


def read_results_csv(source: str | Path | IO[str]) -> list[SweepResult]:
    """Parse a CSV produced by :func:`export_results` back into results."""
    if hasattr(source, "read"):
        content = source.read()
    else:
        content = Path(source).read_text(encoding="utf-8")
    lines = [line for line in content.splitlines() if line]
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError("not a sweep results CSV")
    per_threshold: dict[float, tuple[dict[str, int], dict[str, float]]] = {}
    order: list[float] = []
    for line in lines[1:]:
        if line.startswith("#summary,"):
            continue
        sigma_s, user_id, count_s, length_s = line.split(",")
        sigma = float(sigma_s)
        if sigma not in per_threshold:
            per_threshold[sigma] = ({}, {})
            order.append(sigma)
        counts, lengths = per_threshold[sigma]
        counts[user_id] = int(count_s)
        lengths[user_id] = float(length_s)
    return [
        SweepResult(min_support=sigma, per_user_counts=per_threshold[sigma][0], per_user_avg_length=per_threshold[sigma][1])
        for sigma in order
    ]


def export_histogram(hist: Histogram, destination: str | Path | IO[str]) -> None:
    """Write a histogram as ``bin_start,bin_end,frequency`` rows."""
    lines = ["bin_start,bin_end,frequency"]
    for i, freq in enumerate(hist.frequencies):
        lines.append(f"{hist.bin_edges[i]!r},{hist.bin_edges[i + 1]!r},{freq}")
    payload = "".join(line + "\n" for line in lines)
    if hasattr(destination, "write"):
        destination.write(payload)
    else:
        Path(destination).write_text(payload, encoding="utf-8")
