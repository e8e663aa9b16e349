"""Frequent sequential pattern mining by prefix projection, plus a brute-force oracle.

Patterns are gapped subsequences: a sequence contains a pattern when the
pattern's items occur in order, not necessarily contiguously, and each
sequence contributes at most one to any pattern's support. A pattern is
frequent when its support count reaches ``ceil(min_support * |database|)``.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Hashable, Sequence

from .errors import EmptyDatabaseError
from .sequences import SequenceDatabase

# Instance-size guards for the exhaustive oracle.
BRUTE_FORCE_MAX_ALPHABET = 8
BRUTE_FORCE_MAX_SEQ_LEN = 8

Symbol = Hashable  # a category label, or an (hour_slot, category) pair


class MiningMode(str, Enum):
    CATEGORY_ONLY = "category"
    TIME_ANNOTATED = "time-annotated"


@dataclass(frozen=True)
class MinerConfig:
    min_support: float = 0.5
    max_pattern_length: int | None = None
    mode: MiningMode = MiningMode.CATEGORY_ONLY

    def __post_init__(self):
        if not 0.0 < self.min_support <= 1.0:
            raise ValueError(f"min_support must be in (0, 1], got {self.min_support}")
        if self.max_pattern_length is not None and self.max_pattern_length < 1:
            raise ValueError(f"max_pattern_length must be >= 1, got {self.max_pattern_length}")


@dataclass(frozen=True)
class Pattern:
    items: tuple[Symbol, ...]
    support_count: int
    support_ratio: float


@dataclass(frozen=True)
class PatternSet:
    user_id: str
    config: MinerConfig
    database_size: int
    patterns: tuple[Pattern, ...]

    def as_dict(self) -> dict[tuple[Symbol, ...], int]:
        """Pattern items mapped to support counts, for comparisons."""
        return {p.items: p.support_count for p in self.patterns}

    def __len__(self) -> int:
        return len(self.patterns)


def min_count(min_support: float, database_size: int) -> int:
    """Absolute support threshold: ``ceil(min_support * database_size)``."""
    return math.ceil(min_support * database_size)


def _symbol_sequences(db: SequenceDatabase, mode: MiningMode) -> list[tuple[Symbol, ...]]:
    if mode is MiningMode.TIME_ANNOTATED:
        return [tuple((it.hour_slot, it.category) for it in seq.items) for seq in db.sequences]
    return [tuple(it.category for it in seq.items) for seq in db.sequences]


def _is_subsequence(pattern: Sequence[Symbol], seq: tuple[Symbol, ...]) -> bool:
    pos = 0
    for symbol in pattern:
        try:
            pos = seq.index(symbol, pos) + 1
        except ValueError:
            return False
    return True


def _canonical(patterns: list[tuple[tuple[Symbol, ...], int]], size: int) -> tuple[Pattern, ...]:
    patterns.sort(key=lambda entry: (len(entry[0]), entry[0]))
    return tuple(
        Pattern(items=items, support_count=count, support_ratio=count / size)
        for items, count in patterns
    )


def mine_patterns(db: SequenceDatabase, config: MinerConfig = MinerConfig()) -> PatternSet:
    """Mine all frequent patterns by recursive prefix projection.

    For each frequent symbol the database is projected onto the suffixes
    following the symbol's first occurrence, and the search recurses. Output
    is in canonical order: ascending length, then lexicographic items.
    """
    if not db.sequences:
        raise EmptyDatabaseError(f"user {db.user_id!r} has an empty sequence database")
    seqs = _symbol_sequences(db, config.mode)
    threshold = min_count(config.min_support, len(seqs))
    limit = config.max_pattern_length
    found: list[tuple[tuple[Symbol, ...], int]] = []

    def grow(prefix: tuple[Symbol, ...], projections: list[tuple[int, int]]) -> None:
        counts: Counter = Counter()
        for sid, pos in projections:
            counts.update(set(seqs[sid][pos:]))
        for symbol, count in counts.items():
            if count < threshold:
                continue
            pattern = prefix + (symbol,)
            found.append((pattern, count))
            if limit is not None and len(pattern) >= limit:
                continue
            projected = []
            for sid, pos in projections:
                try:
                    first = seqs[sid].index(symbol, pos)
                except ValueError:
                    continue
                projected.append((sid, first + 1))
            grow(pattern, projected)

    grow((), [(i, 0) for i in range(len(seqs))])
    return PatternSet(
        user_id=db.user_id,
        config=config,
        database_size=len(seqs),
        patterns=_canonical(found, len(seqs)),
    )


def support_of(
    db: SequenceDatabase,
    items: Sequence[Symbol],
    mode: MiningMode = MiningMode.CATEGORY_ONLY,
) -> int:
    """Number of sequences containing ``items`` as a gapped subsequence."""
    if not items:
        raise ValueError("pattern must contain at least one item")
    pattern = tuple(items)
    return sum(1 for seq in _symbol_sequences(db, mode) if _is_subsequence(pattern, seq))


def candidate_supports(
    db: SequenceDatabase,
    mode: MiningMode = MiningMode.CATEGORY_ONLY,
    max_length: int | None = None,
) -> dict[tuple[Symbol, ...], int]:
    """Support of every candidate item list, by exhaustive enumeration.

    Candidates are all tuples over the database's alphabet up to the longest
    sequence length (no candidate longer than that can be contained). Guarded
    against blowup: alphabet <= 8 symbols and sequence length <= 8.
    """
    seqs = _symbol_sequences(db, mode)
    alphabet = sorted({symbol for seq in seqs for symbol in seq})
    longest = max((len(seq) for seq in seqs), default=0)
    if len(alphabet) > BRUTE_FORCE_MAX_ALPHABET:
        raise ValueError(f"alphabet size {len(alphabet)} exceeds brute-force guard")
    if longest > BRUTE_FORCE_MAX_SEQ_LEN:
        raise ValueError(f"sequence length {longest} exceeds brute-force guard")
    horizon = longest if max_length is None else min(longest, max_length)

    supports: dict[tuple[Symbol, ...], int] = {}
    for length in range(1, horizon + 1):
        for candidate in itertools.product(alphabet, repeat=length):
            count = sum(1 for seq in seqs if _is_subsequence(candidate, seq))
            if count:
                supports[candidate] = count
    return supports


def brute_force_mine(db: SequenceDatabase, config: MinerConfig = MinerConfig()) -> PatternSet:
    """Verification oracle with the same contract as :func:`mine_patterns`.

    Enumerates every candidate and filters by recomputed support; shares no
    code path with the prefix-projection search.
    """
    if not db.sequences:
        raise EmptyDatabaseError(f"user {db.user_id!r} has an empty sequence database")
    threshold = min_count(config.min_support, len(db.sequences))
    supports = candidate_supports(db, config.mode, config.max_pattern_length)
    found = [(items, count) for items, count in supports.items() if count >= threshold]
    return PatternSet(
        user_id=db.user_id,
        config=config,
        database_size=len(db.sequences),
        patterns=_canonical(found, len(db.sequences)),
    )


def format_symbol(symbol: Symbol) -> str:
    if isinstance(symbol, tuple):
        hour, category = symbol
        return f"{hour}:{category}"
    return str(symbol)


def export_patterns(patterns: PatternSet) -> str:
    """One pattern per line: items joined by ``>``, support count, ratio to 4 dp."""
    lines = []
    for p in patterns.patterns:
        rendered = ">".join(format_symbol(s) for s in p.items)
        lines.append(f"{rendered}\t{p.support_count}\t{p.support_ratio:.4f}")
    return "".join(line + "\n" for line in lines)


def patterns_document(patterns: PatternSet) -> dict:
    """JSON-ready form of a pattern set."""
    return {
        "user_id": patterns.user_id,
        "min_support": patterns.config.min_support,
        "mode": patterns.config.mode.value,
        "database_size": patterns.database_size,
        "patterns": [
            {
                "items": [format_symbol(s) for s in p.items],
                "support_count": p.support_count,
                "support_ratio": p.support_ratio,
            }
            for p in patterns.patterns
        ],
    }
