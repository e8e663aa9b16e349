"""Prefix-projection miner vs. the exhaustive oracle, plus contract details."""

import itertools
from datetime import date

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crowdmob import (
    DaySequence,
    EmptyDatabaseError,
    MinerConfig,
    MiningMode,
    SequenceDatabase,
    SequenceItem,
    brute_force_mine,
    export_patterns,
    mine_patterns,
    support_of,
)
from tests.conftest import make_database


def pattern_dict(ps):
    return {p.items: p.support_count for p in ps.patterns}


class TestMinePatterns:
    def test_worked_example(self, esg_database):
        ps = mine_patterns(esg_database, MinerConfig(min_support=0.66))
        assert pattern_dict(ps) == {
            ("E",): 3,
            ("G",): 3,
            ("S",): 2,
            ("E", "G"): 3,
            ("S", "G"): 2,
        }

    def test_identical_singletons(self):
        db = make_database("u", ["E"], ["E"])
        ps = mine_patterns(db, MinerConfig(min_support=1.0))
        assert pattern_dict(ps) == {("E",): 2}

    def test_single_sequence_all_subsequences(self):
        db = make_database("u", ["E", "G"])
        ps = mine_patterns(db, MinerConfig(min_support=1.0))
        assert pattern_dict(ps) == {("E",): 1, ("G",): 1, ("E", "G"): 1}

    def test_repeated_symbol_patterns_found(self):
        db = make_database("u", ["E", "S", "E"], ["E", "E"])
        ps = mine_patterns(db, MinerConfig(min_support=1.0))
        assert pattern_dict(ps) == {("E",): 2, ("E", "E"): 2}

    def test_canonical_order(self, esg_database):
        ps = mine_patterns(esg_database, MinerConfig(min_support=0.5))
        keys = [(len(p.items), p.items) for p in ps.patterns]
        assert keys == sorted(keys)

    def test_empty_database_rejected(self):
        with pytest.raises(EmptyDatabaseError):
            mine_patterns(SequenceDatabase("u", ()), MinerConfig(min_support=0.5))

    @pytest.mark.parametrize("sigma", [0.0, -0.5, 1.01, 2.0])
    def test_min_support_range_enforced(self, sigma):
        with pytest.raises(ValueError):
            MinerConfig(min_support=sigma)

    def test_max_pattern_length_cap(self, esg_database):
        ps = mine_patterns(esg_database, MinerConfig(min_support=0.5, max_pattern_length=1))
        assert all(len(p.items) == 1 for p in ps.patterns)

    def test_support_ratio_consistent(self, esg_database):
        ps = mine_patterns(esg_database, MinerConfig(min_support=0.5))
        for p in ps.patterns:
            assert p.support_ratio == p.support_count / 3

    def test_time_annotated_mode(self):
        db = SequenceDatabase(
            "u",
            (
                DaySequence(
                    "u",
                    date(2012, 4, 1),
                    (SequenceItem(8, "Home", "c"), SequenceItem(12, "Eatery", "c")),
                ),
                DaySequence(
                    "u",
                    date(2012, 4, 2),
                    (SequenceItem(8, "Home", "c"), SequenceItem(18, "Gym", "c")),
                ),
            ),
        )
        ps = mine_patterns(db, MinerConfig(min_support=1.0, mode=MiningMode.TIME_ANNOTATED))
        assert pattern_dict(ps) == {((8, "Home"),): 2}

    def test_determinism_byte_identical_export(self, esg_database):
        a = export_patterns(mine_patterns(esg_database, MinerConfig(min_support=0.5)))
        b = export_patterns(mine_patterns(esg_database, MinerConfig(min_support=0.5)))
        assert a == b

    def test_export_format(self, esg_database):
        ps = mine_patterns(esg_database, MinerConfig(min_support=0.66))
        lines = export_patterns(ps).splitlines()
        assert lines[0] == "E\t3\t1.0000"
        assert lines[3] == "E>G\t3\t1.0000"
        assert lines[4] == "S>G\t2\t0.6667"


class TestSupportOf:
    def test_worked_examples(self, esg_database):
        assert support_of(esg_database, ["E", "G"]) == 3
        assert support_of(esg_database, ["E", "S"]) == 1
        assert support_of(esg_database, ["Z"]) == 0

    def test_counts_each_sequence_once(self):
        db = make_database("u", ["E", "E", "E"])
        assert support_of(db, ["E"]) == 1

    def test_empty_pattern_rejected(self, esg_database):
        with pytest.raises(ValueError):
            support_of(esg_database, [])


class TestBruteForce:
    def test_matches_worked_examples(self, esg_database):
        for sigma in (0.66, 1.0):
            assert pattern_dict(brute_force_mine(esg_database, MinerConfig(min_support=sigma))) == (
                pattern_dict(mine_patterns(esg_database, MinerConfig(min_support=sigma)))
            )

    def test_single_item_db(self):
        db = make_database("u", ["E"])
        ps = brute_force_mine(db, MinerConfig(min_support=1.0))
        assert pattern_dict(ps) == {("E",): 1}

    def test_disjoint_alphabets_nothing_common(self):
        db = make_database("u", ["A", "B"], ["C", "D"])
        ps = brute_force_mine(db, MinerConfig(min_support=1.0))
        assert pattern_dict(ps) == {}

    def test_size_guards(self):
        too_wide = make_database("u", [chr(ord("A") + i) for i in range(9)])
        with pytest.raises(ValueError):
            brute_force_mine(too_wide, MinerConfig(min_support=0.5))
        too_long = make_database("u", ["A"] * 9)
        with pytest.raises(ValueError):
            brute_force_mine(too_long, MinerConfig(min_support=0.5))


sequence_dbs = st.lists(
    st.lists(st.sampled_from(["A", "B", "C", "D"]), min_size=1, max_size=5),
    min_size=1,
    max_size=6,
).map(lambda seqs: make_database("u", *seqs))


class TestProperties:
    @given(db=sequence_dbs, sigma=st.sampled_from([0.25, 0.5, 0.75, 1.0]))
    @settings(max_examples=150, deadline=None)
    def test_oracle_equivalence(self, db, sigma):
        config = MinerConfig(min_support=sigma)
        assert pattern_dict(mine_patterns(db, config)) == pattern_dict(brute_force_mine(db, config))

    @given(db=sequence_dbs, cap=st.integers(min_value=1, max_value=3))
    @settings(max_examples=60, deadline=None)
    def test_oracle_equivalence_with_length_cap(self, db, cap):
        config = MinerConfig(min_support=0.5, max_pattern_length=cap)
        assert pattern_dict(mine_patterns(db, config)) == pattern_dict(brute_force_mine(db, config))

    @given(db=sequence_dbs)
    @settings(max_examples=80, deadline=None)
    def test_anti_monotonicity(self, db):
        previous = None
        for sigma in (0.25, 0.5, 0.75, 1.0):
            current = set(pattern_dict(mine_patterns(db, MinerConfig(min_support=sigma))))
            if previous is not None:
                assert current <= previous
            previous = current

    @given(db=sequence_dbs, sigma=st.sampled_from([0.4, 0.7, 1.0]))
    @settings(max_examples=80, deadline=None)
    def test_downward_closure_and_support_recheck(self, db, sigma):
        ps = mine_patterns(db, MinerConfig(min_support=sigma))
        mined = pattern_dict(ps)
        for items, count in mined.items():
            assert support_of(db, items) == count
            for length in range(1, len(items)):
                for sub in itertools.combinations(items, length):
                    assert sub in mined
                    assert mined[sub] >= count
