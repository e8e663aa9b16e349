"""Walkthrough: parse raw check-in lines, localize them, and size up the cohort.

Run with: python demos/01_ingest_and_stats.py
"""

from datetime import date, timedelta

from crowdmob import (
    dataset_stats,
    filter_window,
    parse_checkins,
    select_qualifying_users,
    to_local_events,
)
from crowdmob.synthetic import two_user_fixture_lines, daily_routine_lines
from datetime import time

# Build a small raw dataset: two dense users plus one sparse user who
# checks in once a day and will not survive the density filter.
raw_lines = two_user_fixture_lines()
raw_lines += daily_routine_lines("sparse", 80, [(time(19, 0), "Eatery")])
raw = "\n".join(raw_lines)

print("=== parsing ===")
parsed = parse_checkins(raw)
print(f"parsed {len(parsed.records)} records, {parsed.malformed_count} malformed lines")

print("\n=== dataset statistics ===")
stats = dataset_stats(parsed.records)
print(f"records:        {stats.total_records}")
print(f"users:          {stats.user_count}")
print(f"mean per user:  {stats.records_per_user_mean:.1f}")
print(f"median per user:{stats.records_per_user_median:.0f}")
print(f"date range:     {stats.date_range[0]} .. {stats.date_range[1]}")

print("\n=== localization ===")
events = to_local_events(parsed.records)
first = events[0]
print(f"first event: user={first.user_id} category={first.category}")
print(f"  local time {first.local_time} -> day {first.day_key}, hour slot {first.hour_slot}")
print(f"  microcell {first.cell_id}")

print("\n=== window filter (April through June 2012) ===")
windowed = filter_window(events, date(2012, 4, 1), date(2012, 6, 30))
print(f"{len(events)} events -> {len(windowed)} in window")

print("\n=== qualification (dense days, strictly more than min_days of them) ===")
for min_days, max_gap_h in ((50, 2), (50, 1), (10, 2)):
    result = select_qualifying_users(windowed, min_days=min_days, max_gap=timedelta(hours=max_gap_h))
    print(f"min_days={min_days:>2} max_gap={max_gap_h}h -> qualified: {sorted(result.qualified) or '(none)'}")

result = select_qualifying_users(windowed)
print("\nper-user qualifying day counts:", dict(sorted(result.day_counts.items())))
print("the sparse user has single check-in days, so no day ever qualifies")
