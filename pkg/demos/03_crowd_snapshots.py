"""Walkthrough: aggregate everyone's frequent habits into per-hour crowd views.

Run with: python demos/03_crowd_snapshots.py
"""

from crowdmob import (
    build_sequence_database,
    build_snapshots,
    dominant_categories,
    extract_habits,
    parse_checkins,
    select_qualifying_users,
    snapshot_document,
    to_local_events,
)
from crowdmob.synthetic import two_user_fixture_lines

events = to_local_events(parse_checkins("\n".join(two_user_fixture_lines())).records)
qual = select_qualifying_users(events)

print("=== per-user habits (cell, hour) with empirical support >= 0.5 ===")
habits = set()
for user in sorted(qual.qualified):
    db = build_sequence_database(events, user, qual.qualifying_days[user])
    mine = extract_habits(db, min_support=0.5)
    habits |= mine
    for h in sorted(mine, key=lambda h: (h.hour_slot, h.cell_id)):
        print(f"  {user}: hour {h.hour_slot:>2} cell {h.cell_id} (support {h.support_ratio:.2f})")

print("\n=== hour-by-hour crowd occupancy ===")
snapshots = build_snapshots(habits)
for hour in range(24):
    snapshot = snapshots[hour]
    if not snapshot.occupancy:
        continue
    cells = ", ".join(f"{cell}={len(users)}" for cell, users in sorted(snapshot.occupancy.items()))
    print(f"  {hour:02d}:00  {cells}")
print("(both users share the Home cell at hour 8; the crowd then disperses)")

print("\n=== one snapshot as the service would return it ===")
modal = dominant_categories(events)
doc = snapshot_document(snapshots[8], dominant=modal)
for cell in doc["cells"]:
    b = cell["bounds"]
    print(
        f"  cell {cell['cell_id']}: count={cell['count']} users={cell['users']} "
        f"dominant={cell['dominant_category']}"
    )
    print(f"    bounds: lat [{b['south']:.2f}, {b['north']:.2f}) lon [{b['west']:.2f}, {b['east']:.2f})")
