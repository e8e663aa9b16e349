"""Walkthrough: mine one user's frequent mobility patterns and build their graph.

Run with: python demos/02_mine_patterns.py
"""

from datetime import date

from crowdmob import (
    MinerConfig,
    MiningMode,
    brute_force_mine,
    build_graph,
    export_patterns,
    mine_patterns,
    parse_checkins,
    select_qualifying_users,
    build_sequence_database,
    serialize_database,
    to_local_events,
)
from crowdmob.pattern_graph import graph_document
from crowdmob.synthetic import two_user_fixture_lines

# Ingest the bundled two-user fixture and pick u1.
events = to_local_events(parse_checkins("\n".join(two_user_fixture_lines())).records)
qual = select_qualifying_users(events)
db = build_sequence_database(events, "u1", qual.qualifying_days["u1"])

print("=== sequence database (first three days) ===")
print("".join(serialize_database(db).splitlines(keepends=True)[:3]), end="")
print(f"... {len(db.sequences)} day sequences total\n")

for sigma in (0.5, 1.0):
    print(f"=== frequent patterns at min_support={sigma} ===")
    patterns = mine_patterns(db, MinerConfig(min_support=sigma))
    print(export_patterns(patterns), end="")
    oracle = brute_force_mine(db, MinerConfig(min_support=sigma))
    print(f"(exhaustive oracle agrees: {patterns.as_dict() == oracle.as_dict()})\n")

print("=== time-annotated mode pairs each stop with its hour slot ===")
annotated = mine_patterns(db, MinerConfig(min_support=1.0, mode=MiningMode.TIME_ANNOTATED))
print(export_patterns(annotated), end="")

print("\n=== graph of visited places (nodes: singletons, edges: 2-patterns) ===")
doc = graph_document(build_graph(mine_patterns(db, MinerConfig(min_support=0.5))))
for node in doc["nodes"]:
    print(f"  node {node['category']:<8} weight {node['weight']:.2f}")
for edge in doc["edges"]:
    print(f"  edge {edge['source']} -> {edge['target']:<8} weight {edge['weight']:.2f}")
