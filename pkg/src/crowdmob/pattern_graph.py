"""Per-user graph of visited places, derived from mined patterns."""

from __future__ import annotations

from dataclasses import dataclass

from .mining import Pattern, PatternSet, Symbol, format_symbol


@dataclass(frozen=True)
class PatternGraph:
    """Weighted digraph of length-1 and length-2 patterns.

    Node weights are singleton support ratios; an edge ``a -> b`` carries the
    support ratio of the 2-pattern ``(a, b)``. Longer patterns cannot be
    encoded as edges and are kept alongside as an ordered list.
    """

    nodes: dict[Symbol, float]
    edges: dict[tuple[Symbol, Symbol], float]
    longer_patterns: tuple[Pattern, ...]


def build_graph(patterns: PatternSet) -> PatternGraph:
    """Nodes from length-1 patterns, edges from length-2, weights copied."""
    nodes: dict[Symbol, float] = {}
    edges: dict[tuple[Symbol, Symbol], float] = {}
    longer = []
    for p in patterns.patterns:
        if len(p.items) == 1:
            nodes[p.items[0]] = p.support_ratio
        elif len(p.items) == 2:
            edges[(p.items[0], p.items[1])] = p.support_ratio
        else:
            longer.append(p)
    return PatternGraph(nodes=nodes, edges=edges, longer_patterns=tuple(longer))


def graph_document(graph: PatternGraph) -> dict:
    """JSON-ready form with sorted ``nodes`` and ``edges`` arrays."""
    return {
        "nodes": [
            {"category": format_symbol(symbol), "weight": weight}
            for symbol, weight in sorted(graph.nodes.items())
        ],
        "edges": [
            {"source": format_symbol(a), "target": format_symbol(b), "weight": weight}
            for (a, b), weight in sorted(graph.edges.items())
        ],
    }
