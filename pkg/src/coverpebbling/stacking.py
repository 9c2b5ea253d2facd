"""Cover pebbling numbers via stacking weights.

The cover pebbling number of a connected graph equals the largest stacking
weight max_v sum_u 2^dist(u,v): the worst initial distribution is the whole
pile stacked on the vertex attaining the maximum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import DistanceMatrix, Graph, distance_matrix


@dataclass(frozen=True)
class StackingResult:
    """Cover pebbling number, a vertex attaining it, and all per-vertex weights."""

    cover_number: int
    argmax_vertex: int
    per_vertex_weights: tuple


def stacking_weight(g: Graph, d: DistanceMatrix, v: int) -> int:
    """Exact sum_u 2^dist(u,v), in unbounded integer arithmetic."""
    _require_connected(g)
    total = 0
    for u in range(g.vertex_count):
        total += 1 << d[u, v]
    return total


def cover_pebbling_number(g: Graph) -> StackingResult:
    """Cover pebbling number of a connected graph, ties broken by smallest vertex."""
    if g.vertex_count < 1:
        raise ValueError("cover pebbling number needs at least one vertex")
    _require_connected(g)
    d = distance_matrix(g)
    weights = tuple(stacking_weight(g, d, v) for v in range(g.vertex_count))
    best = max(weights)
    return StackingResult(best, weights.index(best), weights)


def _require_connected(g: Graph) -> None:
    pair = g.distances.unreachable_pair()
    if pair is not None:
        raise ValueError(
            f"graph is disconnected: no path between vertices {pair[0]} and {pair[1]}")
