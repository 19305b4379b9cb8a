"""Crossing counts for proper level graphs under a fixed drawing."""

from __future__ import annotations

import numpy as np

from . import _kernels
from .model import Drawing, DrawingMismatchError, ProperLevelGraph

Edge = tuple[str, str]


def check_drawing(graph: ProperLevelGraph, drawing: Drawing) -> None:
    """Raise unless ``drawing`` orders exactly the graph's vertices."""
    want = {lvl: set(graph.vertices_on(lvl)) for lvl in graph.levels()}
    got = drawing.orders
    if set(want) != set(got):
        raise DrawingMismatchError(
            f"drawing covers levels {sorted(got)}, graph has {sorted(want)}"
        )
    for lvl, ids in want.items():
        seq = got[lvl]
        if len(seq) != len(ids) or set(seq) != ids:
            raise DrawingMismatchError(f"level {lvl} order is not a permutation")


def edges_by_gap(graph: ProperLevelGraph) -> dict[int, list[Edge]]:
    """Edges grouped by their lower level, each group id-sorted."""
    levels = graph.level_map()
    gaps: dict[int, list[Edge]] = {}
    for a, b in graph.edges:
        if levels[b] - levels[a] != 1:
            raise DrawingMismatchError(f"edge ({a}, {b}) spans more than one level")
        gaps.setdefault(levels[a], []).append((a, b))
    for group in gaps.values():
        group.sort()
    return gaps


def count_crossings(graph: ProperLevelGraph, drawing: Drawing) -> int:
    check_drawing(graph, drawing)
    pos = drawing.positions()
    total = 0
    for group in edges_by_gap(graph).values():
        lo = np.fromiter((pos[a] for a, _ in group), np.int64, len(group))
        hi = np.fromiter((pos[b] for _, b in group), np.int64, len(group))
        total += int(_kernels.count_gap_crossings(lo, hi))
    return total


def is_planar_drawing(graph: ProperLevelGraph, drawing: Drawing) -> bool:
    return count_crossings(graph, drawing) == 0


def crossing_pairs(graph: ProperLevelGraph, drawing: Drawing) -> list[tuple[Edge, Edge]]:
    """Every crossing edge pair, sorted; the slow path behind markers and
    failure evidence, not the counting kernel."""
    check_drawing(graph, drawing)
    pos = drawing.positions()
    out: list[tuple[Edge, Edge]] = []
    for group in edges_by_gap(graph).values():
        for i, e in enumerate(group):
            for f in group[i + 1:]:
                if e[0] == f[0] or e[1] == f[1]:
                    continue
                if (pos[e[0]] < pos[f[0]]) != (pos[e[1]] < pos[f[1]]):
                    out.append((e, f))
    out.sort()
    return out
