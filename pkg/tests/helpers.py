"""Shared test fixtures: independent oracles and compact graph builders.

The oracles here deliberately avoid the package's own machinery. Crossing
counts come from exact integer segment-intersection geometry, and the
unpruned searcher enumerates whole drawings with itertools. Slow, but
they only ever see small graphs, and disagreement with the fast paths is
precisely what the tests are for.
"""

from __future__ import annotations

import itertools
import random

from levelplan import Drawing, LevelGraph, ProperLevelGraph, make_proper


def graph(levels, edges="") -> LevelGraph:
    """Build a LevelGraph from ``{level: "a b c"}`` and ``"a-b c-d"``."""
    verts = []
    for lvl, names in levels.items():
        if isinstance(names, str):
            names = names.split()
        verts.extend((name, lvl) for name in names)
    if isinstance(edges, str):
        edges = [tuple(part.split("-")) for part in edges.split()]
    return LevelGraph(vertices=tuple(verts), edges=tuple(edges))


def proper(levels, edges="") -> ProperLevelGraph:
    return make_proper(graph(levels, edges))


def drawing(orders) -> Drawing:
    return Drawing({lvl: tuple(seq.split() if isinstance(seq, str) else seq)
                    for lvl, seq in orders.items()})


def _orient(a, b, c) -> int:
    value = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (value > 0) - (value < 0)


def _segments_cross(p1, p2, p3, p4) -> bool:
    # proper intersection only: touching at endpoints does not count
    d1 = _orient(p3, p4, p1)
    d2 = _orient(p3, p4, p2)
    d3 = _orient(p1, p2, p3)
    d4 = _orient(p1, p2, p4)
    return d1 * d2 < 0 and d3 * d4 < 0


def geometric_crossings(graph: ProperLevelGraph, drawing: Drawing) -> int:
    """Count crossings by exact segment intersection on an integer grid."""
    pos = drawing.positions()
    levels = graph.level_map()
    points = {v: (pos[v], levels[v]) for v, _ in graph.vertices}
    segments = [(points[a], points[b], {a, b}) for a, b in graph.edges]
    count = 0
    for (p1, p2, e1), (p3, p4, e2) in itertools.combinations(segments, 2):
        if e1 & e2:
            continue
        if _segments_cross(p1, p2, p3, p4):
            count += 1
    return count


def all_drawings(graph: ProperLevelGraph):
    """Yield every drawing of ``graph``, lexicographic per level."""
    levels = graph.levels()
    perms = [sorted(itertools.permutations(graph.vertices_on(lvl))) for lvl in levels]
    for combo in itertools.product(*perms):
        yield Drawing(dict(zip(levels, combo)))


def unpruned_planarity(graph: ProperLevelGraph):
    """(planar, first zero-crossing drawing) by full enumeration."""
    for d in all_drawings(graph):
        if geometric_crossings(graph, d) == 0:
            return True, d
    return False, None


def exhaustive_proper_graphs(max_vertices: int, max_levels: int):
    """Every proper level graph shape up to the given size.

    Vertex labels are canonical (``v<level>_<i>``), which loses nothing:
    planarity is label-independent. Levels are consecutive from 1; shapes
    with empty intermediate levels admit no proper edges across the hole,
    so they are order-isomorphic to a smaller consecutive shape.
    """
    for total in range(1, max_vertices + 1):
        for parts in _compositions(total, max_levels):
            names = [[f"v{lvl + 1}_{i}" for i in range(width)]
                     for lvl, width in enumerate(parts)]
            verts = tuple(
                (name, lvl + 1) for lvl, level_names in enumerate(names)
                for name in level_names
            )
            slots = [(a, b)
                     for lvl in range(len(parts) - 1)
                     for a in names[lvl] for b in names[lvl + 1]]
            for mask in range(1 << len(slots)):
                edges = tuple(slots[i] for i in range(len(slots)) if mask >> i & 1)
                yield make_proper(LevelGraph(vertices=verts, edges=edges))


def _compositions(total: int, max_parts: int):
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first, max_parts - 1):
            yield (first, *rest)


def random_drawing(graph: ProperLevelGraph, rng: random.Random) -> Drawing:
    orders = {}
    for lvl in graph.levels():
        seq = list(graph.vertices_on(lvl))
        rng.shuffle(seq)
        orders[lvl] = tuple(seq)
    return Drawing(orders)


def random_sloppy_graph(rng: random.Random) -> LevelGraph:
    """A random, usually non-proper level graph (spans up to 4)."""
    n_levels = rng.randint(2, 5)
    verts = []
    for lvl in range(1, n_levels + 1):
        for i in range(rng.randint(1, 3)):
            verts.append((f"n{lvl}_{i}", lvl))
    edges = set()
    for _ in range(rng.randint(0, 8)):
        (a, la), (b, lb) = rng.sample(verts, 2)
        if la == lb:
            continue
        edges.add((a, b) if la < lb else (b, a))
    return LevelGraph(vertices=tuple(verts), edges=tuple(sorted(edges)))
