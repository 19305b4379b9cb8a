"""Level graph data model: leveled vertices, monotone edges, drawings.

A level graph assigns each vertex a positive integer level; edges join
vertices on distinct levels and are drawn y-monotone. In a proper level
graph every edge spans exactly one level; longer edges are subdivided
with dummy vertices. A drawing fixes the left-to-right vertex order on
each nonempty level, which is all a straight-line layout needs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .pairs import ID_PATTERN


class InvalidGraphError(ValueError):
    """An operation received a graph that fails validation."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class DrawingMismatchError(ValueError):
    """A drawing does not order exactly the graph's vertices."""


@dataclass(frozen=True)
class LevelGraph:
    """A graph with a level per vertex and edges between distinct levels.

    Edges are stored normalized, lower-level endpoint first. Construction
    normalizes wherever both endpoint levels are known; everything else
    is reported by :func:`validate`, never silently repaired.
    """

    vertices: tuple[tuple[str, int], ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        verts = tuple((v, lvl) for v, lvl in self.vertices)
        levels: dict[str, int] = {}
        for v, lvl in verts:
            levels.setdefault(v, lvl)
        edges = []
        for a, b in self.edges:
            la, lb = levels.get(a), levels.get(b)
            if la is not None and lb is not None and lb < la:
                a, b = b, a
            edges.append((a, b))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(edges))

    def level_map(self) -> dict[str, int]:
        return {v: lvl for v, lvl in self.vertices}

    def levels(self) -> list[int]:
        return sorted({lvl for _, lvl in self.vertices})

    def vertices_on(self, level: int) -> list[str]:
        return sorted(v for v, lvl in self.vertices if lvl == level)

    def canonical(self) -> LevelGraph:
        return LevelGraph(
            tuple(sorted(self.vertices, key=lambda p: (p[1], p[0]))),
            tuple(sorted(self.edges)),
        )


@dataclass(frozen=True)
class ProperLevelGraph:
    """A level graph whose edges all span exactly one level.

    ``dummies`` maps each subdivision vertex to the original edge it lies
    on and its 1-based position along that edge. Graphs that are proper
    from the start carry an empty map.
    """

    base: LevelGraph
    dummies: dict[str, tuple[tuple[str, str], int]] = field(default_factory=dict)

    @property
    def vertices(self) -> tuple[tuple[str, int], ...]:
        return self.base.vertices

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        return self.base.edges

    def level_map(self) -> dict[str, int]:
        return self.base.level_map()

    def levels(self) -> list[int]:
        return self.base.levels()

    def vertices_on(self, level: int) -> list[str]:
        return self.base.vertices_on(level)

    def is_original(self, v: str) -> bool:
        return v not in self.dummies


@dataclass(frozen=True)
class Drawing:
    """Left-to-right vertex orders, one per nonempty level."""

    orders: dict[int, tuple[str, ...]]

    def __post_init__(self):
        norm = {int(lvl): tuple(seq) for lvl, seq in self.orders.items()}
        object.__setattr__(self, "orders", dict(sorted(norm.items())))

    def positions(self) -> dict[str, int]:
        pos: dict[str, int] = {}
        for seq in self.orders.values():
            for i, v in enumerate(seq):
                pos[v] = i
        return pos

    def mirrored(self) -> Drawing:
        return Drawing({lvl: tuple(reversed(seq)) for lvl, seq in self.orders.items()})


def validate(graph: LevelGraph) -> list[str]:
    """Return all invariant violations of ``graph``, empty if it is valid."""
    violations: list[str] = []
    seen: set[str] = set()
    for v, lvl in graph.vertices:
        if not isinstance(v, str) or not ID_PATTERN.match(v or ""):
            violations.append(f"invalid vertex id {v!r}")
        elif v in seen:
            violations.append(f"duplicate vertex id {v!r}")
        seen.add(v)
        if not isinstance(lvl, int) or isinstance(lvl, bool) or lvl < 1:
            violations.append(f"invalid level {lvl!r} for vertex {v!r}")
    levels = graph.level_map()
    seen_edges: set[tuple[str, str]] = set()
    for a, b in graph.edges:
        if a not in levels or b not in levels:
            missing = a if a not in levels else b
            violations.append(f"edge ({a}, {b}) has unknown endpoint {missing!r}")
            continue
        if a == b:
            violations.append(f"self-loop at {a!r}")
            continue
        if levels[a] == levels[b]:
            violations.append(f"same-level edge ({a}, {b})")
            continue
        key = (a, b) if a < b else (b, a)
        if key in seen_edges:
            violations.append(f"duplicate edge ({a}, {b})")
        seen_edges.add(key)
    return violations


def is_proper(graph: LevelGraph) -> bool:
    levels = graph.level_map()
    return all(levels[b] - levels[a] == 1 for a, b in graph.edges)


def make_proper(graph: LevelGraph) -> ProperLevelGraph:
    """Subdivide every edge spanning more than one level with dummy vertices.

    Dummies on an edge (a, b) are named ``a__b__k`` for k = 1.. span-1,
    bottom to top. Already-proper graphs come back structurally equal,
    with an empty dummy map.
    """
    violations = validate(graph)
    if violations:
        raise InvalidGraphError(violations)
    levels = graph.level_map()
    ids = {v for v, _ in graph.vertices}
    new_vertices = list(graph.vertices)
    new_edges: list[tuple[str, str]] = []
    dummies: dict[str, tuple[tuple[str, str], int]] = {}
    for a, b in graph.edges:
        span = levels[b] - levels[a]
        if span == 1:
            new_edges.append((a, b))
            continue
        prev = a
        for k in range(1, span):
            d = f"{a}__{b}__{k}"
            if d in ids:
                raise InvalidGraphError(
                    [f"dummy id {d!r} collides with an existing vertex"]
                )
            ids.add(d)
            new_vertices.append((d, levels[a] + k))
            dummies[d] = ((a, b), k)
            new_edges.append((prev, d))
            prev = d
        new_edges.append((prev, b))
    base = LevelGraph(tuple(new_vertices), tuple(new_edges)).canonical()
    return ProperLevelGraph(base, dummies)


def canonical_drawing(graph: ProperLevelGraph | LevelGraph) -> Drawing:
    """The id-sorted drawing, the pinned default reference everywhere."""
    return Drawing({lvl: tuple(graph.vertices_on(lvl)) for lvl in graph.levels()})
