"""Pair-order constraints over a proper level graph.

For two independent edges between the same two levels, any crossing-free
drawing orders their upper endpoints the same way as their lower
endpoints. Each such edge pair therefore ties two pair variables
together with a parity, and the conjunction is satisfiable exactly when
the graph is level planar. The constraint store is a parity-annotated
union-find; its classes feed the greedy embedder in :mod:`assign`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .assign import EmbedOutcome, GreedyPolicy, OrderClass, run_assignment
from .crossings import edges_by_gap
from .model import ProperLevelGraph
from .pairs import PairKey, pair_key

Edge = tuple[str, str]


class UnsatisfiableError(ValueError):
    """The constraint system is contradictory (the graph is not level
    planar), so there is nothing to embed or enumerate."""


@dataclass(frozen=True)
class Relation:
    """One recorded constraint: ``a`` and ``b`` take equal orders when
    ``parity`` is 0, opposite orders when 1; ``edges`` is its source."""

    a: PairKey
    b: PairKey
    parity: int
    edges: tuple[Edge, Edge]


class ConstraintSystem:
    """Parity union-find over every same-level pair of one graph."""

    def __init__(self, pairs):
        self.pairs: tuple[PairKey, ...] = tuple(pairs)
        self.relations: list[Relation] = []
        self.conflicts: list[Relation] = []
        self._index = {p: i for i, p in enumerate(self.pairs)}
        n = len(self.pairs)
        self._parent = list(range(n))
        self._rank = [0] * n
        self._parity = [0] * n

    def _find(self, i: int) -> tuple[int, int]:
        root = i
        parity = 0
        while self._parent[root] != root:
            parity ^= self._parity[root]
            root = self._parent[root]
        # path compression, re-rooting each parity as we go
        node = i
        p = parity
        while self._parent[node] != root:
            nxt = self._parent[node]
            step = self._parity[node]
            self._parent[node] = root
            self._parity[node] = p
            p ^= step
            node = nxt
        return root, parity

    def relate(self, a: PairKey, b: PairKey, parity: int, edges: tuple[Edge, Edge]) -> None:
        rel = Relation(a, b, parity, edges)
        self.relations.append(rel)
        ra, pa = self._find(self._index[a])
        rb, pb = self._find(self._index[b])
        if ra == rb:
            if pa ^ pb != parity:
                self.conflicts.append(rel)
            return
        if self._rank[ra] < self._rank[rb]:
            ra, rb = rb, ra
            pa, pb = pb, pa
        self._parent[rb] = ra
        self._parity[rb] = pa ^ pb ^ parity
        if self._rank[ra] == self._rank[rb]:
            self._rank[ra] += 1

    def related(self, a: PairKey, b: PairKey) -> int | None:
        """Parity between two pairs if tied, None if independent."""
        ra, pa = self._find(self._index[a])
        rb, pb = self._find(self._index[b])
        if ra != rb:
            return None
        return pa ^ pb

    @property
    def contradiction(self) -> bool:
        return bool(self.conflicts)


def all_pairs(graph: ProperLevelGraph) -> list[PairKey]:
    pairs: list[PairKey] = []
    for lvl in graph.levels():
        ids = graph.vertices_on(lvl)
        for i, a in enumerate(ids):
            for b in ids[i + 1:]:
                pairs.append(PairKey(lvl, a, b))
    return pairs


def independent_edge_pairs(graph: ProperLevelGraph):
    """Unordered pairs of independent edges between the same two levels,
    enumerated canonically; exactly one yield per pair."""
    for lvl, group in sorted(edges_by_gap(graph).items()):
        for e, f in combinations(group, 2):
            if e[0] == f[0] or e[1] == f[1]:
                continue
            yield lvl, e, f


def build_constraints(graph: ProperLevelGraph) -> ConstraintSystem:
    system = ConstraintSystem(all_pairs(graph))
    for lvl, e, f in independent_edge_pairs(graph):
        lower = pair_key(lvl, e[0], f[0])
        upper = pair_key(lvl + 1, e[1], f[1])
        sign_lower = 0 if e[0] == lower.first else 1
        sign_upper = 0 if e[1] == upper.first else 1
        system.relate(lower, upper, sign_lower ^ sign_upper, (e, f))
    return system


def satisfiable(system: ConstraintSystem) -> bool:
    return not system.contradiction


def equivalence_classes(system: ConstraintSystem) -> list[OrderClass]:
    """The system's classes, ascending by representative; members carry
    their parity relative to the representative."""
    if system.contradiction:
        raise UnsatisfiableError("contradictory system has no class set")
    groups: dict[int, list[tuple[PairKey, int]]] = {}
    for i, pair in enumerate(system.pairs):
        root, parity = system._find(i)
        groups.setdefault(root, []).append((pair, parity))
    classes: list[OrderClass] = []
    for members in groups.values():
        members.sort()
        rep, rep_parity = members[0]
        classes.append(
            OrderClass(rep, tuple((p, par ^ rep_parity) for p, par in members))
        )
    classes.sort(key=lambda c: c.rep)
    return classes


def greedy_embed(graph: ProperLevelGraph, policy: GreedyPolicy | None = None) -> EmbedOutcome:
    """Assign classes greedily, forced closure assignments first.

    Free choices default to the lowest canonical representative at
    positive polarity. Requires a satisfiable system; a contradictory one
    already answers the planarity question, so it is rejected here.
    """
    system = build_constraints(graph)
    if not satisfiable(system):
        raise UnsatisfiableError("constraint system is contradictory")
    classes = equivalence_classes(system)
    level_vertices = {lvl: graph.vertices_on(lvl) for lvl in graph.levels()}
    return run_assignment(classes, level_vertices, policy or GreedyPolicy(), lambda rep: True)
