"""Brute-force planarity oracle and the seeded instance generator.

The oracle enumerates per-level permutations level by level, pruning any
prefix that already induces a crossing, and answers exactly. It is the
ground truth the faster order-based tests are fuzzed against, so it never
shares their machinery: the search touches nothing but the raw edge
arrays.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

import numpy as np

from . import _kernels
from .crossings import edges_by_gap
from .model import Drawing, InvalidGraphError, LevelGraph, ProperLevelGraph

DEFAULT_BUDGET = 10**8

MASK64 = (1 << 64) - 1


def mix64(x: int) -> int:
    """splitmix64 step: offset by the 64-bit golden gamma, then finalize.

    Pinned so that derived seeds (``mix64(seed ^ i)`` for iteration i)
    mean the same thing in every reimplementation.
    """
    z = (x + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class OracleBudgetExceeded(Exception):
    """The search hit its extension budget before reaching a verdict."""

    def __init__(self, budget: int, used: int):
        super().__init__(f"oracle budget exceeded ({used} > {budget} extensions)")
        self.budget = budget
        self.used = used


@dataclass(frozen=True)
class OracleVerdict:
    """Exact planarity answer; ``witness`` is a crossing-free drawing when
    planar, None otherwise. ``extensions`` is the search effort spent."""

    planar: bool
    witness: Drawing | None
    extensions: int


def _level_arrays(graph: ProperLevelGraph):
    levels = graph.levels()
    ids_by_level = [graph.vertices_on(lvl) for lvl in levels]
    local = {
        v: (j, i) for j, ids in enumerate(ids_by_level) for i, v in enumerate(ids)
    }
    widths = np.array([len(ids) for ids in ids_by_level], np.int64)
    level_off = np.zeros(len(levels) + 1, np.int64)
    np.cumsum(widths, out=level_off[1:])
    gaps = edges_by_gap(graph)
    level_index = {lvl: j for j, lvl in enumerate(levels)}
    lo_parts: list[list[int]] = [[] for _ in range(max(len(levels) - 1, 0))]
    hi_parts: list[list[int]] = [[] for _ in range(max(len(levels) - 1, 0))]
    for lvl, group in gaps.items():
        j = level_index[lvl]
        for a, b in group:
            lo_parts[j].append(local[a][1])
            hi_parts[j].append(local[b][1])
    gap_off = np.zeros(max(len(levels), 1), np.int64)
    for j in range(len(lo_parts)):
        gap_off[j + 1] = gap_off[j] + len(lo_parts[j])
    edge_lo = np.array([x for part in lo_parts for x in part], np.int64)
    edge_hi = np.array([x for part in hi_parts for x in part], np.int64)
    return levels, ids_by_level, widths, level_off, gap_off, edge_lo, edge_hi


def brute_force_test(graph: ProperLevelGraph, *, budget: int = DEFAULT_BUDGET) -> OracleVerdict:
    """Decide level planarity by exhaustive search with crossing pruning.

    Deterministic: levels ascend, candidate orders are lexicographic.
    Raises :class:`OracleBudgetExceeded` once more than ``budget``
    partial-drawing extensions have been placed.
    """
    if budget < 1:
        raise ValueError("budget must be positive")
    levels, ids_by_level, widths, level_off, gap_off, edge_lo, edge_hi = _level_arrays(graph)
    if not levels:
        return OracleVerdict(True, Drawing({}), 0)
    status, used, flat = _kernels.search_orders(
        widths, level_off, gap_off, edge_lo, edge_hi, np.int64(budget)
    )
    used = int(used)
    if status == _kernels.SEARCH_BUDGET:
        raise OracleBudgetExceeded(budget, used)
    if status == _kernels.SEARCH_PLANAR:
        orders = {
            lvl: tuple(ids_by_level[j][int(p)] for p in flat[level_off[j]:level_off[j + 1]])
            for j, lvl in enumerate(levels)
        }
        return OracleVerdict(True, Drawing(orders), used)
    return OracleVerdict(False, None, used)


@dataclass(frozen=True)
class GeneratorConfig:
    """Shape of random proper instances: level count range, per-level
    width range, edge probability, and the seed everything derives from."""

    levels: tuple[int, int] = (2, 4)
    width: tuple[int, int] = (1, 4)
    edge_probability: float = 0.5
    seed: int = 0

    def __post_init__(self):
        lo, hi = self.levels
        wlo, whi = self.width
        if not (1 <= lo <= hi):
            raise ValueError(f"bad level range {self.levels}")
        if not (1 <= wlo <= whi):
            raise ValueError(f"bad width range {self.width}")
        if not (0.0 <= self.edge_probability <= 1.0):
            raise ValueError(f"bad edge probability {self.edge_probability}")


def random_proper_graph(config: GeneratorConfig) -> ProperLevelGraph:
    """A proper level graph drawn deterministically from ``config.seed``."""
    rng = random.Random(config.seed)
    nlev = rng.randint(*config.levels)
    widths = [rng.randint(*config.width) for _ in range(nlev)]
    vertices: list[tuple[str, int]] = []
    names: list[list[str]] = []
    for lvl, w in enumerate(widths, start=1):
        row = [f"v{lvl}_{i}" for i in range(1, w + 1)]
        names.append(row)
        vertices.extend((v, lvl) for v in row)
    edges: list[tuple[str, str]] = []
    for lvl in range(nlev - 1):
        for a in names[lvl]:
            for b in names[lvl + 1]:
                if rng.random() < config.edge_probability:
                    edges.append((a, b))
    base = LevelGraph(tuple(vertices), tuple(edges)).canonical()
    return ProperLevelGraph(base, {})


def instance_seed(seed: int, iteration: int) -> int:
    return mix64((seed & MASK64) ^ (iteration & MASK64))


def instance_for_iteration(config: GeneratorConfig, iteration: int) -> ProperLevelGraph:
    return random_proper_graph(replace(config, seed=instance_seed(config.seed, iteration)))


def _proper_or_raise(graph: LevelGraph | ProperLevelGraph) -> ProperLevelGraph:
    if isinstance(graph, ProperLevelGraph):
        return graph
    levels = graph.level_map()
    if any(levels[b] - levels[a] != 1 for a, b in graph.edges):
        raise InvalidGraphError(["graph is not proper"])
    return ProperLevelGraph(graph, {})
