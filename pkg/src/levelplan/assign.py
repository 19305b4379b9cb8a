"""Greedy class assignment with eager per-level transitive closure.

The engine underneath both order-based embedders. Input is a partition
of all same-level vertex pairs into classes; inside a class, each pair's
order is tied to the representative's order through a parity. Assigning
a class therefore decides every member pair at once.

The loop alternates two steps. While any forced order is pending, pop it
(FIFO) and assign that pair's whole class accordingly. Otherwise make a
free choice per policy and assign that class. After every decided pair
(lo < hi) the closure derives p < q for all decided predecessors p of lo
and successors q of hi; a derivation that contradicts a decided or
already-queued order is the contradiction outcome. When every class is
assigned without conflict, each level's decided relation is a transitive
tournament, i.e. a total order, and that is the returned drawing.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .model import Drawing
from .pairs import PairKey, pair_key


class PolicyError(ValueError):
    """A replay list names an unknown pair or the same class twice."""


@dataclass(frozen=True)
class GreedyPolicy:
    """Which undecided class gets assigned next, and to what value.

    mode "canonical": ascending representatives, the embedder's default
    value rule. mode "random": a seeded shuffle fixes pick order and
    values. mode "replay": explicit (pair, order) picks consumed in
    order, then the canonical rule for whatever remains. Values always
    state the named pair's order, True meaning id-ascending.
    """

    mode: str = "canonical"
    seed: int = 0
    picks: tuple[tuple[PairKey, bool], ...] = ()

    def __post_init__(self):
        if self.mode not in ("canonical", "random", "replay"):
            raise ValueError(f"unknown policy mode {self.mode!r}")
        if self.mode != "replay" and self.picks:
            raise ValueError("picks are only meaningful in replay mode")
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            # an unseeded random policy would be nondeterministic
            raise ValueError(f"policy seed must be an int, got {self.seed!r}")

    @classmethod
    def canonical(cls) -> GreedyPolicy:
        return cls()

    @classmethod
    def random_order(cls, seed: int) -> GreedyPolicy:
        return cls(mode="random", seed=seed)

    @classmethod
    def replay(cls, picks) -> GreedyPolicy:
        return cls(mode="replay", picks=tuple(picks))


@dataclass(frozen=True)
class OrderClass:
    """One class: a representative pair plus (member, parity) rows;
    parity 1 means the member's order is the representative's, negated."""

    rep: PairKey
    members: tuple[tuple[PairKey, int], ...]


@dataclass(frozen=True)
class ForcedOrder:
    """A closure derivation: ``pair`` must take ``value`` because the
    decided pair ``via`` (with order ``via_value``) chains onto it."""

    pair: PairKey
    value: bool
    via: PairKey
    via_value: bool


@dataclass(frozen=True)
class Assignment:
    rep: PairKey
    value: bool
    cause: str  # "free-choice" or "closure-forced"
    forced: ForcedOrder | None = None


@dataclass(frozen=True)
class Conflict:
    """The failing closure step: ``forced`` demands one order while the
    pair is already decided (or queued) as ``existing``."""

    forced: ForcedOrder
    existing: bool


@dataclass(frozen=True)
class EmbedOutcome:
    """Either a drawing, or a contradiction with its derivation trace."""

    drawing: Drawing | None
    trace: tuple[Assignment, ...]
    conflict: Conflict | None

    @property
    def success(self) -> bool:
        return self.drawing is not None


def _free_picks(policy, classes, class_of, parity, default_value):
    """Yield (class index, representative order) free choices, unassigned
    classes only being the caller's concern to skip."""
    n = len(classes)
    if policy.mode == "canonical":
        for idx in range(n):
            yield idx, default_value(classes[idx].rep)
        return
    if policy.mode == "random":
        rng = random.Random(policy.seed)
        order = list(range(n))
        rng.shuffle(order)
        for idx in order:
            yield idx, rng.random() < 0.5
        return
    named: set[int] = set()
    resolved: list[tuple[int, bool]] = []
    for pair, value in policy.picks:
        idx = class_of.get(pair)
        if idx is None:
            raise PolicyError(f"replay names unknown pair {pair.text()}")
        if idx in named:
            raise PolicyError(f"replay names class of {pair.text()} twice")
        named.add(idx)
        resolved.append((idx, value ^ bool(parity[pair])))
    yield from resolved
    for idx in range(n):
        yield idx, default_value(classes[idx].rep)


def run_assignment(
    classes: list[OrderClass],
    level_vertices: dict[int, list[str]],
    policy: GreedyPolicy,
    default_value,
) -> EmbedOutcome:
    classes = sorted(classes, key=lambda c: c.rep)
    class_of: dict[PairKey, int] = {}
    parity: dict[PairKey, int] = {}
    for idx, cls in enumerate(classes):
        for pair, par in cls.members:
            class_of[pair] = idx
            parity[pair] = par

    decided: dict[PairKey, bool] = {}
    assigned = [False] * len(classes)
    before: dict[int, dict[str, set[str]]] = {}
    after: dict[int, dict[str, set[str]]] = {}
    for lvl, verts in level_vertices.items():
        before[lvl] = {v: set() for v in verts}
        after[lvl] = {v: set() for v in verts}
    queue: deque[ForcedOrder] = deque()
    queued: dict[PairKey, ForcedOrder] = {}
    trace: list[Assignment] = []

    def close_over(pair: PairKey, value: bool) -> Conflict | None:
        lo, hi = (pair.first, pair.second) if value else (pair.second, pair.first)
        lvl = pair.level
        preds = sorted(before[lvl][lo] | {lo})
        succs = sorted(after[lvl][hi] | {hi})
        for p in preds:
            for q in succs:
                if p == lo and q == hi:
                    continue
                if p == q:
                    # p is decided before lo and after hi, so the sweep is
                    # closing an order cycle; the (p, hi) and (lo, p)
                    # combinations below surface it as a pair conflict.
                    continue
                derived = pair_key(lvl, p, q)
                derived_value = p == derived.first
                forced = ForcedOrder(derived, derived_value, pair, value)
                prev = decided.get(derived)
                if prev is not None:
                    if prev != derived_value:
                        return Conflict(forced, prev)
                    continue
                pending = queued.get(derived)
                if pending is not None:
                    if pending.value != derived_value:
                        return Conflict(forced, pending.value)
                    continue
                queued[derived] = forced
                queue.append(forced)
        after[lvl][lo].add(hi)
        before[lvl][hi].add(lo)
        return None

    def decide_class(idx: int, rep_value: bool, cause: str, forced: ForcedOrder | None) -> Conflict | None:
        assigned[idx] = True
        trace.append(Assignment(classes[idx].rep, rep_value, cause, forced))
        newly: list[tuple[PairKey, bool]] = []
        for pair, par in classes[idx].members:
            value = rep_value ^ bool(par)
            decided[pair] = value
            newly.append((pair, value))
        for pair, value in newly:
            conflict = close_over(pair, value)
            if conflict is not None:
                return conflict
        return None

    def drain() -> Conflict | None:
        while queue:
            forced = queue.popleft()
            queued.pop(forced.pair, None)
            prev = decided.get(forced.pair)
            if prev is not None:
                if prev != forced.value:
                    return Conflict(forced, prev)
                continue
            idx = class_of[forced.pair]
            rep_value = forced.value ^ bool(parity[forced.pair])
            conflict = decide_class(idx, rep_value, "closure-forced", forced)
            if conflict is not None:
                return conflict
        return None

    picks = _free_picks(policy, classes, class_of, parity, default_value)
    conflict: Conflict | None = None
    while conflict is None:
        conflict = drain()
        if conflict is not None:
            break
        idx, rep_value = _next_unassigned(picks, assigned)
        if idx is None:
            return EmbedOutcome(_build_drawing(level_vertices, decided), tuple(trace), None)
        conflict = decide_class(idx, rep_value, "free-choice", None)
    return EmbedOutcome(None, tuple(trace), conflict)


def _next_unassigned(picks, assigned):
    for idx, value in picks:
        if not assigned[idx]:
            return idx, value
    return None, None


def _build_drawing(level_vertices: dict[int, list[str]], decided: dict[PairKey, bool]) -> Drawing:
    orders: dict[int, tuple[str, ...]] = {}
    for lvl, verts in level_vertices.items():
        vs = sorted(verts)
        position = {v: 0 for v in vs}
        for i, a in enumerate(vs):
            for b in vs[i + 1:]:
                if decided[PairKey(lvl, a, b)]:
                    position[b] += 1
                else:
                    position[a] += 1
        seq: list[str | None] = [None] * len(vs)
        for v, p in position.items():
            if seq[p] is not None:
                raise AssertionError(f"level {lvl} order is not total")
            seq[p] = v
        orders[lvl] = tuple(seq)  # type: ignore[arg-type]
    return Drawing(orders)


def format_outcome(outcome: EmbedOutcome) -> str:
    """Stable one-line-per-step rendering of a run, used as evidence."""
    lines = []
    for step in outcome.trace:
        tail = ""
        if step.forced is not None:
            tail = (
                f" forced {step.forced.pair.text()}={_b(step.forced.value)}"
                f" via {step.forced.via.text()}={_b(step.forced.via_value)}"
            )
        lines.append(f"assignment {step.cause} {step.rep.text()}={_b(step.value)}{tail}")
    if outcome.conflict is not None:
        c = outcome.conflict
        lines.append(
            f"conflict {c.forced.pair.text()}={_b(c.forced.value)}"
            f" via {c.forced.via.text()}={_b(c.forced.via_value)}"
            f" against decided {_b(c.existing)}"
        )
    elif outcome.drawing is not None:
        lines.append("success")
    return "\n".join(lines)


def _b(value: bool) -> str:
    return "true" if value else "false"
