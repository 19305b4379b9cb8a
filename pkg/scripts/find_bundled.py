#!/usr/bin/env python3
"""Search for the bundled counterexample and freeze its assets.

Wanted: a single oracle-planar instance with a recorded pick order that
drives the greedy embedder into a contradiction of a specific shape:

  * at least three classes are assigned by recorded free choice first,
  * the final conflict is a closure-forced order against a class that
    was itself closure-assigned,
  * that class chains exactly four pairs,
  * the same picks (retagged) also break healy-kuusik,
  * some recorded traversal choices make harrigan-healy return a
    drawing with at least one crossing.

Deletions that keep all of the above are applied greedily, so the frozen
instance is small without giving up the structure. Run from the repo
root; assets land in src/levelplan/data/bundled/.
"""

from __future__ import annotations

import string
import sys
from pathlib import Path

from levelplan.assign import EmbedOutcome, GreedyPolicy
from levelplan.bundled import ASSET_FILES
from levelplan.formats import serialize_lgf
from levelplan.fuzz import _drop_edge, _drop_vertex, _fix_replay, _random_choices, _record_picks
from levelplan.model import ProperLevelGraph, canonical_drawing
from levelplan.oracle import (
    GeneratorConfig,
    OracleBudgetExceeded,
    brute_force_test,
    instance_for_iteration,
    mix64,
)
from levelplan.pairsat import build_constraints, equivalence_classes, greedy_embed
from levelplan.replay import ALGO_HARRIGAN_HEALY, ALGO_HEALY_KUUSIK, ALGO_RANDERATH, serialize_rpf
from levelplan.crossings import count_crossings
from levelplan.vegraph import HHChoices, harrigan_healy_embed, healy_kuusik_embed

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "levelplan" / "data" / "bundled"

SEARCH_SALT = 0x48484353  # "HHCS": harrigan-healy choice search


def conflict_class(graph: ProperLevelGraph, outcome: EmbedOutcome):
    classes = equivalence_classes(build_constraints(graph))
    for cls in classes:
        if any(pair == outcome.conflict.forced.pair for pair, _ in cls.members):
            return cls
    raise AssertionError("conflict pair lost its class")


def conflict_shape(graph: ProperLevelGraph, outcome: EmbedOutcome, exact_four: bool) -> bool:
    """True when the contradiction has the wanted trace shape: a
    closure-forced order against a class that was itself closure-assigned,
    the class chaining four pairs (at least four while shrinking), after
    at least three recorded free choices."""
    conflict = outcome.conflict
    if conflict is None or conflict.forced.via is None:
        return False
    cls = conflict_class(graph, outcome)
    if len(cls.members) != 4 if exact_four else len(cls.members) < 4:
        return False
    assignment = next((a for a in outcome.trace if a.rep == cls.rep), None)
    if assignment is None or assignment.cause != "closure-forced":
        return False
    free = sum(1 for a in outcome.trace if a.cause == "free-choice")
    return free >= 3


def replay_conflicts(graph: ProperLevelGraph, replay: GreedyPolicy,
                     exact_four: bool = False) -> EmbedOutcome | None:
    """Re-run the recorded picks; return the outcome when the shape holds."""
    outcome = greedy_embed(graph, replay)
    if outcome.success or not conflict_shape(graph, outcome, exact_four):
        return None
    return outcome


def breaks_healy_kuusik(graph: ProperLevelGraph, replay: GreedyPolicy) -> bool:
    try:
        outcome = healy_kuusik_embed(graph, canonical_drawing(graph), replay)
    except ValueError:
        return False
    return not outcome.success


def find_hh_choices(graph: ProperLevelGraph, tries: int = 20000) -> HHChoices | None:
    reference = canonical_drawing(graph)
    for t in range(tries):
        choices = _random_choices(graph, mix64(t ^ SEARCH_SALT))
        drawing = harrigan_healy_embed(graph, reference, choices)
        if count_crossings(graph, drawing) > 0:
            return choices
    return None


def qualifies(graph: ProperLevelGraph, replay: GreedyPolicy) -> bool:
    if len(graph.vertices) == 0:
        return False
    if replay_conflicts(graph, replay) is None:
        return False
    try:
        if not brute_force_test(graph, budget=2 * 10**6).planar:
            return False
    except OracleBudgetExceeded:
        return False
    return breaks_healy_kuusik(graph, replay)


def shrink_keeping_shape(graph: ProperLevelGraph, replay: GreedyPolicy):
    """Greedy deletion pass that preserves `qualifies`."""
    while True:
        for edge in sorted(graph.base.edges):
            smaller = _drop_edge(graph, edge)
            fixed = _fix_replay(replay, smaller)
            if qualifies(smaller, fixed):
                graph, replay = smaller, fixed
                break
        else:
            for vid, _level in sorted(graph.base.vertices):
                if any(vid in e for e in graph.base.edges):
                    continue
                smaller = _drop_vertex(graph, vid)
                fixed = _fix_replay(replay, smaller)
                if qualifies(smaller, fixed):
                    graph, replay = smaller, fixed
                    break
            else:
                return graph, replay


def search():
    configs = [
        GeneratorConfig(levels=(3, 4), width=(2, 5), edge_probability=0.45, seed=11),
        GeneratorConfig(levels=(3, 5), width=(2, 5), edge_probability=0.4, seed=12),
        GeneratorConfig(levels=(4, 5), width=(2, 4), edge_probability=0.45, seed=13),
        GeneratorConfig(levels=(3, 4), width=(3, 5), edge_probability=0.35, seed=14),
    ]
    for config in configs:
        for i in range(6000):
            graph = instance_for_iteration(config, i)
            try:
                if not brute_force_test(graph, budget=2 * 10**6).planar:
                    continue
            except OracleBudgetExceeded:
                continue
            for attempt in range(16):
                policy = GreedyPolicy.random_order(mix64(i * 16 + attempt ^ config.seed))
                outcome = greedy_embed(graph, policy)
                if outcome.success or outcome.conflict is None:
                    continue
                replay = _record_picks(outcome)
                if replay_conflicts(graph, replay) is None:
                    continue
                if not breaks_healy_kuusik(graph, replay):
                    continue
                small, small_replay = shrink_keeping_shape(graph, replay)
                final = replay_conflicts(small, small_replay, exact_four=True)
                if final is None:
                    continue
                choices = find_hh_choices(small)
                if choices is None:
                    continue
                return small, small_replay, choices, (config, i, attempt)
    return None


def relabel(graph: ProperLevelGraph, replay: GreedyPolicy, choices: HHChoices):
    """Order-preserving rename to single letters.

    Per-level id order is kept, so every sorted sequence, pair key and
    parity is unchanged and all recorded behaviors carry over verbatim.
    """
    if len(graph.vertices) > len(string.ascii_lowercase):
        return graph, replay, choices
    letters = iter(string.ascii_lowercase)
    names = {}
    for level in sorted(graph.levels()):
        for v in graph.vertices_on(level):
            names[v] = next(letters)

    from levelplan.model import LevelGraph, make_proper
    from levelplan.pairs import PairKey

    base = LevelGraph(
        vertices=tuple((names[v], lvl) for v, lvl in graph.base.vertices),
        edges=tuple((names[a], names[b]) for a, b in graph.base.edges),
    )
    renamed = make_proper(base)

    def map_pair(pair: PairKey) -> PairKey:
        return PairKey(pair.level, names[pair.first], names[pair.second])

    new_replay = GreedyPolicy.replay([(map_pair(p), v) for p, v in replay.picks])
    new_choices = HHChoices(
        tuple(map_pair(p) for p in choices.entries),
        tuple(map_pair(p) for p in choices.order),
    )
    return renamed, new_replay, new_choices


def main() -> int:
    found = search()
    if found is None:
        print("no qualifying instance found", file=sys.stderr)
        return 1
    graph, replay, choices, origin = found
    graph, replay, choices = relabel(graph, replay, choices)
    assert qualifies(graph, replay)
    reference = canonical_drawing(graph)
    assert count_crossings(graph, harrigan_healy_embed(graph, reference, choices)) > 0
    config, iteration, attempt = origin
    print(f"found: generator seed {config.seed} p={config.edge_probability} "
          f"iteration {iteration} attempt {attempt}")
    print(f"vertices {len(graph.vertices)} edges {len(graph.edges)}")
    outcome = replay_conflicts(graph, replay, exact_four=True)
    assert outcome is not None
    free = sum(1 for a in outcome.trace if a.cause == "free-choice")
    cls = conflict_class(graph, outcome)
    print(f"free choices {free}, conflict pair {outcome.conflict.forced.pair.text()}, "
          f"class size {len(cls.members)}")

    OUT_DIR.mkdir(parents=True, exist_ok=True)
    texts = {
        "graph.lgf": serialize_lgf(graph.base),
        "randerath.rpf": serialize_rpf(ALGO_RANDERATH, replay),
        "healy-kuusik.rpf": serialize_rpf(ALGO_HEALY_KUUSIK, replay),
        "harrigan-healy.rpf": serialize_rpf(ALGO_HARRIGAN_HEALY, choices),
    }
    assert set(texts) == set(ASSET_FILES)
    for name, text in texts.items():
        path = OUT_DIR / name
        path.write_text(text, encoding="utf-8")
        print(f"wrote {path}")
        sys.stdout.write(text)
        print("---")
    return 0


if __name__ == "__main__":
    sys.exit(main())
