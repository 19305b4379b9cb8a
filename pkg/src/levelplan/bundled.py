"""The checked-in counterexample instance and its recorded runs.

One small oracle-planar instance is frozen under ``data/bundled/``
together with three replays: a greedy pick order that drives the
pair-constraint embedder into a contradiction, the same picks for the
component-swapping embedder, and traversal choices that make the
two-pass embedder emit a crossing drawing. ``scripts/find_bundled.py``
reconstructs the assets from scratch by constrained search.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .assign import GreedyPolicy
from .formats import parse_lgf
from .model import ProperLevelGraph
from .replay import (
    ALGO_HARRIGAN_HEALY,
    ALGO_HEALY_KUUSIK,
    ALGO_RANDERATH,
    parse_rpf,
)
from .vegraph import HHChoices

ASSET_FILES = (
    "graph.lgf",
    "randerath.rpf",
    "healy-kuusik.rpf",
    "harrigan-healy.rpf",
)


@dataclass(frozen=True)
class BundledCounterexample:
    graph: ProperLevelGraph
    randerath: GreedyPolicy
    healy_kuusik: GreedyPolicy
    harrigan_healy: HHChoices


def bundled_asset_texts() -> dict[str, str]:
    root = resources.files("levelplan").joinpath("data/bundled")
    return {name: root.joinpath(name).read_text(encoding="utf-8") for name in ASSET_FILES}


def bundled_counterexample() -> BundledCounterexample:
    texts = bundled_asset_texts()
    graph = ProperLevelGraph(parse_lgf(texts["graph.lgf"]).canonical(), {})
    algo_r, randerath = parse_rpf(texts["randerath.rpf"])
    algo_k, healy_kuusik = parse_rpf(texts["healy-kuusik.rpf"])
    algo_h, harrigan_healy = parse_rpf(texts["harrigan-healy.rpf"])
    if (algo_r, algo_k, algo_h) != (ALGO_RANDERATH, ALGO_HEALY_KUUSIK, ALGO_HARRIGAN_HEALY):
        raise ValueError("bundled replays are mislabeled")
    return BundledCounterexample(graph, randerath, healy_kuusik, harrigan_healy)
