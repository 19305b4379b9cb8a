"""Differential fuzzing of the order-based algorithms against the oracle.

Each iteration derives a seed, generates a proper instance, asks the
oracle, and runs the targeted algorithms. A greedy embedder that reports
a contradiction on an oracle-planar instance is a false negative; a
two-pass run whose output drawing crosses is a non-planar output. Either
becomes a :class:`FailureReport` whose replay reproduces the evidence
byte for byte. Greedy shrinking then deletes edges and vertices one at a
time for as long as the same failure kind still reproduces.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from pathlib import Path

from .assign import EmbedOutcome, GreedyPolicy, format_outcome
from .crossings import count_crossings, crossing_pairs
from .formats import FormatError, parse_lgf, serialize_ldf, serialize_lgf
from .model import (
    Drawing,
    LevelGraph,
    ProperLevelGraph,
    canonical_drawing,
    is_proper,
    validate,
)
from .oracle import (
    DEFAULT_BUDGET,
    GeneratorConfig,
    OracleBudgetExceeded,
    brute_force_test,
    instance_seed,
    mix64,
    random_proper_graph,
)
from .pairs import PairKey
from .pairsat import UnsatisfiableError, all_pairs, build_constraints, greedy_embed, satisfiable
from .replay import (
    ALGO_HARRIGAN_HEALY,
    ALGO_HEALY_KUUSIK,
    ALGO_RANDERATH,
    parse_rpf,
    serialize_rpf,
)
from .vegraph import (
    HHChoices,
    _components,
    build_ve_graph,
    harrigan_healy_embed,
    healy_kuusik_embed,
    label_ve_graph,
    odd_cycle_test,
)

TARGET_SATCHECK = "satcheck"
TARGET_VEGRAPH = "vegraph-test"

KIND_FALSE_NEGATIVE = "false-negative"
KIND_NON_PLANAR_OUTPUT = "non-planar-output"
KIND_VERDICT_MISMATCH = "verdict-mismatch"

# Per-target salt for deriving policy seeds from the instance seed.
_TARGET_SALT = {
    ALGO_RANDERATH: 0x52414E44,
    ALGO_HEALY_KUUSIK: 0x484B5553,
    ALGO_HARRIGAN_HEALY: 0x48415248,
}

DEFAULT_TARGETS = (ALGO_RANDERATH, ALGO_HEALY_KUUSIK, ALGO_HARRIGAN_HEALY)


@dataclass(frozen=True)
class FuzzConfig:
    generator: GeneratorConfig = GeneratorConfig()
    iterations: int = 1000
    targets: tuple[str, ...] = DEFAULT_TARGETS
    shrink: bool = False
    oracle_budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.iterations < 1:
            raise ValueError("iterations must be positive")
        if not self.targets:
            raise ValueError("at least one fuzz target is required")
        known = {*DEFAULT_TARGETS, TARGET_SATCHECK, TARGET_VEGRAPH}
        for t in self.targets:
            if t not in known:
                raise ValueError(f"unknown fuzz target {t!r}")
        if self.oracle_budget < 1:
            raise ValueError("oracle budget must be positive")


@dataclass(frozen=True)
class FuzzStats:
    iterations: int
    budget_skips: int
    planar: int
    nonplanar: int


@dataclass(frozen=True)
class FailureReport:
    """One reproducible failure: the instance, the oracle's answer, the
    algorithm, the frozen replay, and the evidence its rerun must match."""

    graph: ProperLevelGraph
    oracle_planar: bool
    algorithm: str
    kind: str
    replay: GreedyPolicy | HHChoices | None
    evidence: str
    seed: int
    iteration: int


def fuzz(config: FuzzConfig) -> list[FailureReport]:
    reports, _ = run_fuzz(config)
    return reports


def run_fuzz(config: FuzzConfig) -> tuple[list[FailureReport], FuzzStats]:
    reports: list[FailureReport] = []
    budget_skips = planar = nonplanar = 0
    for i in range(config.iterations):
        seed = instance_seed(config.generator.seed, i)
        graph = random_proper_graph(replace(config.generator, seed=seed))
        try:
            verdict = brute_force_test(graph, budget=config.oracle_budget)
        except OracleBudgetExceeded:
            budget_skips += 1
            continue
        planar += verdict.planar
        nonplanar += not verdict.planar
        for report in _check_targets(config, graph, verdict.planar, seed, i):
            if config.shrink:
                report = shrink(report, oracle_budget=config.oracle_budget)
            reports.append(report)
    return reports, FuzzStats(config.iterations, budget_skips, planar, nonplanar)


def _check_targets(config, graph, oracle_planar, seed, iteration):
    for target in config.targets:
        if target == TARGET_SATCHECK:
            sat = satisfiable(build_constraints(graph))
            if sat != oracle_planar:
                yield _verdict_report(graph, oracle_planar, target, sat, seed, iteration)
            continue
        if target == TARGET_VEGRAPH:
            ok = odd_cycle_test(label_ve_graph(build_ve_graph(graph), canonical_drawing(graph))).consistent
            if ok != oracle_planar:
                yield _verdict_report(graph, oracle_planar, target, ok, seed, iteration)
            continue
        if not oracle_planar:
            continue
        policy_seed = mix64(seed ^ _TARGET_SALT[target])
        if target == ALGO_HARRIGAN_HEALY:
            report = _try_harrigan_healy(graph, policy_seed, seed, iteration)
        else:
            report = _try_greedy(target, graph, policy_seed, seed, iteration)
        if report is not None:
            yield report


def _verdict_report(graph, oracle_planar, target, answer, seed, iteration):
    evidence = f"oracle-planar {str(oracle_planar).lower()}\nanswer {str(answer).lower()}"
    return FailureReport(
        graph, oracle_planar, target, KIND_VERDICT_MISMATCH, None, evidence, seed, iteration
    )


def _run_greedy(algorithm: str, graph: ProperLevelGraph, policy: GreedyPolicy) -> EmbedOutcome:
    if algorithm == ALGO_RANDERATH:
        return greedy_embed(graph, policy)
    return healy_kuusik_embed(graph, canonical_drawing(graph), policy)


def _record_picks(outcome: EmbedOutcome) -> GreedyPolicy:
    picks = [(a.rep, a.value) for a in outcome.trace if a.cause == "free-choice"]
    return GreedyPolicy.replay(picks)


def _greedy_evidence(outcome: EmbedOutcome) -> str:
    return format_outcome(outcome)


def _try_greedy(algorithm, graph, policy_seed, seed, iteration):
    outcome = _run_greedy(algorithm, graph, GreedyPolicy.random_order(policy_seed))
    if outcome.success:
        if count_crossings(graph, outcome.drawing) > 0:
            # structurally unreachable; reported rather than trusted
            replay = _record_picks(outcome)
            evidence = _drawing_evidence(graph, outcome.drawing)
            return FailureReport(
                graph, True, algorithm, KIND_NON_PLANAR_OUTPUT, replay, evidence, seed, iteration
            )
        return None
    replay = _record_picks(outcome)
    replayed = _run_greedy(algorithm, graph, replay)
    evidence = _greedy_evidence(replayed)
    if replayed.success:
        raise AssertionError("replayed contradiction turned into a success")
    return FailureReport(
        graph, True, algorithm, KIND_FALSE_NEGATIVE, replay, evidence, seed, iteration
    )


def _random_choices(graph: ProperLevelGraph, policy_seed: int) -> HHChoices:
    lve = label_ve_graph(build_ve_graph(graph), canonical_drawing(graph))
    components, violation = _components(lve)
    if violation is not None:
        raise AssertionError("planar instance produced an odd cycle")
    rng = random.Random(policy_seed)
    entries = tuple(rng.choice(comp.nodes) for comp in components)
    order = sorted(lve.graph.nodes)
    rng.shuffle(order)
    return HHChoices(entries, tuple(order))


def _try_harrigan_healy(graph, policy_seed, seed, iteration):
    choices = _random_choices(graph, policy_seed)
    reference = canonical_drawing(graph)
    drawing = harrigan_healy_embed(graph, reference, choices)
    if count_crossings(graph, drawing) == 0:
        return None
    evidence = _drawing_evidence(graph, drawing)
    return FailureReport(
        graph, True, ALGO_HARRIGAN_HEALY, KIND_NON_PLANAR_OUTPUT, choices, evidence, seed, iteration
    )


def _drawing_evidence(graph: ProperLevelGraph, drawing: Drawing) -> str:
    pairs = crossing_pairs(graph, drawing)
    lines = [f"crossings {len(pairs)}"]
    for (a, b), (c, d) in pairs:
        lines.append(f"crossing {a}-{b} x {c}-{d}")
    lines.append(serialize_ldf(drawing).rstrip("\n"))
    return "\n".join(lines)


def reproduce(report: FailureReport) -> str | None:
    """Re-run the report's replay; the regenerated evidence, or None when
    the failure kind does not come back."""
    graph = report.graph
    if report.kind == KIND_VERDICT_MISMATCH:
        return report.evidence  # regenerating would re-run the oracle; not replayed
    if report.algorithm == ALGO_HARRIGAN_HEALY:
        drawing = harrigan_healy_embed(graph, canonical_drawing(graph), report.replay)
        if count_crossings(graph, drawing) == 0:
            return None
        return _drawing_evidence(graph, drawing)
    try:
        outcome = _run_greedy(report.algorithm, graph, report.replay)
    except UnsatisfiableError:
        return None
    if report.kind == KIND_FALSE_NEGATIVE:
        if outcome.success:
            return None
        return _greedy_evidence(outcome)
    if not outcome.success or count_crossings(graph, outcome.drawing) == 0:
        return None
    return _drawing_evidence(graph, outcome.drawing)


# --- shrinking ----------------------------------------------------------


class IrreproducibleReportError(ValueError):
    """The report's replay no longer produces its recorded evidence."""


def shrink(report: FailureReport, *, oracle_budget: int = DEFAULT_BUDGET) -> FailureReport:
    """Greedy 1-minimization: drop edges, then vertices, repeating until
    no single deletion keeps the same failure kind on an oracle-planar
    instance. Deterministic, and never grows the instance."""
    if report.kind == KIND_VERDICT_MISMATCH:
        raise ValueError("verdict mismatches are not replay-shrinkable")
    if reproduce(report) != report.evidence:
        raise IrreproducibleReportError("report does not reproduce its evidence")
    current = report
    while True:
        candidate = _shrink_step(current, oracle_budget)
        if candidate is None:
            return current
        current = candidate


def _shrink_step(report, oracle_budget):
    graph = report.graph
    for edge in sorted(graph.edges):
        smaller = _drop_edge(graph, edge)
        attempt = _attempt(report, smaller, oracle_budget)
        if attempt is not None:
            return attempt
    for v, _ in sorted(graph.vertices, key=lambda p: (p[1], p[0])):
        smaller = _drop_vertex(graph, v)
        attempt = _attempt(report, smaller, oracle_budget)
        if attempt is not None:
            return attempt
    return None


def _drop_edge(graph: ProperLevelGraph, edge) -> ProperLevelGraph:
    base = LevelGraph(
        graph.vertices, tuple(e for e in graph.edges if e != edge)
    ).canonical()
    return ProperLevelGraph(base, {})


def _drop_vertex(graph: ProperLevelGraph, v: str) -> ProperLevelGraph:
    base = LevelGraph(
        tuple(p for p in graph.vertices if p[0] != v),
        tuple(e for e in graph.edges if v not in e),
    ).canonical()
    return ProperLevelGraph(base, {})


def _surviving_pairs(graph: ProperLevelGraph) -> set[PairKey]:
    return set(all_pairs(graph))


def _fix_replay(replay, graph):
    alive = _surviving_pairs(graph)
    if isinstance(replay, GreedyPolicy):
        return GreedyPolicy.replay([(p, v) for p, v in replay.picks if p in alive])
    return HHChoices(
        tuple(p for p in replay.entries if p in alive),
        tuple(p for p in replay.order if p in alive),
    )


def _attempt(report, smaller, oracle_budget):
    if not smaller.vertices:
        return None
    try:
        verdict = brute_force_test(smaller, budget=oracle_budget)
    except OracleBudgetExceeded:
        return None
    if not verdict.planar:
        return None
    replay = _fix_replay(report.replay, smaller)
    candidate = replace(report, graph=smaller, replay=replay, evidence="")
    try:
        evidence = reproduce(candidate)
    except ValueError:
        return None
    if evidence is None:
        return None
    return replace(candidate, evidence=evidence)


# --- report directories ---------------------------------------------------

REPORT_HEADER = "REPORT 1"


def report_dir_name(report: FailureReport) -> str:
    return f"fail-{report.iteration:06d}-{report.algorithm}"


def save_report(report: FailureReport, directory) -> None:
    """Write graph.lgf, replay.rpf and report.txt into ``directory``."""
    path = Path(directory)
    path.mkdir(parents=True, exist_ok=True)
    (path / "graph.lgf").write_text(serialize_lgf(report.graph), encoding="utf-8")
    if report.replay is not None:
        (path / "replay.rpf").write_text(
            serialize_rpf(report.algorithm, report.replay), encoding="utf-8"
        )
    lines = [
        REPORT_HEADER,
        f"algorithm {report.algorithm}",
        f"kind {report.kind}",
        f"oracle-planar {str(report.oracle_planar).lower()}",
        f"seed {report.seed}",
        f"iteration {report.iteration}",
        "evidence",
        report.evidence,
    ]
    (path / "report.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_report(directory) -> FailureReport:
    path = Path(directory)
    base = parse_lgf((path / "graph.lgf").read_text(encoding="utf-8"))
    problems = validate(base)
    if problems:
        raise FormatError("; ".join(problems))
    if not is_proper(base):
        raise FormatError("report graph is not proper")
    graph = ProperLevelGraph(base.canonical(), {})
    text = (path / "report.txt").read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines or lines[0] != REPORT_HEADER:
        raise FormatError(f"missing {REPORT_HEADER!r} header")
    fields: dict[str, str] = {}
    evidence_at = None
    for i, line in enumerate(lines[1:], start=1):
        if line == "evidence":
            evidence_at = i + 1
            break
        key, _, value = line.partition(" ")
        fields[key] = value
    if evidence_at is None:
        raise FormatError("report.txt has no evidence block")
    try:
        algorithm = fields["algorithm"]
        kind = fields["kind"]
        oracle_planar = fields["oracle-planar"] == "true"
        seed = int(fields["seed"])
        iteration = int(fields["iteration"])
    except (KeyError, ValueError) as exc:
        raise FormatError(f"report.txt misses or mangles a field: {exc}") from None
    evidence = "\n".join(lines[evidence_at:]).rstrip("\n")
    replay = None
    replay_path = path / "replay.rpf"
    if replay_path.exists():
        replay_algo, replay = parse_rpf(replay_path.read_text(encoding="utf-8"))
        if replay_algo != algorithm:
            raise FormatError("replay.rpf algorithm disagrees with report.txt")
    return FailureReport(
        graph, oracle_planar, algorithm, kind, replay, evidence, seed, iteration
    )
