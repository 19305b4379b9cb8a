"""Command line front end.

Exit codes: 0 success or planar, 1 not planar / embed failure / crossings
found, 2 usage error, 3 malformed input, 4 oracle budget exceeded. All
randomness is seeded; ``--seed`` defaults to 0, never the clock.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .assign import GreedyPolicy, PolicyError, format_outcome
from .bundled import bundled_asset_texts
from .crossings import count_crossings
from .formats import FormatError, parse_ldf, parse_lgf, serialize_ldf, serialize_lgf
from .fuzz import (
    FuzzConfig,
    IrreproducibleReportError,
    load_report,
    report_dir_name,
    run_fuzz,
    save_report,
    shrink,
)
from .model import (
    DrawingMismatchError,
    InvalidGraphError,
    ProperLevelGraph,
    canonical_drawing,
    make_proper,
    validate,
)
from .oracle import DEFAULT_BUDGET, GeneratorConfig, OracleBudgetExceeded, brute_force_test
from .pairsat import UnsatisfiableError, build_constraints, greedy_embed, satisfiable
from .render import render_svg
from .replay import (
    ALGO_HARRIGAN_HEALY,
    ALGO_HEALY_KUUSIK,
    ALGO_RANDERATH,
    parse_rpf,
)
from .vegraph import (
    ChoicesError,
    HHChoices,
    OddCycleError,
    build_ve_graph,
    harrigan_healy_embed,
    healy_kuusik_embed,
    label_ve_graph,
    odd_cycle_test,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_MALFORMED = 3
EXIT_BUDGET = 4


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_proper(path: str) -> ProperLevelGraph:
    """Parse, validate and properize a graph file."""
    base = parse_lgf(_read(path))
    problems = validate(base)
    if problems:
        raise FormatError("; ".join(problems))
    return make_proper(base)


def _emit(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def _reference_for(graph: ProperLevelGraph, path: str | None):
    if path is None:
        return canonical_drawing(graph)
    return parse_ldf(_read(path))


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers in {text!r}") from None


def _cmd_parse(args) -> int:
    base = parse_lgf(_read(args.graph))
    problems = validate(base)
    if problems:
        for p in problems:
            print(p, file=sys.stderr)
        return EXIT_MALFORMED
    _emit(serialize_lgf(base), args.output)
    return EXIT_OK


def _cmd_check(args) -> int:
    graph = _load_proper(args.graph)
    if args.algo == "oracle":
        planar = brute_force_test(graph, budget=args.budget).planar
    elif args.algo == "satcheck":
        planar = satisfiable(build_constraints(graph))
    else:
        lve = label_ve_graph(build_ve_graph(graph), canonical_drawing(graph))
        planar = odd_cycle_test(lve).consistent
    print("planar" if planar else "not planar")
    return EXIT_OK if planar else EXIT_FAIL


def _greedy_policy(args, parser) -> GreedyPolicy:
    if args.replay is not None:
        algo, replay = parse_rpf(_read(args.replay))
        if algo != args.algo:
            parser.error(f"replay file is for {algo!r}, not {args.algo!r}")
        return replay
    if args.policy == "random":
        return GreedyPolicy.random_order(args.seed)
    return GreedyPolicy.canonical()


def _cmd_embed(args, parser) -> int:
    graph = _load_proper(args.graph)
    if args.algo == "oracle":
        verdict = brute_force_test(graph, budget=args.budget)
        if not verdict.planar:
            print("not planar")
            return EXIT_FAIL
        _emit(serialize_ldf(verdict.witness), args.output)
        return EXIT_OK
    if args.algo == ALGO_HARRIGAN_HEALY:
        choices = HHChoices()
        if args.replay is not None:
            algo, parsed = parse_rpf(_read(args.replay))
            if algo != args.algo:
                parser.error(f"replay file is for {algo!r}, not {args.algo!r}")
            choices = parsed
        reference = _reference_for(graph, args.reference)
        drawing = harrigan_healy_embed(graph, reference, choices)
        _emit(serialize_ldf(drawing), args.output)
        crossings = count_crossings(graph, drawing)
        if crossings:
            print(f"not planar drawing: {crossings} crossings", file=sys.stderr)
            return EXIT_FAIL
        return EXIT_OK
    policy = _greedy_policy(args, parser)
    try:
        if args.algo == ALGO_RANDERATH:
            outcome = greedy_embed(graph, policy)
        else:
            reference = _reference_for(graph, args.reference)
            outcome = healy_kuusik_embed(graph, reference, policy)
    except (UnsatisfiableError, OddCycleError) as exc:
        print(f"not planar: {exc}")
        return EXIT_FAIL
    if outcome.success:
        _emit(serialize_ldf(outcome.drawing), args.output)
        return EXIT_OK
    _emit(format_outcome(outcome) + "\n", args.output)
    return EXIT_FAIL


def _cmd_verify(args) -> int:
    graph = _load_proper(args.graph)
    drawing = parse_ldf(_read(args.drawing))
    crossings = count_crossings(graph, drawing)
    print(f"crossings {crossings}")
    return EXIT_OK if crossings == 0 else EXIT_FAIL


def _cmd_properize(args) -> int:
    graph = _load_proper(args.graph)
    _emit(serialize_lgf(graph), args.output)
    return EXIT_OK


def _cmd_fuzz(args) -> int:
    generator = GeneratorConfig(
        levels=args.levels,
        width=args.widths,
        edge_probability=args.edge_prob,
        seed=args.seed,
    )
    config = FuzzConfig(
        generator=generator,
        iterations=args.iterations,
        targets=tuple(args.targets.split(",")),
        shrink=args.shrink,
        oracle_budget=args.budget,
    )
    reports, stats = run_fuzz(config)
    out = Path(args.out)
    for report in reports:
        save_report(report, out / report_dir_name(report))
    print(
        f"iterations {stats.iterations} planar {stats.planar} "
        f"nonplanar {stats.nonplanar} budget-skips {stats.budget_skips}"
    )
    for report in reports:
        print(f"{report_dir_name(report)} {report.kind}")
    return EXIT_OK


def _cmd_shrink(args) -> int:
    report = load_report(args.report)
    small = shrink(report, oracle_budget=args.budget)
    save_report(small, args.out)
    print(
        f"vertices {len(report.graph.vertices)} -> {len(small.graph.vertices)} "
        f"edges {len(report.graph.edges)} -> {len(small.graph.edges)}"
    )
    return EXIT_OK


def _cmd_render(args) -> int:
    graph = _load_proper(args.graph)
    drawing = parse_ldf(_read(args.drawing))
    _emit(render_svg(graph, drawing, label_dummies=args.label_dummies), args.output)
    return EXIT_OK


def _cmd_bundled(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, text in bundled_asset_texts().items():
        (out / name).write_text(text, encoding="utf-8")
        print(out / name)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="levelplan",
        description="Level planarity: oracle, order-based embedders, fuzzing, rendering.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="validate a graph file and echo it canonically")
    p.add_argument("graph")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("check", help="decide level planarity")
    p.add_argument("graph")
    p.add_argument("--algo", choices=("oracle", "satcheck", "vegraph-test"), default="oracle")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("embed", help="compute a drawing or a failure report")
    p.add_argument("graph")
    p.add_argument(
        "--algo",
        choices=("oracle", ALGO_RANDERATH, ALGO_HEALY_KUUSIK, ALGO_HARRIGAN_HEALY),
        default="oracle",
    )
    p.add_argument("--replay", default=None, help="RPF file fixing the free choices")
    p.add_argument("--reference", default=None, help="LDF reference drawing")
    p.add_argument("--policy", choices=("canonical", "random"), default="canonical")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("verify", help="count crossings of a drawing")
    p.add_argument("graph")
    p.add_argument("drawing")

    p = sub.add_parser("properize", help="subdivide long edges with dummy vertices")
    p.add_argument("graph")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("fuzz", help="differential-fuzz the embedders against the oracle")
    p.add_argument("--iterations", "-n", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--levels", type=_parse_range, default=(2, 4))
    p.add_argument("--widths", type=_parse_range, default=(1, 4))
    p.add_argument("--edge-prob", type=float, default=0.5)
    p.add_argument(
        "--targets",
        default=f"{ALGO_RANDERATH},{ALGO_HEALY_KUUSIK},{ALGO_HARRIGAN_HEALY}",
        help="comma-separated subset of randerath,healy-kuusik,harrigan-healy,satcheck,vegraph-test",
    )
    p.add_argument("--shrink", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out", default="fuzz-reports")

    p = sub.add_parser("shrink", help="1-minimize a failure report directory")
    p.add_argument("report")
    p.add_argument("--out", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("render", help="render a drawing to SVG")
    p.add_argument("graph")
    p.add_argument("drawing")
    p.add_argument("--label-dummies", action="store_true")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("bundled", help="export the bundled counterexample assets")
    p.add_argument("--out", default="bundled-assets")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "parse":
            return _cmd_parse(args)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "embed":
            return _cmd_embed(args, parser)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "properize":
            return _cmd_properize(args)
        if args.command == "fuzz":
            return _cmd_fuzz(args)
        if args.command == "shrink":
            return _cmd_shrink(args)
        if args.command == "render":
            return _cmd_render(args)
        if args.command == "bundled":
            return _cmd_bundled(args)
        parser.error(f"unknown command {args.command!r}")
    except OracleBudgetExceeded as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BUDGET
    except (
        FormatError,
        InvalidGraphError,
        DrawingMismatchError,
        PolicyError,
        ChoicesError,
        IrreproducibleReportError,
        OSError,
    ) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_MALFORMED
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
