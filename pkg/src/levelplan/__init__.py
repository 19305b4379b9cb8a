"""Level-planarity lab: refuted order-based embedders, an exact oracle,
and differential fuzzing glue.

The three embedders (randerath, healy-kuusik, harrigan-healy) are faithful
to their published form, including the gaps that make them incomplete or
unsound; `brute_force_test` is the ground truth they are fuzzed against.
"""

from .assign import (
    Assignment,
    Conflict,
    EmbedOutcome,
    ForcedOrder,
    GreedyPolicy,
    OrderClass,
    PolicyError,
    format_outcome,
)
from .bundled import BundledCounterexample, bundled_asset_texts, bundled_counterexample
from .crossings import (
    check_drawing,
    count_crossings,
    crossing_pairs,
    edges_by_gap,
    is_planar_drawing,
)
from .formats import FormatError, parse_ldf, parse_lgf, serialize_ldf, serialize_lgf
from .fuzz import (
    FailureReport,
    FuzzConfig,
    FuzzStats,
    IrreproducibleReportError,
    fuzz,
    load_report,
    report_dir_name,
    reproduce,
    run_fuzz,
    save_report,
    shrink,
)
from .model import (
    Drawing,
    DrawingMismatchError,
    InvalidGraphError,
    LevelGraph,
    ProperLevelGraph,
    canonical_drawing,
    is_proper,
    make_proper,
    validate,
)
from .oracle import (
    DEFAULT_BUDGET,
    GeneratorConfig,
    OracleBudgetExceeded,
    OracleVerdict,
    brute_force_test,
    instance_for_iteration,
    instance_seed,
    mix64,
    random_proper_graph,
)
from .pairs import PairKey, pair_key, parse_pair_token
from .pairsat import (
    ConstraintSystem,
    Relation,
    UnsatisfiableError,
    all_pairs,
    build_constraints,
    equivalence_classes,
    greedy_embed,
    independent_edge_pairs,
    satisfiable,
)
from .render import render_svg
from .replay import (
    ALGO_HARRIGAN_HEALY,
    ALGO_HEALY_KUUSIK,
    ALGO_RANDERATH,
    parse_rpf,
    serialize_rpf,
)
from .vegraph import (
    ChoicesError,
    HHChoices,
    LabeledVeGraph,
    OddCycleError,
    OddCycleVerdict,
    SwapAssignment,
    VeGraph,
    VeLink,
    build_ve_graph,
    harrigan_healy_embed,
    healy_kuusik_embed,
    label_ve_graph,
    odd_cycle_test,
    swap_assignment,
)

__version__ = "0.1.0"

__all__ = [
    "ALGO_HARRIGAN_HEALY",
    "ALGO_HEALY_KUUSIK",
    "ALGO_RANDERATH",
    "Assignment",
    "BundledCounterexample",
    "Conflict",
    "ConstraintSystem",
    "DEFAULT_BUDGET",
    "Drawing",
    "DrawingMismatchError",
    "EmbedOutcome",
    "FailureReport",
    "ForcedOrder",
    "FormatError",
    "FuzzConfig",
    "FuzzStats",
    "GeneratorConfig",
    "GreedyPolicy",
    "HHChoices",
    "InvalidGraphError",
    "IrreproducibleReportError",
    "LabeledVeGraph",
    "LevelGraph",
    "OddCycleError",
    "OddCycleVerdict",
    "OracleBudgetExceeded",
    "OracleVerdict",
    "OrderClass",
    "PairKey",
    "PolicyError",
    "ProperLevelGraph",
    "Relation",
    "SwapAssignment",
    "UnsatisfiableError",
    "VeGraph",
    "VeLink",
    "all_pairs",
    "build_constraints",
    "build_ve_graph",
    "bundled_asset_texts",
    "bundled_counterexample",
    "canonical_drawing",
    "check_drawing",
    "count_crossings",
    "crossing_pairs",
    "edges_by_gap",
    "equivalence_classes",
    "format_outcome",
    "fuzz",
    "greedy_embed",
    "harrigan_healy_embed",
    "healy_kuusik_embed",
    "independent_edge_pairs",
    "instance_for_iteration",
    "instance_seed",
    "is_planar_drawing",
    "is_proper",
    "label_ve_graph",
    "load_report",
    "make_proper",
    "mix64",
    "odd_cycle_test",
    "pair_key",
    "parse_ldf",
    "parse_lgf",
    "parse_pair_token",
    "parse_rpf",
    "random_proper_graph",
    "render_svg",
    "report_dir_name",
    "reproduce",
    "run_fuzz",
    "satisfiable",
    "save_report",
    "serialize_ldf",
    "serialize_lgf",
    "serialize_rpf",
    "shrink",
    "swap_assignment",
    "validate",
]
