"""Differential fuzzing: determinism, report shape, shrinking, bundled assets."""

import pytest

from levelplan import (
    ALGO_HARRIGAN_HEALY,
    ALGO_HEALY_KUUSIK,
    ALGO_RANDERATH,
    FuzzConfig,
    GeneratorConfig,
    IrreproducibleReportError,
    brute_force_test,
    build_constraints,
    bundled_asset_texts,
    bundled_counterexample,
    canonical_drawing,
    count_crossings,
    fuzz,
    greedy_embed,
    harrigan_healy_embed,
    healy_kuusik_embed,
    load_report,
    parse_lgf,
    parse_rpf,
    report_dir_name,
    reproduce,
    run_fuzz,
    satisfiable,
    save_report,
    serialize_lgf,
    serialize_rpf,
    shrink,
)
from levelplan.fuzz import _shrink_step

BASE = GeneratorConfig(levels=(2, 4), width=(1, 4), edge_probability=0.5, seed=0)


def _config(**kw):
    merged = dict(
        generator=BASE,
        iterations=3000,
        targets=(ALGO_RANDERATH, ALGO_HEALY_KUUSIK, ALGO_HARRIGAN_HEALY),
        shrink=False,
    )
    merged.update(kw)
    return FuzzConfig(**merged)


@pytest.fixture(scope="module")
def campaign():
    return run_fuzz(_config())


def test_fuzz_is_deterministic(campaign):
    reports, stats = campaign
    again, stats2 = run_fuzz(_config())
    assert stats == stats2
    assert reports == again


def test_stats_account_for_every_iteration(campaign):
    _, stats = campaign
    assert stats.iterations == 3000
    assert stats.planar + stats.nonplanar + stats.budget_skips == 3000
    assert stats.budget_skips == 0


def test_all_three_embedders_fail_somewhere(campaign):
    reports, _ = campaign
    kinds = {(r.algorithm, r.kind) for r in reports}
    assert (ALGO_RANDERATH, "false-negative") in kinds
    assert (ALGO_HEALY_KUUSIK, "false-negative") in kinds
    assert (ALGO_HARRIGAN_HEALY, "non-planar-output") in kinds


def test_verdict_targets_never_disagree_with_oracle():
    reports, stats = run_fuzz(_config(targets=("satcheck", "vegraph-test"), iterations=800))
    assert stats.iterations == 800
    assert reports == []


def test_reports_reproduce_and_carry_replays(campaign):
    reports, _ = campaign
    assert reports
    for report in reports[:12]:
        assert report.oracle_planar is True
        assert brute_force_test(report.graph).planar
        if report.algorithm in (ALGO_RANDERATH, ALGO_HEALY_KUUSIK):
            assert report.replay is not None
            assert report.replay.mode == "replay"
        assert reproduce(report) == report.evidence


def test_false_negative_evidence_is_the_conflict_trace(campaign):
    reports, _ = campaign
    fn = next(r for r in reports if r.kind == "false-negative")
    assert "conflict" in fn.evidence
    assert fn.evidence.splitlines()[0].startswith("assignment ")


def test_non_planar_output_evidence_lists_crossings(campaign):
    reports, _ = campaign
    bad = next(r for r in reports if r.kind == "non-planar-output")
    lines = bad.evidence.splitlines()
    assert lines[0].startswith("crossings ")
    assert int(lines[0].split()[1]) >= 1
    assert any(line.startswith("crossing ") for line in lines)
    assert "LDF 1" in bad.evidence


def test_budget_skips_are_counted_not_reported():
    tight = _config(iterations=300, oracle_budget=20)
    reports, stats = run_fuzz(tight)
    assert stats.budget_skips > 0
    assert stats.planar + stats.nonplanar + stats.budget_skips == 300
    for report in reports:
        assert report.kind in ("false-negative", "non-planar-output")


def test_shrink_yields_one_minimal_reproducing_report(campaign):
    reports, _ = campaign
    for report in reports[:2]:
        small = shrink(report)
        assert len(small.graph.vertices) <= len(report.graph.vertices)
        assert reproduce(small) == small.evidence
        assert _shrink_step(small, oracle_budget=10**8) is None
        again = shrink(report)
        assert again == small


def test_shrink_config_flag_shrinks_all_reports():
    reports, _ = run_fuzz(_config(targets=(ALGO_RANDERATH,), shrink=True))
    assert reports
    for report in reports:
        assert _shrink_step(report, oracle_budget=10**8) is None


def test_report_dir_round_trip(tmp_path, campaign):
    reports, _ = campaign
    report = reports[0]
    directory = tmp_path / report_dir_name(report)
    save_report(report, directory)
    assert (directory / "graph.lgf").is_file()
    assert (directory / "report.txt").is_file()
    if report.replay is not None:
        assert (directory / "replay.rpf").is_file()
    loaded = load_report(directory)
    assert loaded == report
    assert reproduce(loaded) == report.evidence


def test_report_dir_name_is_stable(campaign):
    reports, _ = campaign
    report = reports[0]
    assert report_dir_name(report) == f"fail-{report.iteration:06d}-{report.algorithm}"


def test_tampered_report_is_rejected(tmp_path, campaign):
    reports, _ = campaign
    report = reports[0]
    directory = tmp_path / "case"
    save_report(report, directory)
    text = (directory / "report.txt").read_text(encoding="utf-8")
    first_evidence_line = report.evidence.splitlines()[0]
    (directory / "report.txt").write_text(
        text.replace(first_evidence_line, "crossings 999"), encoding="utf-8"
    )
    loaded = load_report(directory)
    assert loaded.evidence != report.evidence
    assert reproduce(loaded) != loaded.evidence
    with pytest.raises(IrreproducibleReportError):
        shrink(loaded)


def test_bundled_counterexample_breaks_all_three():
    bundle = bundled_counterexample()
    g = bundle.graph
    assert brute_force_test(g).planar
    assert satisfiable(build_constraints(g))

    randerath = greedy_embed(g, bundle.randerath)
    assert not randerath.success
    assert randerath.conflict is not None
    assert randerath.conflict.forced.via is not None

    hk = healy_kuusik_embed(g, canonical_drawing(g), bundle.healy_kuusik)
    assert not hk.success
    assert hk.conflict is not None

    hh = harrigan_healy_embed(g, canonical_drawing(g), bundle.harrigan_healy)
    assert count_crossings(g, hh) >= 1


def test_bundled_assets_are_byte_stable():
    texts = bundled_asset_texts()
    assert set(texts) == {
        "graph.lgf",
        "randerath.rpf",
        "healy-kuusik.rpf",
        "harrigan-healy.rpf",
    }
    assert serialize_lgf(parse_lgf(texts["graph.lgf"])) == texts["graph.lgf"]
    for name in ("randerath.rpf", "healy-kuusik.rpf", "harrigan-healy.rpf"):
        algo, payload = parse_rpf(texts[name])
        assert name.startswith(algo)
        assert serialize_rpf(algo, payload) == texts[name]


def test_fuzz_wrapper_returns_reports_only():
    config = _config(iterations=400)
    assert fuzz(config) == run_fuzz(config)[0]


def test_config_validation():
    with pytest.raises(ValueError):
        _config(iterations=0)
    with pytest.raises(ValueError):
        _config(targets=("unknown-algo",))
    with pytest.raises(ValueError):
        _config(targets=())
