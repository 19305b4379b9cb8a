"""Command line behavior and exit codes."""

import pytest

from levelplan import cli, parse_ldf, parse_lgf

from helpers import graph

PLANAR_LGF = """LGF 1
v a 1
v b 1
v c 2
v d 2
v e 3
e a c
e b d
e c e
e d e
"""

K22_LGF = """LGF 1
v a 1
v b 1
v c 2
v d 2
e a c
e a d
e b c
e b d
"""

LONG_EDGE_LGF = """LGF 1
v a 1
v b 3
v m 2
e a b
e a m
"""


@pytest.fixture
def planar(tmp_path):
    path = tmp_path / "planar.lgf"
    path.write_text(PLANAR_LGF, encoding="utf-8")
    return path


@pytest.fixture
def k22(tmp_path):
    path = tmp_path / "k22.lgf"
    path.write_text(K22_LGF, encoding="utf-8")
    return path


def test_parse_echoes_canonically(planar, tmp_path, capsys):
    out = tmp_path / "echo.lgf"
    assert cli.main(["parse", str(planar), "-o", str(out)]) == 0
    assert out.read_text(encoding="utf-8") == PLANAR_LGF


def test_parse_rejects_invalid_graph(tmp_path, capsys):
    bad = tmp_path / "bad.lgf"
    bad.write_text("LGF 1\nv a 1\ne a a\n", encoding="utf-8")
    assert cli.main(["parse", str(bad)]) == 3
    assert "self-loop" in capsys.readouterr().err


def test_parse_rejects_malformed_file(tmp_path, capsys):
    bad = tmp_path / "bad.lgf"
    bad.write_text("not a graph\n", encoding="utf-8")
    assert cli.main(["parse", str(bad)]) == 3


def test_missing_file_is_reported(tmp_path, capsys):
    assert cli.main(["check", str(tmp_path / "nope.lgf")]) == 3


@pytest.mark.parametrize("algo", ["oracle", "satcheck", "vegraph-test"])
def test_check_exit_codes(planar, k22, algo, capsys):
    assert cli.main(["check", str(planar), "--algo", algo]) == 0
    assert "planar" in capsys.readouterr().out
    assert cli.main(["check", str(k22), "--algo", algo]) == 1
    assert "not planar" in capsys.readouterr().out


def test_check_budget_exit_code(k22, capsys):
    assert cli.main(["check", str(k22), "--budget", "1"]) == 4


def test_embed_oracle_writes_witness(planar, tmp_path, capsys):
    out = tmp_path / "w.ldf"
    assert cli.main(["embed", str(planar), "-o", str(out)]) == 0
    d = parse_ldf(out.read_text(encoding="utf-8"))
    assert sorted(v for seq in d.orders.values() for v in seq) == list("abcde")


def test_embed_oracle_reports_nonplanar(k22, capsys):
    assert cli.main(["embed", str(k22)]) == 1
    assert "not planar" in capsys.readouterr().out


def test_embed_rejects_satcheck_as_usage_error(planar, capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(["embed", str(planar), "--algo", "satcheck"])
    assert err.value.code == 2


def test_embed_randerath_success(planar, tmp_path):
    out = tmp_path / "d.ldf"
    assert cli.main(["embed", str(planar), "--algo", "randerath", "-o", str(out)]) == 0
    parse_ldf(out.read_text(encoding="utf-8"))


def test_embed_randerath_unsat_exits_one(k22, capsys):
    assert cli.main(["embed", str(k22), "--algo", "randerath"]) == 1
    assert "not planar" in capsys.readouterr().out


def test_embed_auto_properizes_and_keeps_ldf_proper(tmp_path):
    src = tmp_path / "long.lgf"
    src.write_text(LONG_EDGE_LGF, encoding="utf-8")
    out = tmp_path / "d.ldf"
    assert cli.main(["embed", str(src), "--algo", "randerath", "-o", str(out)]) == 0
    d = parse_ldf(out.read_text(encoding="utf-8"))
    assert "a__b__1" in d.orders[2]


def test_embed_replay_reproduces_bundled_failure(tmp_path, capsys):
    assets = tmp_path / "assets"
    assert cli.main(["bundled", "--out", str(assets)]) == 0
    capsys.readouterr()
    out = tmp_path / "fail.txt"
    code = cli.main([
        "embed", str(assets / "graph.lgf"),
        "--algo", "randerath",
        "--replay", str(assets / "randerath.rpf"),
        "-o", str(out),
    ])
    assert code == 1
    text = out.read_text(encoding="utf-8")
    assert text.splitlines()[-1].startswith("conflict ")
    assert cli.main(["check", str(assets / "graph.lgf")]) == 0


def test_embed_replay_algo_mismatch_is_usage_error(tmp_path, capsys):
    assets = tmp_path / "assets"
    cli.main(["bundled", "--out", str(assets)])
    capsys.readouterr()
    with pytest.raises(SystemExit) as err:
        cli.main([
            "embed", str(assets / "graph.lgf"),
            "--algo", "healy-kuusik",
            "--replay", str(assets / "randerath.rpf"),
        ])
    assert err.value.code == 2


def test_embed_harrigan_healy_flags_crossings(tmp_path, capsys):
    assets = tmp_path / "assets"
    cli.main(["bundled", "--out", str(assets)])
    capsys.readouterr()
    out = tmp_path / "hh.ldf"
    code = cli.main([
        "embed", str(assets / "graph.lgf"),
        "--algo", "harrigan-healy",
        "--replay", str(assets / "harrigan-healy.rpf"),
        "-o", str(out),
    ])
    assert code == 1
    assert "crossings" in capsys.readouterr().err
    parse_ldf(out.read_text(encoding="utf-8"))


def test_verify_counts_crossings(planar, tmp_path, capsys):
    good = tmp_path / "good.ldf"
    good.write_text("LDF 1\nl 1 a b\nl 2 c d\nl 3 e\n", encoding="utf-8")
    assert cli.main(["verify", str(planar), str(good)]) == 0
    assert capsys.readouterr().out.strip() == "crossings 0"
    bad = tmp_path / "bad.ldf"
    bad.write_text("LDF 1\nl 1 b a\nl 2 c d\nl 3 e\n", encoding="utf-8")
    assert cli.main(["verify", str(planar), str(bad)]) == 1
    assert capsys.readouterr().out.strip() == "crossings 1"


def test_verify_rejects_mismatched_drawing(planar, tmp_path, capsys):
    wrong = tmp_path / "wrong.ldf"
    wrong.write_text("LDF 1\nl 1 a b\n", encoding="utf-8")
    assert cli.main(["verify", str(planar), str(wrong)]) == 3


def test_properize_outputs_proper_graph(tmp_path):
    src = tmp_path / "long.lgf"
    src.write_text(LONG_EDGE_LGF, encoding="utf-8")
    out = tmp_path / "proper.lgf"
    assert cli.main(["properize", str(src), "-o", str(out)]) == 0
    g = parse_lgf(out.read_text(encoding="utf-8"))
    lv = g.level_map()
    assert all(lv[b] - lv[a] == 1 for a, b in g.edges)
    assert ("a__b__1", 2) in g.vertices


def test_fuzz_writes_report_dirs(tmp_path, capsys):
    out = tmp_path / "reports"
    code = cli.main([
        "fuzz", "-n", "300", "--seed", "0",
        "--levels", "2:4", "--widths", "1:4",
        "--targets", "harrigan-healy",
        "--out", str(out),
    ])
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("iterations 300 ")
    dirs = sorted(p.name for p in out.iterdir())
    assert dirs
    assert all(name.startswith("fail-") for name in dirs)
    assert (out / dirs[0] / "graph.lgf").is_file()
    assert (out / dirs[0] / "report.txt").is_file()


def test_fuzz_rejects_bad_range(capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(["fuzz", "--levels", "nope"])
    assert err.value.code == 2


def test_shrink_cli_round_trip(tmp_path, capsys):
    reports = tmp_path / "reports"
    cli.main([
        "fuzz", "-n", "300", "--targets", "harrigan-healy", "--out", str(reports),
    ])
    capsys.readouterr()
    first = sorted(reports.iterdir())[0]
    out = tmp_path / "small"
    assert cli.main(["shrink", str(first), "--out", str(out)]) == 0
    assert "vertices" in capsys.readouterr().out
    assert (out / "graph.lgf").is_file()


def test_render_writes_svg(planar, tmp_path):
    d = tmp_path / "d.ldf"
    d.write_text("LDF 1\nl 1 a b\nl 2 c d\nl 3 e\n", encoding="utf-8")
    out = tmp_path / "out.svg"
    assert cli.main(["render", str(planar), str(d), "-o", str(out)]) == 0
    svg = out.read_text(encoding="utf-8")
    assert svg.startswith("<svg ")
    assert "</svg>" in svg


def test_unknown_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as err:
        cli.main(["frobnicate"])
    assert err.value.code == 2
