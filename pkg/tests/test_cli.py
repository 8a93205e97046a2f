import json
import subprocess
import sys

import pytest

from kintegration import Bound, OracleVerdict, RowCheck, cli
from kintegration.cli import AnalysisConfig, canonical_json, cmd_analyze, main
from kintegration.errors import InvalidParamsError

SAMPLE = ["--edges", "tests/data/sample_edges.txt", "--communities", "tests/data/sample_communities.txt"]


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_matches_golden(capsys, golden_dir):
    code, out, _ = run(capsys, ["analyze", *SAMPLE, "--k", "1,2,3,4,5"])
    assert code == 0
    assert out == (golden_dir / "analyze_sample.json").read_text()


def test_thresholds_matches_golden(capsys, golden_dir):
    code, out, _ = run(capsys, ["thresholds", "-r", "8", "-n", "9", "--kmax", "9"])
    assert code == 0
    assert out == (golden_dir / "thresholds_r8_n9.json").read_text()


def test_certify_matches_golden(capsys, golden_dir):
    code, out, _ = run(capsys, ["certify", "-r", "2", "-n", "2", "--k", "1,2,3"])
    assert code == 0
    assert out == (golden_dir / "certify_r2_n2.json").read_text()


def test_analyze_csv(capsys):
    code, out, _ = run(capsys, ["analyze", *SAMPLE, "--k", "2,5", "--format", "csv"])
    assert code == 0
    assert out.splitlines() == [
        "k,integrated,witness_source,witness_target,witness_distance,reason",
        "2,false,01,11,3,",
        "5,true,,,,",
    ]


def test_thresholds_csv(capsys):
    code, out, _ = run(capsys, ["thresholds", "-r", "8", "-n", "1000", "--format", "csv"])
    assert code == 0
    assert out.splitlines() == [
        "k,bridges_lower,bridges_upper,bridges_exact,centrals",
        "1,28000000,28000000,true,8000",
        "2,7000,7000,true,7001",
        "3,28,28,true,8",
    ]


def test_analyze_text_mentions_witness(capsys):
    code, out, _ = run(capsys, ["analyze", *SAMPLE, "--k", "3", "--format", "text"])
    assert code == 0
    assert "k*: 5" in out
    assert "k=3: not integrated (01 -> 21, distance 5)" in out
    assert "provably segregated" in out


def test_analyze_unreachable_witness(capsys, tmp_path):
    (tmp_path / "e.txt").write_text("a1 a2\nb1 b2\n")
    (tmp_path / "c.txt").write_text("a1 A\na2 A\nb1 B\nb2 B\n")
    code, out, _ = run(
        capsys,
        ["analyze", "--edges", str(tmp_path / "e.txt"), "--communities", str(tmp_path / "c.txt"), "--k", "3"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["k_star"] is None
    assert payload["k_star_reason"] == "graph is disconnected"
    row = payload["per_k"][0]
    assert row["witness"] == {"source": "a1", "target": "b1", "distance": None, "reason": "unreachable"}


def test_analyze_localize_flag(capsys, tmp_path):
    (tmp_path / "e.txt").write_text("a1 a3\na1 b1\nb1 b2\n")
    (tmp_path / "c.txt").write_text("a1 A\na2 A\na3 A\nb1 B\nb2 B\n")
    base = ["analyze", "--edges", str(tmp_path / "e.txt"), "--communities", str(tmp_path / "c.txt"), "--k", "2"]
    code, out, _ = run(capsys, base)
    assert code == 0
    assert json.loads(out)["data_quality"]["locally_complete"] is False
    code, out, _ = run(capsys, base + ["--localize"])
    assert code == 0
    payload = json.loads(out)
    assert payload["data_quality"]["locally_complete"] is True
    assert payload["graph"]["bridge_count"] == 1


def test_analyze_strict_model_rejects_uneven_sizes(capsys, tmp_path):
    (tmp_path / "e.txt").write_text("a1 b1\n")
    (tmp_path / "c.txt").write_text("a1 A\na2 A\nb1 B\n")
    code, out, err = run(
        capsys,
        ["analyze", "--edges", str(tmp_path / "e.txt"), "--communities", str(tmp_path / "c.txt"), "--strict-model"],
    )
    assert code == 1
    assert out == ""
    assert "community sizes differ" in err


def test_analyze_single_community_threshold_note(capsys, tmp_path):
    (tmp_path / "e.txt").write_text("x y\n")
    (tmp_path / "c.txt").write_text("x only\ny only\n")
    code, out, _ = run(
        capsys, ["analyze", "--edges", str(tmp_path / "e.txt"), "--communities", str(tmp_path / "c.txt"), "--k", "1"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["certificate"]["b"] == 0
    assert payload["certificate"]["c"] == 0
    assert payload["thresholds"]["note"] == "a single community is 1-integrated with no bridges"
    row = payload["thresholds"]["rows"][0]
    assert row["bridges_required"] == {"lower": 0, "upper": 0, "exact": True}


def test_parse_error_exits_1(capsys, tmp_path):
    (tmp_path / "e.txt").write_text("a b c\n")
    (tmp_path / "c.txt").write_text("a A\nb A\nc A\n")
    code, _, err = run(
        capsys, ["analyze", "--edges", str(tmp_path / "e.txt"), "--communities", str(tmp_path / "c.txt")]
    )
    assert code == 1
    assert "line 1" in err


def test_missing_file_exits_1(capsys, tmp_path):
    code, _, err = run(
        capsys, ["analyze", "--edges", str(tmp_path / "nope.txt"), "--communities", str(tmp_path / "nope.txt")]
    )
    assert code == 1
    assert "error:" in err


def test_usage_errors_exit_1(capsys):
    assert main(["analyze"]) == 1  # missing required flags
    capsys.readouterr()
    assert main(["frobnicate"]) == 1
    capsys.readouterr()
    assert main(["certify", "-r", "2", "-n", "2", "--k", "0"]) == 1
    capsys.readouterr()
    assert main(["certify", "-r", "2", "-n", "2", "--k", "two"]) == 1
    capsys.readouterr()


def test_help_exits_0(capsys):
    assert main(["--help"]) == 0
    out = capsys.readouterr().out
    assert "analyze" in out and "generate" in out and "certify" in out and "thresholds" in out


def test_certify_budget_exhaustion_exits_2(capsys):
    code, out, _ = run(capsys, ["certify", "-r", "3", "-n", "3", "--k", "2", "--budget", "4"])
    assert code == 2
    payload = json.loads(out)
    assert payload["result"] == "exhausted"
    assert payload["rows"][0]["min_bridges"] is None


def test_certify_disagreement_exits_3(capsys, monkeypatch):
    # fabricate an oracle that contradicts the table
    fake_verdict = OracleVerdict(
        sizes=(2, 2), k=2, min_bridges=1, witness=((0, 2),), sets_examined=7,
        certified=True, exhausted_size=0, symmetry_reduced=True,
    )
    fake_row = RowCheck(
        r=2, n=2, k=2, bound=Bound(2, 2), centrals_required=3,
        verdict=fake_verdict, witness_centrals=2, agrees=False,
    )
    monkeypatch.setattr(cli.oracle, "check_threshold_row", lambda r, n, k, budget: fake_row)
    code, out, _ = run(capsys, ["certify", "-r", "2", "-n", "2", "--k", "2"])
    assert code == 3
    payload = json.loads(out)
    assert payload["result"] == "disagree"
    assert payload["rows"][0]["agrees"] is False


def test_certify_randomized_agreement(capsys):
    code, out, _ = run(
        capsys, ["certify", "-r", "3", "-n", "3", "--k", "2,3", "--mode", "randomized", "--seed", "5", "--trials", "6"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["mode"] == "randomized"
    assert [row["upper_bound"] for row in payload["rows"]] == [6, 3]


def test_certify_randomized_disagreement_exits_3(capsys, monkeypatch):
    # pretend the table demands more bridges than a feasible witness uses
    monkeypatch.setattr(cli.thresholds, "bridge_threshold", lambda r, n, k: Bound(99, 99))
    code, out, _ = run(capsys, ["certify", "-r", "3", "-n", "3", "--k", "3", "--mode", "randomized"])
    assert code == 3
    assert json.loads(out)["result"] == "disagree"


def test_generate_round_trip(capsys, tmp_path):
    out_dir = tmp_path / "out"
    code, out, _ = run(
        capsys,
        ["generate", "--family", "extended-star", "-r", "4", "-n", "4", "--quotient", "path", "--out", str(out_dir), "--dot"],
    )
    assert code == 0
    printed_cert = out.strip().splitlines()[-1]
    cert_file = (out_dir / "certificate.json").read_text()
    assert printed_cert + "\n" == cert_file
    assert json.loads(printed_cert) == {"b": 3, "c": 4, "k_star": 5, "node_count": 16, "r": 4}
    assert (out_dir / "graph.dot").read_text().count("penwidth=2.0") == 3

    code, out, _ = run(
        capsys,
        [
            "analyze",
            "--edges", str(out_dir / "edges.txt"),
            "--communities", str(out_dir / "communities.txt"),
            "--k", "4,5",
        ],
    )
    assert code == 0
    payload = json.loads(out)
    assert canonical_json(payload["certificate"]) + "\n" == cert_file


def test_generate_rejects_bad_quotient(capsys):
    assert main(["generate", "--family", "extended-star", "-r", "5", "-n", "5", "--quotient", "figure1:4", "--out", "/tmp/x"]) == 1
    capsys.readouterr()
    assert main(["generate", "--family", "extended-star", "-r", "3", "-n", "3", "--quotient", "nope", "--out", "/tmp/x"]) == 1
    capsys.readouterr()
    assert main(["generate", "--family", "extended-star", "-r", "3", "-n", "3", "--quotient", "figure1:x", "--out", "/tmp/x"]) == 1
    capsys.readouterr()


def test_thresholds_model_violation_exits_1(capsys):
    code, _, err = run(capsys, ["thresholds", "-r", "5", "-n", "3"])
    assert code == 1
    assert "n >= r" in err


def test_analysis_config_validation():
    with pytest.raises(InvalidParamsError):
        AnalysisConfig("e", "c", ())
    with pytest.raises(InvalidParamsError):
        AnalysisConfig("e", "c", (0,))
    with pytest.raises(InvalidParamsError):
        AnalysisConfig("e", "c", (1,), fmt="yaml")


def test_cmd_analyze_direct(sample_graph, data_dir):
    config = AnalysisConfig(
        str(data_dir / "sample_edges.txt"), str(data_dir / "sample_communities.txt"), (5,)
    )
    payload = cmd_analyze(config)
    assert payload["per_k"][0]["integrated"] is True
    assert payload["graph"]["node_count"] == 12


def test_log_level_env_is_tolerated(capsys, monkeypatch):
    monkeypatch.setenv("KINTEGRATION_LOG_LEVEL", "not-a-level")
    assert main(["thresholds", "-r", "2", "-n", "2", "--format", "text"]) == 0
    capsys.readouterr()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "kintegration", "thresholds", "-r", "2", "-n", "2", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1] == "1,4,4,true,4"
