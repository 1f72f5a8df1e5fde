import json

import pytest

from netsync.cli import main
from netsync.edgelist import ingest_edge_list


@pytest.fixture
def ba_file(tmp_path):
    path = tmp_path / "ba.edges"
    assert main(["generate", "ba", "--n", "120", "--m", "2", "--seed", "7",
                 "--out", str(path)]) == 0
    return path


def test_generate_ba_edge_count(ba_file):
    result = ingest_edge_list(ba_file)
    assert result.graph.n == 120
    assert result.graph.m == 3 + 2 * 117


def test_generate_er(tmp_path):
    path = tmp_path / "er.edges"
    assert main(["generate", "er", "--n", "49", "--edges", "351", "--seed", "3",
                 "--out", str(path)]) == 0
    assert ingest_edge_list(path).graph.m == 351


def test_generate_deterministic(tmp_path):
    p1, p2 = tmp_path / "a.edges", tmp_path / "b.edges"
    main(["generate", "ba", "--n", "60", "--m", "2", "--seed", "5", "--out", str(p1)])
    main(["generate", "ba", "--n", "60", "--m", "2", "--seed", "5", "--out", str(p2)])
    assert p1.read_bytes() == p2.read_bytes()


def test_analyze_json(ba_file, tmp_path):
    out = tmp_path / "report.json"
    assert main(["analyze", "--edge-list", str(ba_file), "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["summary"]["n"] == 120
    assert len(data["node_stats"]) == 120
    row = data["node_stats"][0]
    assert {"label", "degree", "clustering", "closeness", "betweenness",
            "eigenvector"} <= set(row)


def test_analyze_csv_mirrors_reference_columns(ba_file, tmp_path):
    out = tmp_path / "stats.csv"
    assert main(["analyze", "--edge-list", str(ba_file), "--format", "csv",
                 "--out", str(out)]) == 0
    header = out.read_text().splitlines()[0]
    assert header == "label,degree,clustering,closeness,betweenness,eigenvector"


def test_fit_subcommand(ba_file, tmp_path):
    out = tmp_path / "fit.json"
    cmp_out = tmp_path / "cmp.csv"
    assert main(["fit", "--edge-list", str(ba_file), "--out", str(out),
                 "--compare-er", "--comparison-out", str(cmp_out),
                 "--seed", "1"]) == 0
    data = json.loads(out.read_text())
    assert data["gamma"] > 1.0
    assert cmp_out.read_text().splitlines()[0] == "k,p_observed,p_reference"


def test_resilience_attack_csv(ba_file, tmp_path):
    out = tmp_path / "trace.csv"
    assert main(["resilience", "--edge-list", str(ba_file), "--strategy",
                 "attack", "--record-every", "0.1", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "fraction_removed,diameter,lcc_size,components"
    assert len(lines) > 2


def test_resilience_error_ensemble_csv(ba_file, tmp_path):
    out = tmp_path / "ens.csv"
    assert main(["resilience", "--edge-list", str(ba_file), "--strategy",
                 "error", "--seeds", "3", "--record-every", "0.2",
                 "--out", str(out)]) == 0
    header = out.read_text().splitlines()[0]
    assert "diameter_median" in header and "lcc_min" in header


def test_sync_spectral_only(ba_file, tmp_path):
    out = tmp_path / "spectral.json"
    assert main(["sync", "--edge-list", str(ba_file), "--spectral-only",
                 "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["lambda1"] == pytest.approx(0.0, abs=1e-8)
    assert data["lambda2"] < 0
    assert data["stable"] is True
    assert data["zero_multiplicity"] == 1


def test_sync_trajectory_csv(ba_file, tmp_path):
    out = tmp_path / "traj.csv"
    assert main(["sync", "--edge-list", str(ba_file), "--dynamics", "zero",
                 "--c", "1.0", "--dt", "0.05", "--tmax", "2.0", "--seed", "4",
                 "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "t,sync_error"
    assert len(lines) == 42  # header + 41 grid points


def test_sync_full_states(tmp_path):
    edge = tmp_path / "p2.edges"
    edge.write_text("a b\n")
    out = tmp_path / "traj.csv"
    assert main(["sync", "--edge-list", str(edge), "--dt", "0.1", "--tmax",
                 "1.0", "--full", "--out", str(out)]) == 0
    header = out.read_text().splitlines()[0]
    assert header == "t,sync_error,node0_s0,node1_s0"


def test_validate_shipped_fixture(capsys):
    assert main(["validate"]) == 0
    captured = capsys.readouterr().out
    assert "[PASS] degree_sum" in captured
    assert "fixture valid" in captured


def test_validate_corrupted_fixture(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text(
        "country,code,degree,clustering,closeness,betweenness,eigenvector\n"
        "Italy,IT,38,0.38,0.0172,168.31,0.50\n"
    )
    assert main(["validate", "--fixture", str(bad)]) == 1
    assert "[FAIL]" in capsys.readouterr().out


def test_pipeline_subcommand(tmp_path):
    cfg = {
        "input": {"generate": {"model": "er", "n": 30, "edges": 60, "seed": 1}},
        "stages": ["summary", "spectral"],
        "deterministic": True,
    }
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(cfg))
    out = tmp_path / "report.json"
    assert main(["pipeline", "--config", str(cfg_path), "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["summary"]["n"] == 30
    assert "created_at" not in data["provenance"]


class TestExitCodes:
    def test_missing_file_is_input_error(self, tmp_path):
        assert main(["analyze", "--edge-list", str(tmp_path / "nope.edges")]) == 2

    def test_malformed_line_is_input_error(self, tmp_path):
        bad = tmp_path / "bad.edges"
        bad.write_text("a b c\n")
        assert main(["analyze", "--edge-list", str(bad)]) == 2

    def test_self_loop_is_validation_failure(self, tmp_path):
        bad = tmp_path / "loop.edges"
        bad.write_text("a a\n")
        assert main(["analyze", "--edge-list", str(bad)]) == 1

    def test_degenerate_fit_is_numerical_error(self, tmp_path):
        k4 = tmp_path / "k4.edges"
        k4.write_text("a b\na c\na d\nb c\nb d\nc d\n")
        assert main(["fit", "--edge-list", str(k4)]) == 3

    def test_invalid_generator_params(self, tmp_path):
        assert main(["generate", "ba", "--n", "3", "--m", "5",
                     "--out", str(tmp_path / "x.edges")]) == 2
