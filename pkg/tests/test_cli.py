"""CLI subcommands and exit codes."""

import json

import pytest

from spinforge.cli import main
from spinforge.jsonio import load_path


@pytest.fixture
def k3_instance(tmp_path):
    path = tmp_path / "k3.json"
    code = main(["generate", "--kind", "coloring",
                 "--params", '{"num_vertices": 3, "num_colors": 3}',
                 "--seed", "0", "--out", str(path)])
    assert code == 0
    return path


class TestGenerate:
    def test_writes_instance(self, k3_instance):
        data = load_path(k3_instance)
        assert data["kind"] == "coloring"
        assert data["num_vertices"] == 3

    def test_unknown_kind_exit_code(self, capsys):
        assert main(["generate", "--kind", "nope"]) == 2
        assert "error" in capsys.readouterr().err

    def test_stdout_default(self, capsys):
        assert main(["generate", "--kind", "random-ising",
                     "--params", '{"num_spins": 4}']) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["kind"] == "random-ising"


class TestMapEmbedSolve:
    def test_map_coloring(self, k3_instance, tmp_path):
        model = tmp_path / "model.json"
        varmap = tmp_path / "varmap.json"
        assert main(["map", "--instance", str(k3_instance),
                     "--out-model", str(model), "--out-varmap", str(varmap)]) == 0
        m = load_path(model)
        assert m["num_vars"] == 9
        v = load_path(varmap)
        assert v["kind"] == "coloring"
        assert v["num_original_bits"] == 9

    def test_embed_and_solve(self, k3_instance, tmp_path):
        model = tmp_path / "model.json"
        main(["map", "--instance", str(k3_instance), "--out-model", str(model)])
        embedding = tmp_path / "embedding.json"
        assert main(["embed", "--model", str(model), "--domain", "qubo",
                     "--chimera-n", "4", "--seed", "0", "--out", str(embedding)]) == 0
        e = load_path(embedding)
        assert set(e["chains"].keys()) == {str(i) for i in range(9)}

        samples = tmp_path / "samples.json"
        assert main(["solve", "--model", str(model), "--domain", "qubo",
                     "--engine", "sa", "--params", '{"num_reads": 20, "sweeps": 200}',
                     "--seed", "3", "--out", str(samples)]) == 0
        s = load_path(samples)
        assert s["domain"] == "binary"
        assert sum(r["count"] for r in s["records"]) == 20
        assert min(r["energy"] for r in s["records"]) == 0.0

    def test_embedding_failure_exit_code(self, tmp_path):
        # K_12 cannot fit on a single cell
        gen = tmp_path / "dense.json"
        main(["generate", "--kind", "random-ising", "--params",
              '{"num_spins": 12}', "--out", str(gen)])
        model = tmp_path / "model.json"
        main(["map", "--instance", str(gen), "--out-model", str(model)])
        code = main(["embed", "--model", str(model), "--domain", "ising",
                     "--chimera-n", "1", "--retries", "4"])
        assert code == 4


class TestPipeline:
    def test_pipeline_and_report(self, k3_instance, tmp_path, capsys):
        config = tmp_path / "run.json"
        report = tmp_path / "report.json"
        samples = tmp_path / "samples.json"
        config.write_text(json.dumps({
            "instance_path": str(k3_instance),
            "engine": {"kind": "sa", "params": {"num_reads": 30, "sweeps": 300}},
            "hardware": {"kind": "chimera", "n": 4},
            "master_seed": 7,
        }))
        assert main(["pipeline", "--config", str(config),
                     "--report", str(report), "--samples", str(samples)]) == 0
        rep = load_path(report)
        assert rep["results"]["best_energy"] == 0.0

        assert main(["report", "--samples", str(samples),
                     "--oracle-energy", "0.0"]) == 0
        summary = json.loads(capsys.readouterr().out)
        assert summary["total_reads"] == 30
        assert summary["success_probability"] > 0

    def test_report_csv(self, k3_instance, tmp_path, capsys):
        config = tmp_path / "run.json"
        samples = tmp_path / "samples.json"
        config.write_text(json.dumps({
            "instance_path": str(k3_instance),
            "engine": {"kind": "sa", "params": {"num_reads": 10, "sweeps": 100}},
            "master_seed": 1,
        }))
        main(["pipeline", "--config", str(config), "--samples", str(samples)])
        capsys.readouterr()
        assert main(["report", "--samples", str(samples), "--format", "csv"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert len(out) == 2
        assert "total_reads" in out[0]

    def test_missing_config_file(self):
        assert main(["pipeline", "--config", "/nonexistent/run.json"]) == 1
