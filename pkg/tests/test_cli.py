import json

import pytest
from click.testing import CliRunner

from culturesim.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


class TestSynth:
    def test_writes_corpus(self, runner, tmp_path):
        out = tmp_path / "corpus.jsonl"
        result = runner.invoke(main, ["synth", "--out", str(out), "--count", "4", "--seed", "1"])
        assert result.exit_code == 0, result.output
        assert out.exists()
        lines = out.read_text().strip().splitlines()
        assert all(json.loads(line)["section"].startswith("s") for line in lines)

    def test_deterministic_bytes(self, runner, tmp_path):
        a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        runner.invoke(main, ["synth", "--out", str(a), "--count", "6", "--seed", "3"])
        runner.invoke(main, ["synth", "--out", str(b), "--count", "6", "--seed", "3"])
        assert a.read_bytes() == b.read_bytes()


class TestTrain:
    def test_writes_fourteen_bundles(self, runner, corpus_file, tmp_path):
        out = tmp_path / "models"
        result = runner.invoke(
            main,
            ["train", "--corpus", str(corpus_file), "--model", "knn",
             "--out", str(out), "--seed", "1"],
        )
        assert result.exit_code == 0, result.output
        assert len(list(out.glob("*.json"))) == 14
        assert "s01: trained knn" in result.output

    def test_same_seed_bit_identical_bundles(self, runner, corpus_file, tmp_path):
        out_a, out_b = tmp_path / "a", tmp_path / "b"
        for out in (out_a, out_b):
            result = runner.invoke(
                main,
                ["train", "--corpus", str(corpus_file), "--model", "rf",
                 "--out", str(out), "--seed", "7"],
            )
            assert result.exit_code == 0, result.output
        for path_a in sorted(out_a.glob("*.json")):
            path_b = out_b / path_a.name
            assert path_a.read_bytes() == path_b.read_bytes()

    def test_unknown_model_is_usage_error(self, runner, corpus_file, tmp_path):
        result = runner.invoke(
            main,
            ["train", "--corpus", str(corpus_file), "--model", "boosted",
             "--out", str(tmp_path / "m")],
        )
        assert result.exit_code == 2

    def test_corpus_missing_section_fails_cleanly(self, runner, tmp_path):
        bad = tmp_path / "partial.jsonl"
        bad.write_text(json.dumps({
            "section": "s01",
            "text": "Hello captain Wang, it's an honor to meet you today.",
            "labels": [1, 1, 1],
        }) + "\n" + json.dumps({
            "section": "s01",
            "text": "Good morning captain Wang.",
            "labels": [1, 1, 0],
        }) + "\n")
        out = tmp_path / "models"
        result = runner.invoke(
            main, ["train", "--corpus", str(bad), "--out", str(out)]
        )
        assert result.exit_code == 1
        assert "no examples" in result.output
        assert not list(out.glob("*.json"))  # partial outputs removed


class TestEvaluate:
    def test_report_shape(self, runner, corpus_file, models_dir, tmp_path):
        report_path = tmp_path / "report.json"
        result = runner.invoke(
            main,
            ["evaluate", "--corpus", str(corpus_file), "--models", str(models_dir),
             "--split", "0.2", "--seed", "42", "--report", str(report_path)],
        )
        assert result.exit_code == 0, result.output
        report = json.loads(report_path.read_text())
        assert len(report["rows"]) == 14
        assert set(report["mean"]) == {"f1", "precision", "recall", "wer"}
        assert report_path.with_suffix(".txt").exists()
        assert "Mean" in result.output

    def test_split_zero_rejected(self, runner, corpus_file, models_dir, tmp_path):
        result = runner.invoke(
            main,
            ["evaluate", "--corpus", str(corpus_file), "--models", str(models_dir),
             "--split", "0", "--seed", "1", "--report", str(tmp_path / "r.json")],
        )
        assert result.exit_code == 1
        assert "test_fraction" in result.output

    def test_fixed_seed_reproduces_report(self, runner, corpus_file, models_dir, tmp_path):
        paths = [tmp_path / "r1.json", tmp_path / "r2.json"]
        for path in paths:
            result = runner.invoke(
                main,
                ["evaluate", "--corpus", str(corpus_file), "--models", str(models_dir),
                 "--split", "0.25", "--seed", "9", "--report", str(path)],
            )
            assert result.exit_code == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()


class TestNoiseSweep:
    def test_single_cell(self, runner, corpus_file, models_dir, tmp_path):
        report_path = tmp_path / "sweep.json"
        result = runner.invoke(
            main,
            ["noise-sweep", "--corpus", str(corpus_file), "--models", str(models_dir),
             "--wer", "0.2", "--seeds", "1", "--seed", "4",
             "--report", str(report_path)],
        )
        assert result.exit_code == 0, result.output
        report = json.loads(report_path.read_text())
        assert len(report["summary"]) == 1
        assert report["summary"][0]["target"] == 0.2


class TestSimulate:
    def test_prints_transcript_with_scores(self, runner, models_dir, tmp_path):
        log_path = tmp_path / "log.jsonl"
        result = runner.invoke(
            main, ["simulate", "--models", str(models_dir), "--log", str(log_path)]
        )
        assert result.exit_code == 0, result.output
        assert result.output.count("(score") == 14
        assert "[Feedback]" in result.output
        assert "Captain Heist:" in result.output
        assert "[Session ended]" in result.output
        assert len(log_path.read_text().strip().splitlines()) == 14

    def test_short_script_fails(self, runner, models_dir, tmp_path):
        script = tmp_path / "short.txt"
        script.write_text("Good morning Captain Wang.\n")
        result = runner.invoke(
            main, ["simulate", "--models", str(models_dir), "--script", str(script)]
        )
        assert result.exit_code == 1
        assert "exhausted" in result.output


class TestHelp:
    @pytest.mark.parametrize(
        "command", ["synth", "train", "evaluate", "noise-sweep", "simulate", "serve"]
    )
    def test_every_subcommand_documents_flags(self, runner, command):
        result = runner.invoke(main, [command, "--help"])
        assert result.exit_code == 0
        assert "--" in result.output
