import json
import subprocess
import sys

import pytest

RECORDS = [
    {
        "id": "d1",
        "tokens": [
            {"w": "efficient", "pos": "JJ"}, {"w": "algorithms", "pos": "NNS"},
            {"w": "for", "pos": "IN"}, {"w": "pruning", "pos": "NN"},
            {"w": "frequent", "pos": "JJ"}, {"w": "itemsets", "pos": "NNS"},
            {"w": "use", "pos": "VBP"}, {"w": "bayesian", "pos": "JJ"},
            {"w": "networks", "pos": "NNS"}, {"w": "and", "pos": "CC"},
            {"w": "bayesian", "pos": "JJ"}, {"w": "networks", "pos": "NNS"},
        ],
        "keyphrases": ["frequent itemsets", "bayesian networks"],
    },
    {
        "id": "d2",
        "tokens": [
            {"w": "kernel", "pos": "NN"}, {"w": "methods", "pos": "NNS"},
            {"w": "for", "pos": "IN"}, {"w": "margin", "pos": "NN"},
            {"w": "models", "pos": "NNS"}, {"w": "and", "pos": "CC"},
            {"w": "kernel", "pos": "NN"}, {"w": "methods", "pos": "NNS"},
        ],
        "keyphrases": ["kernel methods", "margin"],
    },
]


@pytest.fixture
def dataset(tmp_path):
    path = tmp_path / "data.jsonl"
    path.write_text("".join(json.dumps(r) + "\n" for r in RECORDS), encoding="utf-8")
    return path


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "kpex.cli", *map(str, args)],
        capture_output=True,
        text=True,
    )


class TestExtract:
    def test_top_k_phrases_per_document(self, dataset):
        result = run_cli("extract", "--backend", "test_bow", "--strategy", "mask_all",
                         "--top-k", "2", dataset)
        assert result.returncode == 0
        lines = result.stdout.strip().splitlines()
        assert len(lines) == 2
        for line in lines:
            record = json.loads(line)
            assert set(record) == {"id", "keyphrases"}
            assert 1 <= len(record["keyphrases"]) <= 2

    def test_jobs_do_not_change_bytes(self, dataset, tmp_path):
        outputs = []
        for jobs in (1, 8):
            out = tmp_path / f"out{jobs}.jsonl"
            result = run_cli("extract", "--jobs", jobs, "--output", out, dataset)
            assert result.returncode == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]

    def test_non_positive_top_k_exits_2(self, dataset):
        result = run_cli("extract", "--top-k", "0", dataset)
        assert result.returncode == 2
        assert "top-k" in result.stderr

    def test_non_positive_max_words_exits_2(self, dataset):
        result = run_cli("extract", "--max-words", "0", dataset)
        assert result.returncode == 2

    def test_missing_input_exits_2(self, tmp_path):
        result = run_cli("extract", tmp_path / "missing.jsonl")
        assert result.returncode == 2
        assert "error" in result.stderr


class TestBenchmark:
    def test_requires_dataset_flag(self):
        result = run_cli("benchmark", "--method", "mderank")
        assert result.returncode == 2
        assert "dataset" in result.stderr

    def test_writes_json_report(self, dataset, tmp_path):
        out = tmp_path / "report.json"
        result = run_cli("benchmark", "--dataset", dataset, "--method", "yake_lite",
                         "--k", "5,10", "--output", out)
        assert result.returncode == 0
        report = json.loads(out.read_text("utf-8"))
        assert set(report["per_dataset"]["data"]["f1_at"]) == {"5", "10"}

    def test_multi_dataset_average_row(self, dataset, tmp_path):
        other = tmp_path / "other.jsonl"
        other.write_text(dataset.read_text("utf-8"), encoding="utf-8")
        result = run_cli("benchmark", "--dataset", dataset, "--dataset", other,
                         "--method", "yake_lite", "--k", "5", "--format", "table")
        assert result.returncode == 0
        lines = result.stdout.splitlines()
        assert any(l.startswith("data ") for l in lines)
        assert any(l.startswith("other") for l in lines)
        assert any(l.startswith("AVG") for l in lines)

    def test_table_format(self, dataset):
        result = run_cli("benchmark", "--dataset", dataset, "--method", "mderank",
                         "--format", "table")
        assert result.returncode == 0
        assert "F1@5" in result.stdout


class TestTriplets:
    def test_seeded_runs_are_byte_identical(self, dataset, tmp_path):
        outputs = []
        for run in (1, 2):
            out = tmp_path / f"t{run}.jsonl"
            result = run_cli("triplets", "--sampling", "relative", "--theta", "yake_lite",
                             "--seed", "7", "--top-n", "3", "--output", out, dataset)
            assert result.returncode == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]

    def test_different_seeds_differ(self, dataset, tmp_path):
        contents = []
        for seed in (7, 8):
            out = tmp_path / f"s{seed}.jsonl"
            run_cli("triplets", "--sampling", "relative", "--seed", seed,
                    "--top-n", "3", "--output", out, dataset)
            contents.append(out.read_bytes())
        assert contents[0] != contents[1]


class TestPseudoLabel:
    def test_emits_doc_id_method_phrases(self, dataset):
        result = run_cli("pseudo-label", "--theta", "textrank", "--top-n", "2", dataset)
        assert result.returncode == 0
        for line in result.stdout.strip().splitlines():
            record = json.loads(line)
            assert set(record) == {"doc_id", "method", "phrases"}
            assert record["method"] == "textrank"
            assert len(record["phrases"]) <= 2


class TestEval:
    def test_scores_predictions_file(self, dataset, tmp_path):
        preds = tmp_path / "preds.jsonl"
        run_cli("extract", "--top-k", "5", "--output", preds, dataset)
        result = run_cli("eval", "--predictions", preds, "--dataset", dataset, "--k", "5")
        assert result.returncode == 0
        report = json.loads(result.stdout)
        assert "5" in report["per_dataset"]["data"]["f1_at"]

    def test_warns_on_missing_predictions(self, dataset, tmp_path):
        preds = tmp_path / "partial.jsonl"
        preds.write_text('{"id": "d1", "keyphrases": ["frequent itemsets"]}\n', encoding="utf-8")
        result = run_cli("eval", "--predictions", preds, "--dataset", dataset, "--k", "5")
        assert result.returncode == 0
        assert "no prediction for document d2" in result.stderr

    def test_requires_predictions(self, dataset):
        result = run_cli("eval", "--dataset", dataset)
        assert result.returncode == 2


class TestModelCacheEnv:
    def test_relative_model_path_resolves_via_env(self, dataset, tmp_path):
        import os
        from toy_model import build_multiplier_model_dir

        cache = tmp_path / "cache"
        build_multiplier_model_dir(cache / "toy", max_pieces=64)
        env = dict(os.environ, KPEX_MODEL_CACHE=str(cache))
        result = subprocess.run(
            [sys.executable, "-m", "kpex.cli", "extract",
             "--backend", "transformer_model", "--model-path", "toy",
             "--layer", "1", "--max-pieces", "32", "--top-k", "2", str(dataset)],
            capture_output=True, text=True, env=env,
        )
        assert result.returncode == 0, result.stderr
        assert len(result.stdout.strip().splitlines()) == 2

    def test_unresolvable_model_path_exits_2(self, dataset):
        result = run_cli("extract", "--backend", "transformer_model",
                         "--model-path", "missing-model", dataset)
        assert result.returncode == 2


class TestConfigPrecedence:
    def test_flags_beat_config_beat_defaults(self, dataset, tmp_path):
        config = tmp_path / "kpex.toml"
        config.write_text('[extract]\ntop_k = 1\n', encoding="utf-8")
        # config only
        result = run_cli("extract", "--config", config, dataset)
        record = json.loads(result.stdout.splitlines()[0])
        assert len(record["keyphrases"]) == 1
        # flag wins
        result = run_cli("extract", "--config", config, "--top-k", "2", dataset)
        record = json.loads(result.stdout.splitlines()[0])
        assert len(record["keyphrases"]) == 2

    def test_unknown_flag_exits_2(self, dataset):
        result = run_cli("extract", "--bogus-flag", dataset)
        assert result.returncode == 2
