import json
import os

import pytest

from distractorgen.cli import (
    EvalLabels,
    EvalReport,
    compute_eval_report,
    load_config,
    main,
)
from distractorgen.errors import ConfigError


def generate_args(fixture_dir, kb_path, out=None, seed=None, extra=()):
    args = [
        "generate",
        "--articles", str(fixture_dir / "articles.jsonl"),
        "--qaps", str(fixture_dir / "qaps.jsonl"),
        "--vectors", str(fixture_dir / "vectors.txt"),
        "--lexgraph", str(fixture_dir / "lexgraph.json"),
        "--kb", str(kb_path),
    ]
    if out is not None:
        args += ["--out", str(out)]
    if seed is not None:
        args += ["--seed", str(seed)]
    return args + list(extra)


class TestLoadConfig:
    def test_absent_gives_defaults(self):
        cfg = load_config(None)
        assert (cfg.sim_lo, cfg.sim_hi) == (0.6, 0.85)
        assert cfg.wup_fallback == 0.1
        assert cfg.relax_step == 0.05
        assert cfg.relax_max_rounds == 3

    def test_interval_ordering_enforced(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text('{"sim_lo": 0.9, "sim_hi": 0.8}')
        with pytest.raises(ConfigError) as excinfo:
            load_config(path)
        assert "sim_lo" in str(excinfo.value)

    def test_wup_fallback_loaded(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text('{"wup_fallback": 0.1}')
        assert load_config(path).wup_fallback == 0.1

    def test_unknown_key_rejected(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text('{"smi_lo": 0.5}')
        with pytest.raises(ConfigError) as excinfo:
            load_config(path)
        assert "smi_lo" in str(excinfo.value)

    def test_fallback_out_of_range_rejected(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text('{"wup_fallback": 1.5}')
        with pytest.raises(ConfigError) as excinfo:
            load_config(path)
        assert "wup_fallback" in str(excinfo.value)

    def test_wrong_type_rejected(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text('{"relax_max_rounds": "three"}')
        with pytest.raises(ConfigError):
            load_config(path)


class TestGenerate:
    def test_fixture_corpus_ten_lines_exit_zero(self, fixture_dir, kb_path, tmp_path):
        out = tmp_path / "mcqs.jsonl"
        status = main(generate_args(fixture_dir, kb_path, out=out, seed=42))
        assert status == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 10
        for line in lines:
            obj = json.loads(line)
            assert len(obj["distractors"]) == 3
            assert list(obj) == ["article_id", "question", "answer", "distractors", "provenance"]

    def test_same_seed_byte_identical(self, fixture_dir, kb_path, tmp_path):
        out1, out2 = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        assert main(generate_args(fixture_dir, kb_path, out=out1, seed=9)) == 0
        assert main(generate_args(fixture_dir, kb_path, out=out2, seed=9)) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_different_seeds_differ(self, fixture_dir, kb_path, tmp_path):
        out1, out2 = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        main(generate_args(fixture_dir, kb_path, out=out1, seed=1))
        main(generate_args(fixture_dir, kb_path, out=out2, seed=2))
        assert out1.read_bytes() != out2.read_bytes()

    def test_unknown_article_id_exit_one(self, fixture_dir, kb_path, tmp_path, capsys):
        qaps = tmp_path / "qaps.jsonl"
        qaps.write_text(json.dumps({
            "article_id": "ghost9", "question": "?", "answer_text": "the cost of life",
        }) + "\n")
        args = [
            "generate",
            "--articles", str(fixture_dir / "articles.jsonl"),
            "--qaps", str(qaps),
            "--vectors", str(fixture_dir / "vectors.txt"),
            "--lexgraph", str(fixture_dir / "lexgraph.json"),
            "--kb", str(kb_path),
        ]
        assert main(args) == 1
        assert "ghost9" in capsys.readouterr().err

    def test_unreadable_input_exit_one(self, fixture_dir, kb_path, tmp_path, capsys):
        args = generate_args(fixture_dir, kb_path)
        args[args.index("--articles") + 1] = str(tmp_path / "missing.jsonl")
        assert main(args) == 1

    def test_shortfall_exit_two_with_partial_output(self, fixture_dir, kb_path, tmp_path, capsys):
        # a QAP whose only target has no resources -> zero distractors
        articles = tmp_path / "articles.jsonl"
        articles.write_text(
            json.dumps({"article_id": "solo"}) + "\n" + json.dumps({
                "text": "Zyqqa exists.",
                "tokens": [
                    {"surface": "Zyqqa", "lemma": "zyqqa", "pos": "noun", "entity": "none",
                     "start": 0, "end": 5},
                    {"surface": "exists", "lemma": "exist", "pos": "verb", "entity": "none",
                     "start": 6, "end": 12},
                    {"surface": ".", "lemma": ".", "pos": "other", "entity": "none",
                     "start": 12, "end": 13},
                ],
                "roles": [],
            }) + "\n"
        )
        qaps = tmp_path / "qaps.jsonl"
        qaps.write_text(json.dumps({
            "article_id": "solo", "question": "?", "answer_text": "Zyqqa",
            "answer_sentence": 0, "answer_first_token": 0, "answer_last_token": 0,
        }) + "\n")
        out = tmp_path / "out.jsonl"
        args = [
            "generate", "--articles", str(articles), "--qaps", str(qaps),
            "--vectors", str(fixture_dir / "vectors.txt"),
            "--lexgraph", str(fixture_dir / "lexgraph.json"),
            "--kb", str(kb_path), "--out", str(out),
        ]
        assert main(args) == 2
        obj = json.loads(out.read_text().splitlines()[0])
        assert obj["distractors"] == []

    def test_env_seed_fallback(self, fixture_dir, kb_path, tmp_path, monkeypatch):
        out1, out2 = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        monkeypatch.setenv("DISTRACTOR_SEED", "77")
        main(generate_args(fixture_dir, kb_path, out=out1))
        monkeypatch.delenv("DISTRACTOR_SEED")
        main(generate_args(fixture_dir, kb_path, out=out2, seed=77))
        assert out1.read_bytes() == out2.read_bytes()


class TestEval:
    def test_all_true_gives_hundred(self, tmp_path):
        mcqs, labels = tmp_path / "m.jsonl", tmp_path / "l.jsonl"
        mcqs.write_text(json.dumps({
            "question": "q1", "answer": "a", "distractors": ["x", "y", "z"],
        }) + "\n")
        labels.write_text(json.dumps({
            "question": "q1",
            "labels": [{"grammatical": True, "relevant_with_distraction": True,
                        "sufficient_distraction": True}] * 3,
        }) + "\n")
        out = tmp_path / "report.json"
        assert main(["eval", "--mcqs", str(mcqs), "--labels", str(labels), "--out", str(out)]) == 0
        report = json.loads(out.read_text())
        assert all(v == 100.0 for v in report["percentages"].values())

    def test_zero_adequate_mcq_not_acceptable(self):
        labels = {
            "q1": [EvalLabels(False, False, False)] * 3,
            "q2": [EvalLabels(True, True, True)] * 3,
        }
        report = compute_eval_report({"q1": 3, "q2": 3}, labels)
        assert report.n_acceptable_mcq == 1
        assert report.pct_acceptable_mcq == 50.0

    def test_acceptable_at_least_adequate(self):
        labels = {
            "q1": [EvalLabels(True, True, True), EvalLabels(True, True, False),
                   EvalLabels(True, False, False)],
        }
        report = compute_eval_report({"q1": 3}, labels)
        assert report.n_adequate_mcq == 0
        assert report.n_acceptable_mcq == 1

    def test_missing_labels_exit_one(self, tmp_path, capsys):
        mcqs, labels = tmp_path / "m.jsonl", tmp_path / "l.jsonl"
        mcqs.write_text(json.dumps({
            "question": "unlabeled question", "distractors": ["x", "y", "z"],
        }) + "\n")
        labels.write_text("")
        assert main(["eval", "--mcqs", str(mcqs), "--labels", str(labels)]) == 1
        assert "unlabeled question" in capsys.readouterr().err

    def test_sufficient_implies_relevant_enforced(self, tmp_path, capsys):
        mcqs, labels = tmp_path / "m.jsonl", tmp_path / "l.jsonl"
        mcqs.write_text(json.dumps({"question": "q", "distractors": ["x", "y", "z"]}) + "\n")
        labels.write_text(json.dumps({
            "question": "q",
            "labels": [{"grammatical": True, "relevant_with_distraction": False,
                        "sufficient_distraction": True}] * 3,
        }) + "\n")
        assert main(["eval", "--mcqs", str(mcqs), "--labels", str(labels)]) == 1

    def test_report_self_consistent(self, fixture_dir, tmp_path):
        out = tmp_path / "report.json"
        status = main([
            "eval", "--mcqs", str(fixture_dir / "eval_mcqs.jsonl"),
            "--labels", str(fixture_dir / "eval_labels.jsonl"), "--out", str(out),
        ])
        assert status == 0
        report = json.loads(out.read_text())
        counts, pcts = report["counts"], report["percentages"]
        assert abs(pcts["relevant_with_distraction"]
                   - 100 * counts["relevant_with_distraction"] / counts["distractors"]) <= 0.1
        assert abs(pcts["adequate_mcqs"] - 100 * counts["adequate_mcqs"] / counts["mcqs"]) <= 0.1


class TestCheck:
    def test_all_fixture_files_pass(self, fixture_dir, kb_path, capsys):
        status = main([
            "check",
            "--articles", str(fixture_dir / "articles.jsonl"),
            "--qaps", str(fixture_dir / "qaps.jsonl"),
            "--vectors", str(fixture_dir / "vectors.txt"),
            "--lexgraph", str(fixture_dir / "lexgraph.json"),
            "--kb", str(kb_path),
        ])
        captured = capsys.readouterr()
        assert status == 0
        assert captured.out.count("OK:") == 5
        assert "warning" not in captured.err.lower()

    def test_invalid_file_exit_one(self, tmp_path, capsys):
        bad = tmp_path / "bad.jsonl"
        bad.write_text("not json\n")
        assert main(["check", "--articles", str(bad)]) == 1

    def test_nothing_to_check_is_an_error(self, capsys):
        assert main(["check"]) == 1
