"""Tests for the command-line entry point and its exit codes."""

import json

from bitextminer.cli import main
from bitextminer.exceptions import EXIT_CONFIG_ERROR, EXIT_OK, EXIT_STAGE_FAILURE
from bitextminer.services.pipeline import stage_dir
from bitextminer.services.word_alignment import read_pharaoh


class TestExitCodes:
    """Test how failures map to exit codes."""

    def test_schema(self, capsys):
        assert main(["schema"]) == EXIT_OK
        assert "filtering" in json.loads(capsys.readouterr().out)["properties"]

    def test_pipeline_needs_config(self):
        assert main(["pipeline"]) == EXIT_CONFIG_ERROR

    def test_missing_config_file(self, tmp_path):
        assert main(["pipeline", "--config", str(tmp_path / "none.json")]) == EXIT_CONFIG_ERROR

    def test_invalid_config(self, tmp_path):
        path = tmp_path / "pipeline.json"
        path.write_text(json.dumps({"source_lang": "pl", "target_lang": "pl"}), encoding="utf-8")
        assert main(["bootstrap", "--config", str(path)]) == EXIT_CONFIG_ERROR

    def test_memory_engine_without_file(self, tmp_path):
        source = tmp_path / "src.pl"
        source.write_text("Kot.\n", encoding="utf-8")
        code = main(
            ["translate", "--input", str(source), "--output", str(tmp_path / "out"), "--engine", "memory"]
        )
        assert code == EXIT_CONFIG_ERROR

    def test_mismatched_corpus_is_a_failure(self, tmp_path):
        cand = tmp_path / "cand.txt"
        ref = tmp_path / "ref.txt"
        cand.write_text("a\nb\n", encoding="utf-8")
        ref.write_text("a\n", encoding="utf-8")
        assert main(["evaluate", "--cand", str(cand), "--refs", str(ref)]) == EXIT_STAGE_FAILURE


class TestCommands:
    """Test individual subcommands."""

    def test_evaluate_identity(self, tmp_path, capsys):
        path = tmp_path / "ref.txt"
        path.write_text("the cat sat on the mat\n", encoding="utf-8")
        assert main(["evaluate", "--cand", str(path), "--refs", str(path)]) == EXIT_OK
        scores = json.loads(capsys.readouterr().out)
        assert scores["bleu"] == 1.0
        assert scores["ter"] == 0.0
        assert scores["segment_count"] == 1

    def test_symmetrize(self, tmp_path):
        forward = tmp_path / "fwd.txt"
        backward = tmp_path / "bwd.txt"
        forward.write_text("0-0 1-1\n", encoding="utf-8")
        backward.write_text("0-0 1-1\n", encoding="utf-8")
        out = tmp_path / "sym.txt"
        code = main(
            [
                "symmetrize",
                "--forward", str(forward),
                "--backward", str(backward),
                "--out", str(out),
                "--orientations", str(tmp_path / "orient.txt"),
            ]
        )
        assert code == EXIT_OK
        assert read_pharaoh(out) == [frozenset({(0, 0), (1, 1)})]
        assert (tmp_path / "orient.txt").exists()

    def test_translate_gloss(self, tmp_path):
        lexicon = tmp_path / "lex.tsv"
        lexicon.write_text("kot\tcat\t1.0\n", encoding="utf-8")
        source = tmp_path / "src.pl"
        source.write_text("Kot śpi.\n\n", encoding="utf-8")
        output = tmp_path / "src.trans"
        code = main(
            [
                "translate",
                "--input", str(source),
                "--output", str(output),
                "--lexicon", str(lexicon),
                "--cache", str(tmp_path / "cache"),
            ]
        )
        assert code == EXIT_OK
        assert output.read_text(encoding="utf-8").splitlines() == ["cat śpi", ""]

    def test_align_and_filter(self, tmp_path):
        src = tmp_path / "doc.pl"
        tgt = tmp_path / "doc.en"
        src.write_text("Origami to sztuka. Papier jest biały.\n", encoding="utf-8")
        tgt.write_text("Origami is an art. Paper is white.\n", encoding="utf-8")
        alignment = tmp_path / "doc.align.tsv"
        stem = tmp_path / "sents.txt"
        code = main(
            [
                "align",
                "--src", str(src),
                "--tgt", str(tgt),
                "--out", str(alignment),
                "--sentences-out", str(stem),
                "--length-only",
            ]
        )
        assert code == EXIT_OK
        assert alignment.exists()

        trans = tmp_path / "doc.trans"
        trans.write_text("origami is art\npaper is white\n", encoding="utf-8")
        out_dir = tmp_path / "filtered"
        code = main(
            [
                "filter",
                "--src", str(tmp_path / "sents.pl"),
                "--trans", str(trans),
                "--tgt", str(tmp_path / "sents.en"),
                "--alignment", str(alignment),
                "--out-dir", str(out_dir),
            ]
        )
        assert code == EXIT_OK
        accepted = (out_dir / "accepted.tsv").read_text(encoding="utf-8").splitlines()
        assert [line.split("\t")[:2] for line in accepted] == [
            ["Origami to sztuka.", "Origami is an art."],
            ["Papier jest biały.", "Paper is white."],
        ]

    def test_crawl_fixture_wiki(self, wiki_dir, tmp_path, capsys):
        code = main(
            [
                "crawl",
                "--seed", "fixture://doc1",
                "--fixtures-dir", str(wiki_dir),
                "--max-articles", "10",
                "--delay-ms", "0",
                "--out-dir", str(tmp_path),
            ]
        )
        assert code == EXIT_OK
        assert "Crawled 3 article pairs" in capsys.readouterr().out
        assert stage_dir(tmp_path, "clean").exists()

    def test_fixture_then_pipeline(self, tmp_path, capsys):
        assert main(["fixture", "--out-dir", str(tmp_path / "fx"), "--documents", "2", "--seed", "3"]) == EXIT_OK
        assert (tmp_path / "fx" / "pipeline.json").exists()
        code = main(
            [
                "pipeline",
                "--config", str(tmp_path / "fx" / "pipeline.json"),
                "--out-dir", str(tmp_path / "run"),
            ]
        )
        assert code == EXIT_OK
        assert "from 2 documents" in capsys.readouterr().out
        assert (tmp_path / "run" / "corpus.pl").exists()
