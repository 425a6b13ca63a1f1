"""Tests for BLEU, NIST, METEOR and TER."""

import pytest

from bitextminer.exceptions import EmptyCorpusError, InputMismatchError
from bitextminer.services.evaluation import (
    EvalPair,
    align_exact,
    bleu,
    brevity_penalty,
    build_eval_pairs,
    count_chunks,
    evaluate_corpus,
    meteor,
    modified_precision,
    nist,
    nist_brevity_factor,
    nist_info_weights,
    segment_edits,
    ter,
)
from bitextminer.services.evaluation.ngrams import ngram_counts

IDENTICAL = [
    EvalPair.of("the cat sat on the mat".split(), "the cat sat on the mat".split()),
    EvalPair.of("paper cranes fly far away".split(), "paper cranes fly far away".split()),
]
DISJOINT = [EvalPair.of("kot ma psa".split(), "the cat has a dog".split())]


class TestBleu:
    """Test corpus BLEU."""

    def test_clipped_unigram_precision(self):
        corpus = [EvalPair.of(["the"] * 4, ["the", "cat"])]
        assert modified_precision(corpus, 1) == (1, 4)
        assert bleu(corpus, max_n=1) == pytest.approx(0.25, abs=1e-9)

    def test_identity(self):
        assert bleu(IDENTICAL) == 1.0

    def test_disjoint(self):
        assert bleu(DISJOINT) == 0.0

    def test_no_shared_four_gram_is_zero(self):
        corpus = [EvalPair.of("a b c d e".split(), "a b c x d e".split())]
        assert bleu(corpus) == 0.0
        assert bleu(corpus, max_n=3) > 0.0

    def test_clipping_never_exceeds_raw_matches(self):
        corpus = [EvalPair.of("a a b b c".split(), "a b".split(), "b b".split())]
        matches, total = modified_precision(corpus, 1)
        assert matches == 3
        assert total == 5

    def test_brevity_penalty(self):
        assert brevity_penalty(4, 4) == 1.0
        assert brevity_penalty(2, 4) == pytest.approx(0.36787944117144233)
        assert brevity_penalty(0, 4) == 0.0

    def test_closest_reference_length_is_used(self):
        corpus = [EvalPair.of("a b".split(), "a b".split(), "a b c d e f".split())]
        assert bleu(corpus, max_n=2) == 1.0

    def test_empty_corpus(self):
        with pytest.raises(EmptyCorpusError):
            bleu([])

    def test_invalid_order(self):
        with pytest.raises(ValueError):
            bleu(IDENTICAL, max_n=0)


class TestNist:
    """Test NIST scoring."""

    def test_two_word_example(self):
        assert nist([EvalPair.of(["a", "b"], ["a", "b"])]) == pytest.approx(1.0, abs=1e-9)

    def test_rare_word_weight(self):
        weights = nist_info_weights([EvalPair.of(["x"], "a a a b".split())])
        assert weights[("b",)] == pytest.approx(2.0)
        assert weights[("a", "b")] == pytest.approx(1.584962500721156)

    def test_zero_matches(self):
        assert nist(DISJOINT) == 0.0

    def test_brevity_factor_half_at_two_thirds(self):
        assert nist_brevity_factor(2, 3.0) == pytest.approx(0.5)
        assert nist_brevity_factor(5, 3.0) == 1.0

    def test_empty_corpus(self):
        with pytest.raises(EmptyCorpusError):
            nist([])


class TestMeteor:
    """Test exact-match METEOR."""

    def test_single_token(self):
        assert meteor([EvalPair.of(["hello"], ["hello"])]) == pytest.approx(0.5, abs=1e-9)

    def test_four_tokens(self):
        corpus = [EvalPair.of(list("abcd"), list("abcd"))]
        assert meteor(corpus) == pytest.approx(0.9921875, abs=1e-9)

    def test_disjoint(self):
        assert meteor(DISJOINT) == 0.0

    def test_identity_is_closed_form(self):
        matches = sum(len(pair.candidate) for pair in IDENTICAL)
        expected = 1.0 - 0.5 * (len(IDENTICAL) / matches) ** 3
        assert meteor(IDENTICAL) == pytest.approx(expected)

    def test_best_reference_wins(self):
        pair = EvalPair.of("a b c".split(), "x y z".split(), "a b c".split())
        assert meteor([pair]) == pytest.approx(1.0 - 0.5 / 27)

    def test_reordering_costs_chunks(self):
        alignment = align_exact(("c", "d", "a", "b"), ("a", "b", "c", "d"))
        assert alignment == [(0, 2), (1, 3), (2, 0), (3, 1)]
        assert count_chunks(alignment) == 2

    def test_repeated_words_prefer_longest_run(self):
        alignment = align_exact(("the", "cat"), ("the", "dog", "the", "cat"))
        assert alignment == [(0, 2), (1, 3)]

    def test_empty_corpus(self):
        with pytest.raises(EmptyCorpusError):
            meteor([])


class TestTer:
    """Test translation edit rate."""

    def test_substitution(self):
        assert ter([EvalPair.of(["a", "x", "c"], ["a", "b", "c"])]) == pytest.approx(1 / 3, abs=1e-9)

    def test_shift(self):
        assert segment_edits(["c", "a", "b"], ["a", "b", "c"]) == 1
        assert ter([EvalPair.of(["c", "a", "b"], ["a", "b", "c"])]) == pytest.approx(1 / 3, abs=1e-9)

    def test_identity(self):
        assert ter(IDENTICAL) == 0.0

    def test_phrase_shift_counts_once(self):
        assert segment_edits("d e a b c".split(), "a b c d e".split()) == 1

    def test_best_reference(self):
        pair = EvalPair.of(["a", "b"], ["x", "y", "z"], ["a", "b"])
        assert ter([pair]) == 0.0

    def test_best_reference_has_lowest_edit_rate(self):
        candidate = ["a", "b", "c", "d"]
        short_ref = ["a", "b", "x"]
        long_ref = ["a", "b", "c", "d", "e", "f", "g", "h"]
        assert segment_edits(candidate, short_ref) == 2
        assert segment_edits(candidate, long_ref) == 4
        assert ter([EvalPair.of(candidate, short_ref, long_ref)]) == 0.5

    def test_empty_corpus(self):
        with pytest.raises(EmptyCorpusError):
            ter([])


class TestEvaluateCorpus:
    """Test file-level evaluation."""

    def test_report(self):
        report = evaluate_corpus(["The cat sat on the mat."], [["the cat sat on the mat"]])
        assert report.bleu == 1.0
        assert report.ter == 0.0
        assert report.segment_count == 1

    def test_percent_scaling(self):
        plain = evaluate_corpus(["a b c d"], [["a b c x"]])
        scaled = evaluate_corpus(["a b c d"], [["a b c x"]], percent=True)
        assert scaled.ter == pytest.approx(plain.ter * 100)
        assert scaled.nist == pytest.approx(plain.nist)
        assert scaled.percent

    def test_line_count_mismatch(self):
        with pytest.raises(InputMismatchError):
            build_eval_pairs(["a", "b"], [["a"]])

    def test_empty_input(self):
        with pytest.raises(EmptyCorpusError):
            evaluate_corpus([], [[]])

    def test_ngram_counts(self):
        assert ngram_counts(["a", "b", "a", "b"], 2)[("a", "b")] == 2
