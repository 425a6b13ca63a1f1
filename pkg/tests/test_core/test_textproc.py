"""Tests for segmentation, tokenization, stopwords and synonym expansion."""

import pytest

from bitextminer.core.textproc import (
    Sentence,
    StopwordSet,
    SynonymLexicon,
    expand_synonyms,
    join_tokens,
    load_abbreviations,
    load_synonyms,
    remove_stopwords,
    segment_sentences,
    tokenize,
)


class TestSegmentSentences:
    """Test sentence segmentation."""

    def test_empty_text(self):
        assert segment_sentences("") == []

    def test_two_sentences(self):
        sentences = segment_sentences("It is origami. This is origami.")
        assert [s.text for s in sentences] == ["It is origami.", "This is origami."]

    def test_abbreviation_does_not_split(self):
        sentences = segment_sentences("Dr. Smith left. He ran.", load_abbreviations("en"))
        assert [s.text for s in sentences] == ["Dr. Smith left.", "He ran."]

    def test_abbreviation_splits_without_list(self):
        assert len(segment_sentences("Dr. Smith left. He ran.")) == 3

    def test_lowercase_continuation_is_not_a_boundary(self):
        sentences = segment_sentences("Version 2. is out. Next one soon.")
        assert [s.text for s in sentences] == ["Version 2. is out.", "Next one soon."]

    def test_blank_line_is_a_boundary(self):
        sentences = segment_sentences("First paragraph without stop\n\nsecond paragraph.")
        assert [s.text for s in sentences] == [
            "First paragraph without stop",
            "second paragraph.",
        ]

    def test_question_and_exclamation(self):
        sentences = segment_sentences("Is it origami? Yes! It is.")
        assert len(sentences) == 3

    def test_concatenation_reproduces_input(self):
        text = "Kupiłem sobie nowy samochód.  To był dobry dzień!\nNp. jutro."
        sentences = segment_sentences(text, load_abbreviations("pl"))
        assert "".join(s.text for s in sentences).replace(" ", "") == "".join(text.split())

    def test_polish_abbreviation(self):
        sentences = segment_sentences("Mamy np. Origami. Koniec.", load_abbreviations("pl"))
        assert [s.text for s in sentences] == ["Mamy np. Origami.", "Koniec."]


class TestSentence:
    """Test the Sentence value type."""

    def test_char_len_excludes_whitespace(self):
        sentence = Sentence.from_text("It  is\torigami.")
        assert sentence.text == "It is origami."
        assert sentence.char_len == 12
        assert sentence.tokens == ("it", "is", "origami")


class TestTokenize:
    """Test tokenization."""

    def test_english(self):
        assert tokenize("It is origami.") == ["it", "is", "origami"]

    def test_empty(self):
        assert tokenize("") == []

    def test_polish(self):
        assert tokenize("Kupiłem sobie nowy samochód.") == ["kupiłem", "sobie", "nowy", "samochód"]

    def test_inner_hyphen_and_apostrophe_kept(self):
        assert tokenize("Well-known (don't) —") == ["well-known", "don't"]

    def test_symbols_are_not_punctuation(self):
        assert tokenize("C++ costs $5 or 4€ + tax.") == ["c++", "costs", "$5", "or", "4€", "+", "tax"]

    def test_idempotent_on_own_output(self):
        tokens = tokenize("\"Hello,\" said the well-known origami-master!")
        assert tokenize(join_tokens(tokens)) == tokens


class TestStopwords:
    """Test stopword removal."""

    def test_removes_listed_words(self):
        stops = StopwordSet(lang="en", words=frozenset({"it", "is"}))
        assert remove_stopwords(["it", "is", "origami"], stops) == ["origami"]

    def test_empty_stop_list_is_identity(self):
        assert remove_stopwords(["origami"], StopwordSet(lang="en")) == ["origami"]

    def test_all_removed(self):
        assert remove_stopwords(["the", "the"], StopwordSet("en", frozenset({"the"}))) == []

    def test_entries_are_lowercased(self):
        stops = StopwordSet(lang="en", words=frozenset({"The"}))
        assert "the" in stops

    def test_shipped_lists(self):
        assert "the" in StopwordSet.for_language("en")
        assert "jest" in StopwordSet.for_language("pl")
        assert StopwordSet.for_language("xx").words == frozenset()


class TestSynonyms:
    """Test synonym lexicon loading and expansion."""

    def test_expansion_adds_variant(self):
        lex = SynonymLexicon({"will": frozenset({"would"})})
        variants = expand_synonyms(["i", "will", "call"], lex, max_variants=10)
        assert variants == [("i", "will", "call"), ("i", "would", "call")]

    def test_empty_lexicon_keeps_original_only(self):
        assert expand_synonyms(["a", "b"], SynonymLexicon()) == [("a", "b")]

    def test_truncated_to_max_variants(self):
        lex = SynonymLexicon(
            {
                "a": frozenset({"a1", "a2"}),
                "b": frozenset({"b1", "b2"}),
                "c": frozenset({"c1", "c2"}),
            }
        )
        variants = expand_synonyms(["a", "b", "c"], lex, max_variants=5)
        assert len(variants) == 5
        assert variants[0] == ("a", "b", "c")
        assert variants[1] == ("a", "b", "c1")

    def test_max_variants_must_be_positive(self):
        with pytest.raises(ValueError):
            expand_synonyms(["a"], SynonymLexicon(), max_variants=0)

    def test_self_synonym_rejected(self):
        with pytest.raises(ValueError):
            SynonymLexicon({"a": frozenset({"a"})})

    def test_load_synonyms_file(self, tmp_path):
        path = tmp_path / "syn.tsv"
        path.write_text("will\twould,shall,will\n# comment\n\nWill\tgonna\n", encoding="utf-8")
        lex = load_synonyms(path)
        assert lex.synonyms("will") == frozenset({"would", "shall", "gonna"})
        assert lex.synonyms("would") == frozenset()
