"""Tests for the two-pass sentence aligner."""

import math
import random
from typing import Iterator, List, Optional, Tuple

import pytest

from bitextminer.core.textproc import Sentence
from bitextminer.services.alignment import (
    SEARCH_ORDER,
    AlignerParameters,
    AlignmentLink,
    Lexicon,
    LinkCategory,
    SentenceAlignment,
    align_length_based,
    align_two_pass,
    align_with_lexicon,
    build_auto_lexicon,
    lexicon_from_pairs,
    suggested_positions,
)
from bitextminer.services.alignment.length_model import (
    lexical_coverage,
    length_cost,
    length_delta,
    link_cost,
)

PARAMS = AlignerParameters()
ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def _word(rng: random.Random, lo: int = 2, hi: int = 9) -> str:
    return "".join(rng.choice(ALPHABET) for _ in range(rng.randint(lo, hi)))


def _sentence(rng: random.Random, words: int) -> Sentence:
    return Sentence.from_text(" ".join(_word(rng) for _ in range(words)) + ".")


def _brute_force(
    src: List[Sentence],
    tgt: List[Sentence],
    lexicon: Optional[Lexicon] = None,
    params: AlignerParameters = PARAMS,
) -> Iterator[Tuple[float, Tuple[LinkCategory, ...]]]:
    """Every monotone alignment as (cost, categories), summed link by link from the start."""
    n, m = len(src), len(tgt)

    def edge(i: int, j: int, category: LinkCategory) -> float:
        ni, nj = i + category.src_size, j + category.tgt_size
        cost = link_cost(
            category,
            sum(s.char_len for s in src[i:ni]),
            sum(t.char_len for t in tgt[j:nj]),
            params,
        )
        if lexicon and category.src_size and category.tgt_size:
            cost -= params.lexical_weight * lexical_coverage(
                [tok for s in src[i:ni] for tok in s.tokens],
                [tok for t in tgt[j:nj] for tok in t.tokens],
                lexicon,
            )
        return cost

    def walk(i: int, j: int, acc: float, path: Tuple[LinkCategory, ...]):
        if (i, j) == (n, m):
            yield acc, path
            return
        for category in SEARCH_ORDER:
            ni, nj = i + category.src_size, j + category.tgt_size
            if ni <= n and nj <= m:
                yield from walk(ni, nj, acc + edge(i, j, category), path + (category,))

    yield from walk(0, 0, 0.0, ())


def _oracle(src, tgt, lexicon=None, params=PARAMS) -> Tuple[float, List[LinkCategory]]:
    """Cheapest alignment; ties prefer the earliest SEARCH_ORDER category, last link first."""
    cost, path = min(
        _brute_force(src, tgt, lexicon, params),
        key=lambda item: (item[0], [SEARCH_ORDER.index(c) for c in reversed(item[1])]),
    )
    return cost, list(path)


def _categories(alignment: SentenceAlignment) -> List[LinkCategory]:
    return [link.category for link in alignment]


def _planted_bitext(seed: int, pairs: int = 50, insertions: int = 5):
    """Parallel sentences plus unmatched insertions on both sides.

    Returns both sides and the planted (src, tgt) index pairs.
    """
    rng = random.Random(seed)
    dictionary = {}

    def translate(sentence: Sentence) -> Sentence:
        words = []
        for tok in sentence.tokens:
            if tok not in dictionary:
                dictionary[tok] = _word(rng, max(1, len(tok) - 1), len(tok) + 1)
            words.append(dictionary[tok])
        return Sentence.from_text(" ".join(words) + ".")

    items = [("pair", _sentence(rng, rng.randint(4, 25))) for _ in range(pairs)]
    for side in ("src", "tgt"):
        for _ in range(insertions):
            items.insert(rng.randrange(1, len(items)), (side, _sentence(rng, rng.randint(4, 25))))

    src, tgt, planted = [], [], []
    for kind, sentence in items:
        if kind == "pair":
            planted.append((len(src), len(tgt)))
            src.append(sentence)
            tgt.append(translate(sentence))
        elif kind == "src":
            src.append(sentence)
        else:
            tgt.append(sentence)
    return src, tgt, planted


def _recovered(alignment: SentenceAlignment, planted) -> float:
    linked = {(i, j) for link in alignment.pairs() for i in link.src for j in link.tgt}
    return sum(1 for p in planted if p in linked) / len(planted)


class TestLengthModel:
    """Test the Gale-Church cost terms."""

    def test_equal_lengths_cost_nothing(self):
        assert length_delta(40, 40, PARAMS) == 0.0
        assert length_cost(40, 40, PARAMS) == pytest.approx(0.0)

    def test_cost_grows_with_mismatch(self):
        assert length_cost(40, 45, PARAMS) < length_cost(40, 80, PARAMS)

    def test_delta_is_antisymmetric(self):
        assert length_delta(30, 50, PARAMS) == pytest.approx(-length_delta(50, 30, PARAMS))

    def test_empty_side_is_defined(self):
        assert math.isfinite(length_cost(0, 30, PARAMS))
        assert length_cost(0, 0, PARAMS) == pytest.approx(0.0)

    def test_huge_mismatch_stays_finite(self):
        assert math.isfinite(length_cost(1, 100_000, PARAMS))

    def test_prior_term(self):
        assert link_cost(LinkCategory.ONE_TO_ONE, 10, 10, PARAMS) == pytest.approx(-math.log(0.89))
        assert link_cost(LinkCategory.ONE_TO_TWO, 10, 10, PARAMS) == pytest.approx(
            -math.log(0.089 / 2)
        )

    def test_lexical_coverage(self):
        lexicon = Lexicon({("kot", "cat"): 1.0})
        assert lexical_coverage(["kot", "pies"], ["cat", "dog"], lexicon) == pytest.approx(0.5)
        assert lexical_coverage([], ["cat"], lexicon) == 0.0


class TestAlignLengthBased:
    """Test the length-only dynamic program."""

    def test_equal_lengths_align_one_to_one(self, make_sentences):
        src = make_sentences(["Short one.", "A considerably longer second sentence here."])
        tgt = make_sentences(["Brief one.", "A noticeably lengthier second sentence there."])
        alignment = align_length_based(src, tgt)
        assert alignment.one_to_one() == [(0, 0), (1, 1)]
        alignment.validate(2, 2)

    def test_both_sides_empty(self):
        alignment = align_length_based([], [])
        assert alignment.links == ()
        assert alignment.total_cost == 0.0

    def test_one_side_empty(self, make_sentences):
        alignment = align_length_based(make_sentences(["One.", "Two."]), [])
        assert [link.category for link in alignment] == [LinkCategory.DELETION] * 2
        assert alignment.pairs() == []

    def test_thirty_against_fourteen_and_sixteen(self, make_sentences):
        src = make_sentences(["x" * 30])
        tgt = make_sentences(["y" * 14, "z" * 16])
        (link,) = align_length_based(src, tgt).links
        assert link.category is LinkCategory.ONE_TO_TWO
        assert _oracle(src, tgt)[1] == [LinkCategory.ONE_TO_TWO]

    def test_split_sentence_becomes_one_to_two(self, make_sentences):
        src = make_sentences(["This sentence was split into two parts by the translator."])
        tgt = make_sentences(["This sentence was split into", "two parts by the translator."])
        (link,) = align_length_based(src, tgt).links
        assert link.category is LinkCategory.ONE_TO_TWO

    def test_swapping_sides_mirrors_cost(self):
        rng = random.Random(3)
        src = [_sentence(rng, rng.randint(2, 12)) for _ in range(6)]
        tgt = [_sentence(rng, rng.randint(2, 12)) for _ in range(5)]
        forward = align_length_based(src, tgt)
        backward = align_length_based(tgt, src)
        assert forward.total_cost == pytest.approx(backward.total_cost)

    def test_link_scores_sum_to_total(self):
        rng = random.Random(4)
        src = [_sentence(rng, rng.randint(2, 12)) for _ in range(8)]
        tgt = [_sentence(rng, rng.randint(2, 12)) for _ in range(9)]
        alignment = align_length_based(src, tgt)
        assert sum(link.score for link in alignment) == pytest.approx(alignment.total_cost)

    @pytest.mark.slow
    def test_matches_brute_force(self):
        rng = random.Random(11)
        for _ in range(500):
            n, m = rng.randint(0, 6), rng.randint(0, 6)
            src = [_sentence(rng, rng.randint(1, 10)) for _ in range(n)]
            tgt = [_sentence(rng, rng.randint(1, 10)) for _ in range(m)]
            alignment = align_length_based(src, tgt)
            alignment.validate(n, m)
            cost, categories = _oracle(src, tgt)
            assert alignment.total_cost == cost
            assert _categories(alignment) == categories

    @pytest.mark.slow
    def test_matches_brute_force_on_six_sentences(self):
        rng = random.Random(12)
        for n, m in ((6, 6), (6, 5), (5, 6)):
            src = [_sentence(rng, rng.randint(1, 10)) for _ in range(n)]
            tgt = [_sentence(rng, rng.randint(1, 10)) for _ in range(m)]
            alignment = align_length_based(src, tgt)
            assert (alignment.total_cost, _categories(alignment)) == _oracle(src, tgt)

    @pytest.mark.slow
    def test_lexicon_dp_matches_brute_force(self):
        rng = random.Random(13)
        for _ in range(60):
            n, m = rng.randint(1, 4), rng.randint(1, 4)
            src = [_sentence(rng, rng.randint(1, 6)) for _ in range(n)]
            tgt = [_sentence(rng, rng.randint(1, 6)) for _ in range(m)]
            lexicon = Lexicon(
                {
                    (s.tokens[0], t.tokens[0]): 1.0
                    for s, t in zip(src, tgt)
                }
            )
            alignment = align_with_lexicon(src, tgt, lexicon)
            assert (alignment.total_cost, _categories(alignment)) == _oracle(src, tgt, lexicon)


class TestTwoPass:
    """Test dictionary learning and realignment."""

    def test_recovers_planted_links(self):
        src, tgt, planted = _planted_bitext(seed=21)
        alignment, lexicon = align_two_pass(src, tgt)
        alignment.validate(len(src), len(tgt))
        assert _recovered(alignment, planted) >= 0.9
        assert len(lexicon) > 0

    def test_length_only_also_recovers(self):
        src, tgt, planted = _planted_bitext(seed=22)
        assert _recovered(align_length_based(src, tgt), planted) >= 0.9

    def test_external_lexicon_is_kept(self):
        src, tgt, _ = _planted_bitext(seed=23, pairs=10, insertions=0)
        external = Lexicon({("zzz", "yyy"): 0.5})
        _, lexicon = align_two_pass(src, tgt, external_lexicon=external)
        assert ("zzz", "yyy") in lexicon

    def test_deterministic(self):
        src, tgt, _ = _planted_bitext(seed=24, pairs=20, insertions=2)
        assert align_two_pass(src, tgt) == align_two_pass(src, tgt)

    def test_no_lexical_signal_keeps_first_pass(self):
        rng = random.Random(25)
        src = [_sentence(rng, rng.randint(3, 10)) for _ in range(12)]
        tgt = [
            Sentence.from_text(" ".join(_word(rng, len(tok), len(tok)) for tok in s.tokens) + ".")
            for s in src
        ]
        first = align_length_based(src, tgt)
        second, _ = align_two_pass(src, tgt)
        assert _categories(second) == _categories(first)
        assert first.one_to_one() == [(i, i) for i in range(12)]

    def test_shared_word_breaks_length_tie(self, make_sentences):
        # Only 1-1 and 1-0 links are affordable, so keeping either source
        # sentence costs the same on length alone.
        params = AlignerParameters(prior_expansion_contraction=1e-9, prior_two_to_two=1e-9)
        src = make_sentences(["kot spi.", "pies je."])
        tgt = make_sentences(["the cat."])
        lexicon = Lexicon({("kot", "cat"): 1.0})

        length_only = align_length_based(src, tgt, params)
        assert length_only.one_to_one() == [(1, 0)]
        with_lexicon = align_with_lexicon(src, tgt, lexicon, params)
        assert with_lexicon.one_to_one() == [(0, 0)]
        assert (with_lexicon.total_cost, _categories(with_lexicon)) == _oracle(
            src, tgt, lexicon, params
        )


class TestLexiconLearning:
    """Test co-occurrence lexicon construction."""

    def test_counts_once_per_link(self):
        lexicon = lexicon_from_pairs(
            [(["kot", "kot"], ["cat"]), (["kot"], ["cat", "dog"])], min_count=2
        )
        assert lexicon.entries == {("kot", "cat"): 1.0}

    def test_score_uses_larger_count(self):
        lexicon = lexicon_from_pairs(
            [(["a"], ["x"]), (["a"], ["x"]), (["a"], ["y"]), (["a"], ["y"])], min_count=2
        )
        assert lexicon.score("a", "x") == pytest.approx(0.5)

    def test_floor_drops_weak_entries(self):
        pairs = [(["the"], ["x"])] * 2 + [(["the"], [f"w{i}"]) for i in range(30)]
        lexicon = lexicon_from_pairs(pairs, min_count=2, score_floor=0.1)
        assert ("the", "x") not in lexicon

    def test_auto_lexicon_uses_one_to_one_links(self, make_sentences):
        src = make_sentences(["kot pies.", "kot.", "ryba."])
        tgt = make_sentences(["cat dog.", "cat.", "fish."])
        alignment = SentenceAlignment(
            links=(
                AlignmentLink((0,), (0,)),
                AlignmentLink((1,), (1,)),
                AlignmentLink((2,), ()),
                AlignmentLink((), (2,)),
            )
        )
        lexicon = build_auto_lexicon(src, tgt, alignment, min_count=2)
        assert lexicon.entries == {("kot", "cat"): 1.0}

    def test_invalid_min_count(self):
        with pytest.raises(ValueError):
            build_auto_lexicon([], [], SentenceAlignment(), min_count=0)


class TestModels:
    """Test alignment value types."""

    def test_link_rejects_empty_sides(self):
        with pytest.raises(ValueError):
            AlignmentLink((), ())

    def test_link_rejects_gaps(self):
        with pytest.raises(ValueError):
            AlignmentLink((0, 2), (0,))

    def test_link_rejects_unsupported_shape(self):
        with pytest.raises(ValueError):
            AlignmentLink((0, 1, 2), (0,))

    def test_category_mirror(self):
        assert LinkCategory.ONE_TO_TWO.mirrored is LinkCategory.TWO_TO_ONE
        assert LinkCategory.INSERTION.mirrored is LinkCategory.DELETION

    def test_search_order_starts_with_one_to_one(self):
        assert SEARCH_ORDER[0] is LinkCategory.ONE_TO_ONE
        assert len(SEARCH_ORDER) == 6

    def test_validate_rejects_gaps_and_short_coverage(self):
        alignment = SentenceAlignment(links=(AlignmentLink((0,), (0,)), AlignmentLink((2,), (1,))))
        with pytest.raises(ValueError):
            alignment.validate(3, 2)
        with pytest.raises(ValueError):
            SentenceAlignment(links=(AlignmentLink((0,), (0,)),)).validate(2, 1)

    def test_suggested_positions(self):
        alignment = SentenceAlignment(
            links=(
                AlignmentLink((0,), (0, 1)),
                AlignmentLink((1,), ()),
                AlignmentLink((), (2,)),
                AlignmentLink((2, 3), (3,)),
            )
        )
        assert suggested_positions(alignment, 4) == [0, 2, 3, 3]

    def test_lexicon_best_target_tie_break(self):
        lexicon = Lexicon({("a", "y"): 0.5, ("a", "x"): 0.5, ("a", "z"): 0.2})
        assert lexicon.best_target("a") == "x"
        assert lexicon.best_target("b") is None

    def test_lexicon_score_range(self):
        with pytest.raises(ValueError):
            Lexicon({("a", "b"): 1.5})

    def test_merge_keeps_higher_score(self):
        merged = Lexicon({("a", "b"): 0.3}).merged_with(Lexicon({("a", "b"): 0.6, ("c", "d"): 1.0}))
        assert merged.entries == {("a", "b"): 0.6, ("c", "d"): 1.0}
