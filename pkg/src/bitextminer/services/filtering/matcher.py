"""Tier ladder scoring of one translated line against candidate target lines."""

from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Sequence, Tuple

from ...core.similarity import (
    overlap_similarity,
    ratio_similarity,
    raw_overlap_similarity,
    synonym_similarity,
)
from ...core.textproc import (
    DEFAULT_MAX_VARIANTS,
    StopwordSet,
    SynonymLexicon,
    Tokens,
    join_tokens,
    remove_stopwords,
    tokenize,
)
from .models import Comparator, FilterTier, MatchDecision, SimilarityScore


@dataclass(frozen=True, slots=True)
class LineFeatures:
    """Comparator inputs derived once per line."""

    tokens: Tokens
    content: Tokens
    content_text: str

    @classmethod
    def from_line(cls, line: str, stops: StopwordSet) -> "LineFeatures":
        tokens = tuple(tokenize(line))
        content = tuple(remove_stopwords(tokens, stops))
        return cls(tokens=tokens, content=content, content_text=join_tokens(content))


class TierScorer:
    """
    Scores line pairs with the comparators of a tier ladder.

    Token comparators always see stopword-free tokens. Ratio comparators see
    the stopword-free tokens joined by spaces unless ``ratio_without_stopwords``
    is off, in which case they see all tokens. A pair where either side has
    nothing left to compare scores 0.
    """

    def __init__(
        self,
        stops: StopwordSet,
        synonyms: Optional[SynonymLexicon] = None,
        max_variants: int = DEFAULT_MAX_VARIANTS,
        ratio_without_stopwords: bool = True,
    ):
        self.stops = stops
        self.synonyms = synonyms or SynonymLexicon()
        self.max_variants = max_variants
        self.ratio_without_stopwords = ratio_without_stopwords

    def features(self, line: str) -> LineFeatures:
        return LineFeatures.from_line(line, self.stops)

    def _ratio_inputs(self, f: LineFeatures) -> Tokens:
        return f.content if self.ratio_without_stopwords else f.tokens

    def score(self, comparator: Comparator, a: LineFeatures, b: LineFeatures) -> float:
        if comparator.token_based:
            if not a.content or not b.content:
                return 0.0
            if comparator is Comparator.OVERLAP:
                return raw_overlap_similarity(a.content, b.content)
            return overlap_similarity(a.content, b.content)

        a_tokens, b_tokens = self._ratio_inputs(a), self._ratio_inputs(b)
        if not a_tokens or not b_tokens:
            return 0.0
        if comparator is Comparator.RATIO:
            return ratio_similarity(join_tokens(a_tokens), join_tokens(b_tokens))
        return synonym_similarity(a_tokens, b_tokens, self.synonyms, self.max_variants)


def best_of(scores: Iterable[Tuple[int, float]]) -> Tuple[Optional[int], float]:
    """Highest score, ties to the lowest index."""
    best_index, best_score = None, 0.0
    for index, score in scores:
        if best_index is None or score > best_score or (
            score == best_score and index < best_index
        ):
            best_index, best_score = index, score
    return best_index, best_score


def match_best_candidate(
    trans_line: str,
    candidates: Sequence[Tuple[int, str]],
    tiers: Sequence[FilterTier],
    stops: StopwordSet,
    lex: Optional[SynonymLexicon] = None,
    max_variants: int = DEFAULT_MAX_VARIANTS,
    src_index: int = 0,
    scorer: Optional[TierScorer] = None,
) -> MatchDecision:
    """
    Run the tier ladder for one translated line over ``(tgt_index, text)`` candidates.

    The first tier whose best score reaches its threshold decides the match;
    otherwise the decision carries no target and the best score seen.
    """
    if not tiers:
        raise ValueError("At least one filter tier is required")
    if not candidates:
        return MatchDecision(src_index=src_index, tgt_index=None, score=SimilarityScore(0.0))

    scorer = scorer or TierScorer(stops, lex, max_variants)
    trans = scorer.features(trans_line)
    features: Dict[int, LineFeatures] = {j: scorer.features(text) for j, text in candidates}

    best_seen = 0.0
    for tier_index, tier in enumerate(tiers):
        tgt_index, score = best_of(
            (j, scorer.score(tier.comparator, trans, f)) for j, f in sorted(features.items())
        )
        if score >= tier.threshold and score > 0.0:
            return MatchDecision(
                src_index=src_index,
                tgt_index=tgt_index,
                score=SimilarityScore(score),
                tier_used=tier.name,
                tier_index=tier_index,
            )
        best_seen = max(best_seen, score)
    return MatchDecision(src_index=src_index, tgt_index=None, score=SimilarityScore(best_seen))
