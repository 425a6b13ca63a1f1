"""Sentence similarity functions used by the filter ladder.

All scores are floats in ``[0, 1]``.
"""

from collections import Counter
from difflib import SequenceMatcher
from typing import Sequence

from .textproc import DEFAULT_MAX_VARIANTS, SynonymLexicon, expand_synonyms, join_tokens


def overlap_count(a: Sequence[str], b: Sequence[str]) -> int:
    """Size of the multiset intersection of two token sequences."""
    return sum((Counter(a) & Counter(b)).values())


def raw_overlap_similarity(a: Sequence[str], b: Sequence[str]) -> float:
    """
    Fraction of ``a``'s tokens that also occur in ``b``.

    This is the naive word-count comparison: a long candidate that happens to
    contain every word of ``a`` scores 1.0, however much else it contains.
    """
    if not a:
        return 1.0 if not b else 0.0
    return overlap_count(a, b) / len(a)


def overlap_similarity(a: Sequence[str], b: Sequence[str]) -> float:
    """Shared tokens normalized by total length: ``2·|a ∩ b| / (|a| + |b|)``."""
    total = len(a) + len(b)
    if total == 0:
        return 1.0
    return 2.0 * overlap_count(a, b) / total


def ratio_similarity(a: str, b: str) -> float:
    """
    Matching-blocks ratio ``2·M / T``.

    ``M`` counts characters in the longest common blocks found recursively
    (earliest in ``a``, then earliest in ``b``, on ties) and ``T`` is the
    combined length. Junk heuristics are disabled so long strings are
    compared exactly.
    """
    return SequenceMatcher(None, a, b, autojunk=False).ratio()


def synonym_similarity(
    a: Sequence[str],
    b: Sequence[str],
    lex: SynonymLexicon,
    max_variants: int = DEFAULT_MAX_VARIANTS,
) -> float:
    """Best ratio over all synonym variants of both sides (many-to-many)."""
    best = 0.0
    b_variants = [join_tokens(v) for v in expand_synonyms(b, lex, max_variants)]
    for a_variant in expand_synonyms(a, lex, max_variants):
        a_text = join_tokens(a_variant)
        for b_text in b_variants:
            score = ratio_similarity(a_text, b_text)
            if score > best:
                best = score
                if best == 1.0:
                    return best
    return best
