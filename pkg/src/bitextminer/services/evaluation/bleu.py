"""Corpus BLEU with clipped n-gram precision and brevity penalty, unsmoothed."""

import math
from typing import Sequence, Tuple

from ...exceptions import EmptyCorpusError
from .models import EvalPair
from .ngrams import clipped_counts, ngram_counts


def closest_reference_length(candidate_len: int, pair: EvalPair) -> int:
    """Reference length closest to the candidate's; ties go to the shorter one."""
    return min((abs(len(r) - candidate_len), len(r)) for r in pair.references)[1]


def modified_precision(corpus: Sequence[EvalPair], n: int) -> Tuple[int, int]:
    """Corpus totals ``(clipped matches, candidate n-grams)`` for order ``n``."""
    matches = total = 0
    for pair in corpus:
        matches += sum(clipped_counts(pair.candidate, pair.references, n).values())
        total += sum(ngram_counts(pair.candidate, n).values())
    return matches, total


def brevity_penalty(candidate_len: int, reference_len: int) -> float:
    if candidate_len == 0:
        return 0.0
    if candidate_len > reference_len:
        return 1.0
    return math.exp(1.0 - reference_len / candidate_len)


def bleu(corpus: Sequence[EvalPair], max_n: int = 4) -> float:
    """
    Corpus-level BLEU with uniform weights over orders ``1..max_n``.

    Any order with zero clipped matches (or no candidate n-grams) gives 0.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    if not corpus:
        raise EmptyCorpusError("BLEU")

    log_precision = 0.0
    for n in range(1, max_n + 1):
        matches, total = modified_precision(corpus, n)
        if matches == 0 or total == 0:
            return 0.0
        log_precision += math.log(matches / total) / max_n

    c = sum(len(pair.candidate) for pair in corpus)
    r = sum(closest_reference_length(len(pair.candidate), pair) for pair in corpus)
    return brevity_penalty(c, r) * math.exp(log_precision)
