"""NIST: information-weighted n-gram matches with the NIST brevity factor."""

import math
from collections import Counter
from typing import Dict, Sequence

from ...exceptions import EmptyCorpusError
from .models import EvalPair
from .ngrams import NGram, clipped_counts, ngram_counts

# Brevity factor is 0.5 when the candidate is 2/3 of the reference length.
BETA = math.log(0.5) / math.log(1.5) ** 2


def nist_info_weights(corpus: Sequence[EvalPair], max_n: int = 5) -> Dict[NGram, float]:
    """
    ``log2(count(w1..wn-1) / count(w1..wn))`` over all reference n-grams.

    The prefix count of a unigram is the total number of reference words.
    """
    counts: Counter = Counter()
    total_words = 0
    for pair in corpus:
        for reference in pair.references:
            total_words += len(reference)
            for n in range(1, max_n + 1):
                counts.update(ngram_counts(reference, n))

    weights = {}
    for gram, count in counts.items():
        prefix_count = total_words if len(gram) == 1 else counts[gram[:-1]]
        weights[gram] = math.log2(prefix_count / count)
    return weights


def nist_brevity_factor(candidate_len: int, mean_reference_len: float) -> float:
    if candidate_len == 0 or mean_reference_len == 0:
        return 0.0 if candidate_len == 0 else 1.0
    ratio = min(candidate_len / mean_reference_len, 1.0)
    return math.exp(BETA * math.log(ratio) ** 2)


def nist(corpus: Sequence[EvalPair], max_n: int = 5) -> float:
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    if not corpus:
        raise EmptyCorpusError("NIST")

    weights = nist_info_weights(corpus, max_n)
    score = 0.0
    for n in range(1, max_n + 1):
        matched_info = 0.0
        candidate_ngrams = 0
        for pair in corpus:
            candidate_ngrams += sum(ngram_counts(pair.candidate, n).values())
            for gram, count in clipped_counts(pair.candidate, pair.references, n).items():
                matched_info += count * weights.get(gram, 0.0)
        if candidate_ngrams:
            score += matched_info / candidate_ngrams

    c = sum(len(pair.candidate) for pair in corpus)
    mean_r = sum(
        sum(len(r) for r in pair.references) / len(pair.references) for pair in corpus
    )
    return score * nist_brevity_factor(c, mean_r)
