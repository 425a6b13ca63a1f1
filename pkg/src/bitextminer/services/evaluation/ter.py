"""Translation edit rate with greedy phrase shifts."""

import math
from typing import Iterator, List, Sequence, Tuple

from rapidfuzz.distance import Levenshtein

from ...exceptions import EmptyCorpusError
from .models import EvalPair


def word_edit_distance(hypothesis: Sequence[str], reference: Sequence[str]) -> int:
    return Levenshtein.distance(list(hypothesis), list(reference))


def find_shift_candidates(
    hypothesis: Sequence[str], reference: Sequence[str]
) -> Iterator[Tuple[int, int, int]]:
    """
    Yield ``(hyp_start, ref_start, length)`` for phrases of the hypothesis that
    also occur in the reference at a different position, extended as far as
    both sides keep agreeing.
    """
    for i in range(len(hypothesis)):
        for j in range(len(reference)):
            if i == j or hypothesis[i] != reference[j]:
                continue
            length = 1
            while (
                i + length < len(hypothesis)
                and j + length < len(reference)
                and hypothesis[i + length] == reference[j + length]
            ):
                length += 1
            yield i, j, length


def _best_shift(hypothesis: List[str], reference: Sequence[str]) -> Tuple[int, List[str]]:
    current = word_edit_distance(hypothesis, reference)
    best_gain, best_words = 0, hypothesis
    for i, j, length in find_shift_candidates(hypothesis, reference):
        shifted = hypothesis[:i] + hypothesis[i + length :]
        shifted[j:j] = hypothesis[i : i + length]
        gain = current - word_edit_distance(shifted, reference)
        if gain > best_gain:
            best_gain, best_words = gain, shifted
    return best_gain, best_words


def segment_edits(hypothesis: Sequence[str], reference: Sequence[str]) -> int:
    """
    Shifts plus remaining word edits.

    Shifts cost one edit each and are applied while the best one lowers the
    edit distance, so the result bounds the exact value from above.
    """
    words = list(hypothesis)
    shifts = 0
    while True:
        gain, shifted = _best_shift(words, reference)
        if gain <= 0:
            break
        shifts += 1
        words = shifted
    return shifts + word_edit_distance(words, reference)


def _edit_rate(edits: int, reference_len: int) -> float:
    if reference_len == 0:
        return 0.0 if edits == 0 else math.inf
    return edits / reference_len


def ter(corpus: Sequence[EvalPair]) -> float:
    """
    Total edits over total reference length.

    Each segment uses its best reference, the one with the lowest edit rate
    (fewer edits on ties).
    """
    if not corpus:
        raise EmptyCorpusError("TER")
    edits = reference_words = 0
    for pair in corpus:
        scored = [(segment_edits(pair.candidate, ref), len(ref)) for ref in pair.references]
        best_edits, best_len = min(scored, key=lambda s: (_edit_rate(*s), s[0]))
        edits += best_edits
        reference_words += best_len
    if reference_words == 0:
        return float(edits)
    return edits / reference_words
