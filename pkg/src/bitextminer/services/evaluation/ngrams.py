"""N-gram counting shared by BLEU and NIST."""

from collections import Counter
from typing import Sequence, Tuple

from ...core.textproc import Tokens

NGram = Tuple[str, ...]


def ngram_counts(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def max_reference_counts(references: Sequence[Tokens], n: int) -> Counter:
    """Per n-gram, the highest count in any single reference (the clipping ceiling)."""
    ceiling: Counter = Counter()
    for reference in references:
        for gram, count in ngram_counts(reference, n).items():
            if count > ceiling[gram]:
                ceiling[gram] = count
    return ceiling


def clipped_counts(candidate: Sequence[str], references: Sequence[Tokens], n: int) -> Counter:
    return ngram_counts(candidate, n) & max_reference_counts(references, n)
