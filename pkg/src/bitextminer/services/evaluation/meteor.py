"""METEOR with exact matching only (no stem, synonym or paraphrase stages)."""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ...core.textproc import Tokens
from ...exceptions import EmptyCorpusError
from .models import EvalPair

ALPHA_WEIGHT = 9.0
PENALTY_GAMMA = 0.5
PENALTY_BETA = 3.0


@dataclass(frozen=True)
class MeteorStats:
    matches: int
    chunks: int
    candidate_len: int
    reference_len: int

    def score(self) -> float:
        return meteor_score(self.matches, self.chunks, self.candidate_len, self.reference_len)


def meteor_score(matches: int, chunks: int, candidate_len: int, reference_len: int) -> float:
    """``F·(1 - 0.5·(chunks/matches)^3)`` with ``F = 10PR / (R + 9P)``."""
    if matches == 0:
        return 0.0
    precision = matches / candidate_len
    recall = matches / reference_len
    f_mean = (1.0 + ALPHA_WEIGHT) * precision * recall / (recall + ALPHA_WEIGHT * precision)
    penalty = PENALTY_GAMMA * (chunks / matches) ** PENALTY_BETA
    return f_mean * (1.0 - penalty)


def align_exact(candidate: Tokens, reference: Tokens) -> List[Tuple[int, int]]:
    """
    One-to-one exact word alignment with as few chunks as the greedy search finds.

    Candidate words are visited left to right. A word continues the current
    chunk when the next reference word matches; otherwise it takes the free
    reference occurrence that starts the longest matching run (earliest on
    ties).
    """
    used = [False] * len(reference)
    alignment: List[Tuple[int, int]] = []
    previous_ref = None
    for i, word in enumerate(candidate):
        if (
            previous_ref is not None
            and previous_ref + 1 < len(reference)
            and not used[previous_ref + 1]
            and reference[previous_ref + 1] == word
        ):
            chosen = previous_ref + 1
        else:
            chosen, best_run = None, 0
            for j, ref_word in enumerate(reference):
                if used[j] or ref_word != word:
                    continue
                run = 1
                while (
                    i + run < len(candidate)
                    and j + run < len(reference)
                    and not used[j + run]
                    and candidate[i + run] == reference[j + run]
                ):
                    run += 1
                if run > best_run:
                    chosen, best_run = j, run
        if chosen is None:
            previous_ref = None
            continue
        used[chosen] = True
        alignment.append((i, chosen))
        previous_ref = chosen
    return alignment


def count_chunks(alignment: Sequence[Tuple[int, int]]) -> int:
    """Runs of matches adjacent in both the candidate and the reference."""
    chunks = 0
    previous = None
    for i, j in alignment:
        if previous is None or i != previous[0] + 1 or j != previous[1] + 1:
            chunks += 1
        previous = (i, j)
    return chunks


def segment_stats(pair: EvalPair) -> MeteorStats:
    """Statistics against the reference giving the best segment score (first on ties)."""
    best = None
    for reference in pair.references:
        alignment = align_exact(pair.candidate, reference)
        stats = MeteorStats(
            matches=len(alignment),
            chunks=count_chunks(alignment),
            candidate_len=len(pair.candidate),
            reference_len=len(reference),
        )
        if best is None or stats.score() > best.score():
            best = stats
    return best


def meteor(corpus: Sequence[EvalPair]) -> float:
    """Corpus METEOR from summed per-segment statistics."""
    if not corpus:
        raise EmptyCorpusError("METEOR")
    stats = [segment_stats(pair) for pair in corpus]
    return meteor_score(
        matches=sum(s.matches for s in stats),
        chunks=sum(s.chunks for s in stats),
        candidate_len=sum(s.candidate_len for s in stats),
        reference_len=sum(s.reference_len for s in stats),
    )
