"""Monotone / swap / discontinuous orientation of adjacent phrase pairs."""

from typing import Iterable, List, Tuple

from .models import Orientation, PhrasePair, Point, WordAlignmentSet


def classify_orientation(prev_phrase: PhrasePair, curr_phrase: PhrasePair) -> Orientation:
    """
    Orientation of ``curr_phrase`` with respect to the phrase before it.

    Monotone when both spans continue right after the previous ones, swap
    when the source advances contiguously but the target span ends right
    before the previous target span, discontinuous otherwise.
    """
    source_follows = curr_phrase.src_start == prev_phrase.src_end + 1
    if source_follows and curr_phrase.tgt_start == prev_phrase.tgt_end + 1:
        return Orientation.MONOTONE
    if source_follows and curr_phrase.tgt_end == prev_phrase.tgt_start - 1:
        return Orientation.SWAP
    return Orientation.DISCONTINUOUS


_PREFERENCE = (Orientation.MONOTONE, Orientation.SWAP, Orientation.DISCONTINUOUS)


def _best(orientations: Iterable[Orientation]) -> Orientation:
    found = set(orientations)
    return next(o for o in _PREFERENCE if o in found or o is Orientation.DISCONTINUOUS)


def word_orientations(
    alignment: WordAlignmentSet,
) -> List[Tuple[Point, Orientation, Orientation]]:
    """
    Word-based bidirectional orientations of every alignment point.

    For each point, in row-major order, returns its orientation relative to
    the points of the previous source word and the orientation of the
    points of the next source word relative to it. Sentence boundaries act
    as virtual points before the first and after the last word pair.
    """
    start = PhrasePair.word(-1, -1)
    end = PhrasePair.word(alignment.src_len, alignment.tgt_len)
    by_source = {}
    for i, j in alignment.points:
        by_source.setdefault(i, []).append(PhrasePair.word(i, j))

    result = []
    for i, j in alignment.sorted_points():
        curr = PhrasePair.word(i, j)
        previous = [start] if i == 0 else by_source.get(i - 1, [])
        following = [end] if i == alignment.src_len - 1 else by_source.get(i + 1, [])
        left = _best(classify_orientation(p, curr) for p in previous)
        right = _best(classify_orientation(curr, n) for n in following)
        result.append(((i, j), left, right))
    return result
