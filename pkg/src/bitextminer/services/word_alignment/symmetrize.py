"""grow-diag-final-and symmetrization of two directional word alignments."""

from typing import Set

from .models import Point, WordAlignmentSet

GDFA_METHOD = "grow-diag-final-and"

# Horizontal and vertical neighbours first, then diagonals.
NEIGHBOURS = ((-1, 0), (0, -1), (1, 0), (0, 1), (-1, -1), (-1, 1), (1, -1), (1, 1))


def _grow_diag(alignment: Set[Point], union: Set[Point]) -> None:
    aligned_src = {i for i, _ in alignment}
    aligned_tgt = {j for _, j in alignment}
    changed = True
    while changed:
        changed = False
        for i, j in sorted(alignment):
            for di, dj in NEIGHBOURS:
                point = (i + di, j + dj)
                if point not in union or point in alignment:
                    continue
                if point[0] not in aligned_src or point[1] not in aligned_tgt:
                    alignment.add(point)
                    aligned_src.add(point[0])
                    aligned_tgt.add(point[1])
                    changed = True
            if changed:
                # Restart the row-major scan from the first point.
                break


def _final_and(alignment: Set[Point], union: Set[Point]) -> None:
    aligned_src = {i for i, _ in alignment}
    aligned_tgt = {j for _, j in alignment}
    for i, j in sorted(union - alignment):
        if i not in aligned_src and j not in aligned_tgt:
            alignment.add((i, j))
            aligned_src.add(i)
            aligned_tgt.add(j)


def symmetrize_gdfa(forward: WordAlignmentSet, backward: WordAlignmentSet) -> WordAlignmentSet:
    """
    Combine source-to-target and target-to-source alignments.

    Starts from their intersection, grows into neighbouring union points
    (diagonals included) that cover a still unaligned source or target word,
    scanning in row-major order until nothing changes, and finally adds union
    points whose source and target words are both unaligned.

    Raises:
        ValueError: If the two alignments disagree on sentence lengths
    """
    if (forward.src_len, forward.tgt_len) != (backward.src_len, backward.tgt_len):
        raise ValueError(
            f"Alignment lengths differ: {forward.src_len}x{forward.tgt_len} "
            f"vs {backward.src_len}x{backward.tgt_len}"
        )
    union = set(forward.points | backward.points)
    alignment = set(forward.points & backward.points)
    _grow_diag(alignment, union)
    _final_and(alignment, union)
    return WordAlignmentSet(points=frozenset(alignment), src_len=forward.src_len, tgt_len=forward.tgt_len)
