"""Data models for word alignments and reordering orientations."""

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, Tuple

Point = Tuple[int, int]


class Orientation(Enum):
    """Orientation of a phrase pair relative to its neighbour."""

    MONOTONE = "monotone"
    SWAP = "swap"
    DISCONTINUOUS = "discontinuous"

    @property
    def symbol(self) -> str:
        return self.value[0].upper()


@dataclass(frozen=True)
class WordAlignmentSet:
    """Alignment points ``(source word, target word)`` of one sentence pair."""

    points: FrozenSet[Point]
    src_len: int
    tgt_len: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", frozenset(self.points))
        if self.src_len < 0 or self.tgt_len < 0:
            raise ValueError("Sentence lengths must be non-negative")
        for i, j in self.points:
            if not (0 <= i < self.src_len and 0 <= j < self.tgt_len):
                raise ValueError(
                    f"Point {i}-{j} outside a {self.src_len}x{self.tgt_len} sentence pair"
                )

    @classmethod
    def infer(cls, points: Iterable[Point]) -> "WordAlignmentSet":
        """Alignment whose lengths are the smallest that hold every point."""
        points = frozenset(points)
        return cls(
            points=points,
            src_len=max((i for i, _ in points), default=-1) + 1,
            tgt_len=max((j for _, j in points), default=-1) + 1,
        )

    def sorted_points(self) -> list:
        return sorted(self.points)


@dataclass(frozen=True)
class PhrasePair:
    """Inclusive source and target spans of an aligned phrase pair."""

    src_start: int
    src_end: int
    tgt_start: int
    tgt_end: int

    def __post_init__(self) -> None:
        if self.src_start > self.src_end or self.tgt_start > self.tgt_end:
            raise ValueError(f"Malformed phrase spans: {self}")

    @classmethod
    def word(cls, i: int, j: int) -> "PhrasePair":
        return cls(i, i, j, j)
