"""Pharaoh alignment files: one sentence pair per line, space-separated ``i-j``."""

from pathlib import Path
from typing import FrozenSet, Iterable, List, Optional

from ...config.logging import get_logger
from ...exceptions import AlignmentFormatError, ConfigurationError, InputMismatchError
from .models import Point, WordAlignmentSet
from .symmetrize import GDFA_METHOD, symmetrize_gdfa

logger = get_logger(__name__)


def parse_pharaoh_line(line: str, path: str = "<input>", line_number: int = 0) -> FrozenSet[Point]:
    points = set()
    for item in line.split():
        left, sep, right = item.partition("-")
        if not sep or not left.isdigit() or not right.isdigit():
            raise AlignmentFormatError(path, line_number, f"malformed alignment point '{item}'")
        points.add((int(left), int(right)))
    return frozenset(points)


def format_pharaoh_line(points: Iterable[Point]) -> str:
    return " ".join(f"{i}-{j}" for i, j in sorted(points))


def read_pharaoh(path: Path) -> List[FrozenSet[Point]]:
    with open(path, "r", encoding="utf-8") as f:
        return [
            parse_pharaoh_line(line, str(path), number)
            for number, line in enumerate(f.read().splitlines(), start=1)
        ]


def write_pharaoh(path: Path, alignments: Iterable[WordAlignmentSet]) -> None:
    Path(path).write_text(
        "".join(format_pharaoh_line(a.points) + "\n" for a in alignments), encoding="utf-8"
    )


def symmetrize_files(
    forward_path: Path,
    backward_path: Path,
    out_path: Path,
    method: str = GDFA_METHOD,
    src_lengths: Optional[List[int]] = None,
    tgt_lengths: Optional[List[int]] = None,
) -> int:
    """
    Symmetrize two Pharaoh files line by line and write the result.

    Sentence lengths default to the smallest that hold the points of both
    directions. Returns the number of sentence pairs written.
    """
    if method != GDFA_METHOD:
        raise ConfigurationError("method", f"only '{GDFA_METHOD}' is supported, got '{method}'")
    forward = read_pharaoh(forward_path)
    backward = read_pharaoh(backward_path)
    if len(forward) != len(backward):
        raise InputMismatchError("backward alignment file", len(forward), len(backward))

    results = []
    for index, (f_points, b_points) in enumerate(zip(forward, backward)):
        inferred = WordAlignmentSet.infer(f_points | b_points)
        src_len = src_lengths[index] if src_lengths else inferred.src_len
        tgt_len = tgt_lengths[index] if tgt_lengths else inferred.tgt_len
        try:
            results.append(
                symmetrize_gdfa(
                    WordAlignmentSet(f_points, src_len, tgt_len),
                    WordAlignmentSet(b_points, src_len, tgt_len),
                )
            )
        except ValueError as e:
            raise AlignmentFormatError(str(forward_path), index + 1, str(e))
    write_pharaoh(out_path, results)
    logger.info("Symmetrized alignments", sentence_pairs=len(results), out=str(out_path))
    return len(results)
