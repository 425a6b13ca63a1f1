"""Alignment and lexicon TSV files."""

from pathlib import Path
from typing import List, Tuple

from ...exceptions import AlignmentFormatError
from .models import AlignmentLink, Lexicon, SentenceAlignment

EMPTY_SIDE = "-"


def _format_span(span: Tuple[int, ...]) -> str:
    return ",".join(str(i) for i in span) if span else EMPTY_SIDE


def _parse_span(field: str) -> Tuple[int, ...]:
    if field == EMPTY_SIDE:
        return ()
    return tuple(int(i) for i in field.split(","))


def format_alignment(alignment: SentenceAlignment) -> str:
    return "".join(
        f"{_format_span(link.src)}\t{_format_span(link.tgt)}\t{link.score:.6f}\n"
        for link in alignment
    )


def write_alignment(path: Path, alignment: SentenceAlignment) -> None:
    """Write ``src_indices<TAB>tgt_indices<TAB>score`` lines."""
    Path(path).write_text(format_alignment(alignment), encoding="utf-8")


def read_alignment(path: Path) -> SentenceAlignment:
    """
    Read an alignment file.

    The total cost is recomputed as the sum of the stored link scores, so it
    carries the six-decimal rounding of the file.
    """
    links: List[AlignmentLink] = []
    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise AlignmentFormatError(str(path), line_number, "expected 3 fields")
            try:
                links.append(
                    AlignmentLink(
                        src=_parse_span(fields[0]),
                        tgt=_parse_span(fields[1]),
                        score=float(fields[2]),
                    )
                )
            except ValueError as e:
                raise AlignmentFormatError(str(path), line_number, str(e))
    return SentenceAlignment(
        links=tuple(links), total_cost=sum(link.score for link in links)
    )


def write_lexicon(path: Path, lexicon: Lexicon) -> None:
    """Write ``src<TAB>tgt<TAB>score`` lines sorted by pair."""
    Path(path).write_text(
        "".join(f"{s}\t{t}\t{score:.6f}\n" for (s, t), score in lexicon.items()),
        encoding="utf-8",
    )


def read_lexicon(path: Path) -> Lexicon:
    """
    Read a lexicon TSV.

    A two-column line (``src<TAB>tgt``) is accepted as a seed dictionary
    entry with score 1.0.
    """
    entries = {}
    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) not in (2, 3):
                raise AlignmentFormatError(str(path), line_number, "expected 2 or 3 fields")
            try:
                score = float(fields[2]) if len(fields) == 3 else 1.0
            except ValueError as e:
                raise AlignmentFormatError(str(path), line_number, str(e))
            if not 0.0 < score <= 1.0:
                raise AlignmentFormatError(
                    str(path), line_number, f"score {score} outside (0, 1]"
                )
            pair = (fields[0].strip().lower(), fields[1].strip().lower())
            entries[pair] = max(score, entries.get(pair, 0.0))
    return Lexicon(entries)


def merge_lexicons(*lexicons: Lexicon) -> Lexicon:
    """Union of several lexicons, keeping the highest score per pair."""
    merged = Lexicon()
    for lexicon in lexicons:
        merged = merged.merged_with(lexicon)
    return merged
