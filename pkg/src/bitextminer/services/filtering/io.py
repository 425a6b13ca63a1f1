"""Accepted-pair TSV files."""

from pathlib import Path
from typing import List, Sequence, Tuple

from ...exceptions import AlignmentFormatError
from .models import AcceptedPair


def write_accepted(path: Path, pairs: Sequence[AcceptedPair]) -> None:
    """Write ``src<TAB>tgt<TAB>score<TAB>tier`` lines."""
    Path(path).write_text(
        "".join(f"{p.src}\t{p.tgt}\t{p.score:.6f}\t{p.tier}\n" for p in pairs),
        encoding="utf-8",
    )


def read_accepted(path: Path) -> List[Tuple[str, str, float, str]]:
    rows = []
    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            fields = line.rstrip("\n").split("\t")
            if fields == [""]:
                continue
            if len(fields) != 4:
                raise AlignmentFormatError(str(path), line_number, "expected 4 fields")
            rows.append((fields[0], fields[1], float(fields[2]), fields[3]))
    return rows
