"""Judging aligner and filter output against planted gold sentence pairs."""

from pathlib import Path
from typing import Dict, List, Mapping, Sequence, Tuple

from ...exceptions import AlignmentFormatError
from .models import GoldCounts, GoldReport

TextPair = Tuple[str, str]


def read_gold(path: Path) -> Dict[str, List[TextPair]]:
    """Read ``doc_id<TAB>src sentence<TAB>tgt sentence`` lines."""
    gold: Dict[str, List[TextPair]] = {}
    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise AlignmentFormatError(str(path), line_number, "expected 3 fields")
            gold.setdefault(fields[0], []).append((fields[1], fields[2]))
    return gold


def write_gold(path: Path, gold: Mapping[str, Sequence[TextPair]]) -> None:
    Path(path).write_text(
        "".join(
            f"{doc_id}\t{src}\t{tgt}\n"
            for doc_id in sorted(gold)
            for src, tgt in gold[doc_id]
        ),
        encoding="utf-8",
    )


def _split(pairs: Sequence[TextPair], gold: set) -> Tuple[int, int]:
    yes = sum(1 for pair in pairs if pair in gold)
    return yes, len(pairs) - yes


def evaluate_against_gold(
    aligned: Mapping[str, Sequence[TextPair]],
    accepted: Mapping[str, Sequence[TextPair]],
    gold: Mapping[str, Sequence[TextPair]],
) -> GoldReport:
    """
    Count correct (YES) and incorrect (NO) pairs per document.

    Aligned pairs are the aligner's non-empty links, accepted pairs the
    filter output. Precision and recall are those of the filter output.
    """
    documents: Dict[str, GoldCounts] = {}
    totals = GoldCounts()
    for doc_id in sorted(set(aligned) | set(accepted) | set(gold)):
        gold_pairs = set(gold.get(doc_id, ()))
        aligned_yes, aligned_no = _split(aligned.get(doc_id, ()), gold_pairs)
        filtered_yes, filtered_no = _split(accepted.get(doc_id, ()), gold_pairs)
        counts = GoldCounts(
            gold=len(gold_pairs),
            aligned_yes=aligned_yes,
            aligned_no=aligned_no,
            filtered_yes=filtered_yes,
            filtered_no=filtered_no,
        )
        documents[doc_id] = counts
        totals = GoldCounts(
            gold=totals.gold + counts.gold,
            aligned_yes=totals.aligned_yes + counts.aligned_yes,
            aligned_no=totals.aligned_no + counts.aligned_no,
            filtered_yes=totals.filtered_yes + counts.filtered_yes,
            filtered_no=totals.filtered_no + counts.filtered_no,
        )
    return GoldReport(
        documents=documents,
        totals=totals,
        precision=totals.precision,
        recall=totals.recall,
    )
