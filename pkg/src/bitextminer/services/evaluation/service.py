"""Evaluation of a candidate translation file against reference files."""

import time
from pathlib import Path
from typing import List, Sequence

from ...config.logging import get_logger, log_performance
from ...core.textproc import tokenize
from ...exceptions import EmptyCorpusError, InputMismatchError
from .bleu import bleu
from .meteor import meteor
from .models import EvalPair, MetricReport
from .nist import nist
from .ter import ter

logger = get_logger(__name__)


def build_eval_pairs(
    candidates: Sequence[str], reference_sets: Sequence[Sequence[str]]
) -> List[EvalPair]:
    """
    Tokenize line-parallel candidate and reference files into segments.

    Raises:
        InputMismatchError: If a reference file's line count differs
    """
    if not reference_sets:
        raise ValueError("At least one reference set is required")
    for references in reference_sets:
        if len(references) != len(candidates):
            raise InputMismatchError("reference file", len(candidates), len(references))
    return [
        EvalPair(
            candidate=tuple(tokenize(candidate)),
            references=tuple(tuple(tokenize(refs[index])) for refs in reference_sets),
        )
        for index, candidate in enumerate(candidates)
    ]


def evaluate_corpus(
    candidates: Sequence[str],
    reference_sets: Sequence[Sequence[str]],
    percent: bool = False,
) -> MetricReport:
    """Compute BLEU, NIST, METEOR and TER for a candidate file."""
    corpus = build_eval_pairs(candidates, reference_sets)
    if not corpus:
        raise EmptyCorpusError("evaluation")

    start_time = time.perf_counter()
    report = MetricReport(
        bleu=bleu(corpus),
        nist=nist(corpus),
        meteor=meteor(corpus),
        ter=ter(corpus),
        segment_count=len(corpus),
    )
    log_performance(
        "evaluate_corpus",
        (time.perf_counter() - start_time) * 1000,
        segments=len(corpus),
        references=len(reference_sets),
    )
    return report.as_percent() if percent else report


def read_lines(path: Path) -> List[str]:
    with open(path, "r", encoding="utf-8") as f:
        return f.read().splitlines()
