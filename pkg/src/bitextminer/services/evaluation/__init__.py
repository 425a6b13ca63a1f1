"""MT evaluation metrics: BLEU, NIST, METEOR and TER."""

from .bleu import bleu, brevity_penalty, closest_reference_length, modified_precision
from .meteor import align_exact, count_chunks, meteor, meteor_score
from .models import EvalPair, MetricReport
from .nist import nist, nist_brevity_factor, nist_info_weights
from .service import build_eval_pairs, evaluate_corpus, read_lines
from .ter import find_shift_candidates, segment_edits, ter, word_edit_distance

__all__ = [
    "EvalPair",
    "MetricReport",
    "align_exact",
    "bleu",
    "brevity_penalty",
    "build_eval_pairs",
    "closest_reference_length",
    "count_chunks",
    "evaluate_corpus",
    "find_shift_candidates",
    "meteor",
    "meteor_score",
    "modified_precision",
    "nist",
    "nist_brevity_factor",
    "nist_info_weights",
    "read_lines",
    "segment_edits",
    "ter",
    "word_edit_distance",
]
