"""Sentence alignment: Gale-Church length model with a learned dictionary."""

from .aligner import (
    align_length_based,
    align_two_pass,
    align_with_lexicon,
    build_auto_lexicon,
    lexicon_from_pairs,
    suggested_positions,
)
from .io import (
    format_alignment,
    merge_lexicons,
    read_alignment,
    read_lexicon,
    write_alignment,
    write_lexicon,
)
from .models import (
    SEARCH_ORDER,
    AlignerParameters,
    AlignmentLink,
    Lexicon,
    LinkCategory,
    SentenceAlignment,
)

__all__ = [
    "SEARCH_ORDER",
    "AlignerParameters",
    "AlignmentLink",
    "Lexicon",
    "LinkCategory",
    "SentenceAlignment",
    "align_length_based",
    "align_two_pass",
    "align_with_lexicon",
    "build_auto_lexicon",
    "format_alignment",
    "lexicon_from_pairs",
    "merge_lexicons",
    "read_alignment",
    "read_lexicon",
    "suggested_positions",
    "write_alignment",
    "write_lexicon",
]
