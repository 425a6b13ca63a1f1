"""Translation-assisted tiered similarity filter."""

from .io import read_accepted, write_accepted
from .matcher import LineFeatures, TierScorer, match_best_candidate
from .models import (
    AcceptedPair,
    Comparator,
    FilterReport,
    FilterTier,
    MatchDecision,
    SimilarityScore,
)
from .service import filter_corpus, proportional_positions, resolve_window
from .tiers import default_tiers, format_tiers, load_tiers, parse_tiers

__all__ = [
    "AcceptedPair",
    "Comparator",
    "FilterReport",
    "FilterTier",
    "LineFeatures",
    "MatchDecision",
    "SimilarityScore",
    "TierScorer",
    "default_tiers",
    "filter_corpus",
    "format_tiers",
    "load_tiers",
    "match_best_candidate",
    "parse_tiers",
    "proportional_positions",
    "read_accepted",
    "resolve_window",
    "write_accepted",
]
