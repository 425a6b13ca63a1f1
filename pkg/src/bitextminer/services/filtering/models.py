"""Data models for the translation-assisted sentence filter."""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field


class Comparator(Enum):
    """Similarity functions available to a tier, cheapest first."""

    OVERLAP = "overlap"
    NORMALIZED_OVERLAP = "normalized_overlap"
    RATIO = "ratio"
    SYNONYM_RATIO = "synonym_ratio"

    @property
    def token_based(self) -> bool:
        return self in (Comparator.OVERLAP, Comparator.NORMALIZED_OVERLAP)


@dataclass(frozen=True, slots=True)
class SimilarityScore:
    """A similarity value in [0, 1]."""

    value: float = 0.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"Similarity must be in [0, 1], got {self.value}")

    def __float__(self) -> float:
        return self.value


class FilterTier(BaseModel):
    """A comparator with its acceptance threshold."""

    comparator: Comparator
    threshold: float = Field(ge=0.0, le=1.0)

    model_config = {"frozen": True}

    @property
    def name(self) -> str:
        return self.comparator.value


@dataclass(frozen=True)
class MatchDecision:
    """Outcome of the tier ladder for one translated source line."""

    src_index: int
    tgt_index: Optional[int]
    score: SimilarityScore
    tier_used: Optional[str] = None
    tier_index: Optional[int] = None

    @property
    def accepted(self) -> bool:
        return self.tgt_index is not None


@dataclass(frozen=True)
class AcceptedPair:
    """A source sentence and the target sentence the filter matched to it."""

    src_index: int
    tgt_index: int
    src: str
    tgt: str
    score: float
    tier: str


@dataclass
class FilterReport:
    """Per-document filter counts."""

    src_lines: int = 0
    tgt_lines: int = 0
    candidates_in: int = 0
    accepted: int = 0
    rejected: int = 0
    tier_tallies: List[int] = field(default_factory=list)
    window: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "src_lines": self.src_lines,
            "tgt_lines": self.tgt_lines,
            "candidates_in": self.candidates_in,
            "accepted": self.accepted,
            "rejected": self.rejected,
            "tier_tallies": list(self.tier_tallies),
            "window": self.window,
        }
