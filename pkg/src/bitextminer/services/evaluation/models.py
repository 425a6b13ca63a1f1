"""Data models for MT evaluation."""

from dataclasses import dataclass
from typing import Sequence, Tuple

from pydantic import BaseModel, Field

from ...core.textproc import Tokens


@dataclass(frozen=True)
class EvalPair:
    """A candidate segment with one or more reference segments."""

    candidate: Tokens
    references: Tuple[Tokens, ...]

    def __post_init__(self) -> None:
        if not self.references:
            raise ValueError("An evaluation pair needs at least one reference")

    @classmethod
    def of(cls, candidate: Sequence[str], *references: Sequence[str]) -> "EvalPair":
        return cls(tuple(candidate), tuple(tuple(r) for r in references))


class MetricReport(BaseModel):
    """Corpus-level scores of a candidate translation."""

    bleu: float = Field(ge=0.0)
    nist: float = Field(ge=0.0)
    meteor: float = Field(ge=0.0)
    ter: float = Field(ge=0.0)
    segment_count: int = Field(ge=0)
    percent: bool = False

    def as_percent(self) -> "MetricReport":
        """BLEU, METEOR and TER scaled by 100 for display; NIST is unscaled."""
        if self.percent:
            return self
        return self.model_copy(
            update={
                "bleu": self.bleu * 100.0,
                "meteor": self.meteor * 100.0,
                "ter": self.ter * 100.0,
                "percent": True,
            }
        )
