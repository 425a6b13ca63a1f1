"""Data models for sentence alignment."""

import hashlib
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Set, Tuple

from pydantic import BaseModel, Field

TokenPair = Tuple[str, str]


class LinkCategory(Enum):
    """Link shapes the aligner may produce, in category-index order."""

    INSERTION = "0-1"
    DELETION = "1-0"
    ONE_TO_ONE = "1-1"
    ONE_TO_TWO = "1-2"
    TWO_TO_ONE = "2-1"
    TWO_TO_TWO = "2-2"

    @property
    def src_size(self) -> int:
        return int(self.value[0])

    @property
    def tgt_size(self) -> int:
        return int(self.value[2])

    @property
    def mirrored(self) -> "LinkCategory":
        return LinkCategory(f"{self.tgt_size}-{self.src_size}")

    @classmethod
    def from_sizes(cls, src_size: int, tgt_size: int) -> "LinkCategory":
        return cls(f"{src_size}-{tgt_size}")


# DP evaluation order: 1-1 first, then the rest by category index.
SEARCH_ORDER: Tuple[LinkCategory, ...] = (LinkCategory.ONE_TO_ONE,) + tuple(
    c for c in LinkCategory if c is not LinkCategory.ONE_TO_ONE
)


class AlignerParameters(BaseModel):
    """Length model, priors and lexical weighting for the aligner."""

    prior_one_to_one: float = Field(0.89, gt=0, le=1)
    prior_insertion_deletion: float = Field(0.0099, gt=0, le=1)
    prior_expansion_contraction: float = Field(
        0.089, gt=0, le=1, description="Combined prior of 1-2 and 2-1 links"
    )
    prior_two_to_two: float = Field(0.011, gt=0, le=1)
    mean_ratio: float = Field(1.0, gt=0, description="Expected target/source length ratio c")
    variance: float = Field(6.8, gt=0, description="Length variance s^2")
    lexical_weight: float = Field(0.5, ge=0, description="Lexical bonus weight lambda")
    lexicon_min_count: int = Field(2, ge=1)
    lexicon_score_floor: float = Field(0.1, gt=0, le=1)

    model_config = {"extra": "forbid", "frozen": True}

    def prior(self, category: LinkCategory) -> float:
        if category is LinkCategory.ONE_TO_ONE:
            return self.prior_one_to_one
        if category in (LinkCategory.INSERTION, LinkCategory.DELETION):
            return self.prior_insertion_deletion
        if category in (LinkCategory.ONE_TO_TWO, LinkCategory.TWO_TO_ONE):
            return self.prior_expansion_contraction / 2.0
        return self.prior_two_to_two


@dataclass(frozen=True, slots=True)
class AlignmentLink:
    """One link: contiguous source and target index spans plus its cost."""

    src: Tuple[int, ...]
    tgt: Tuple[int, ...]
    score: float = 0.0

    def __post_init__(self) -> None:
        if not self.src and not self.tgt:
            raise ValueError("An alignment link cannot have two empty sides")
        for span in (self.src, self.tgt):
            if any(b - a != 1 for a, b in zip(span, span[1:])):
                raise ValueError(f"Span {span} is not contiguous")
        LinkCategory.from_sizes(len(self.src), len(self.tgt))

    @property
    def category(self) -> LinkCategory:
        return LinkCategory.from_sizes(len(self.src), len(self.tgt))

    @property
    def is_pair(self) -> bool:
        """Whether both sides are non-empty."""
        return bool(self.src) and bool(self.tgt)


@dataclass(frozen=True)
class SentenceAlignment:
    """Monotone, non-crossing sequence of links covering both documents."""

    links: Tuple[AlignmentLink, ...] = ()
    total_cost: float = 0.0

    def __iter__(self) -> Iterator[AlignmentLink]:
        return iter(self.links)

    def __len__(self) -> int:
        return len(self.links)

    def pairs(self) -> List[AlignmentLink]:
        """Links with both sides non-empty."""
        return [link for link in self.links if link.is_pair]

    def one_to_one(self) -> List[Tuple[int, int]]:
        return [
            (link.src[0], link.tgt[0])
            for link in self.links
            if link.category is LinkCategory.ONE_TO_ONE
        ]

    def validate(self, n_src: int, n_tgt: int) -> None:
        """Check monotonicity and exact coverage of both index ranges."""
        next_src, next_tgt = 0, 0
        for link in self.links:
            if link.src and link.src[0] != next_src:
                raise ValueError(f"Source span {link.src} breaks monotonicity")
            if link.tgt and link.tgt[0] != next_tgt:
                raise ValueError(f"Target span {link.tgt} breaks monotonicity")
            next_src += len(link.src)
            next_tgt += len(link.tgt)
        if (next_src, next_tgt) != (n_src, n_tgt):
            raise ValueError(
                f"Alignment covers {next_src}x{next_tgt}, expected {n_src}x{n_tgt}"
            )


class Lexicon:
    """Bilingual word-association table with scores in (0, 1]."""

    def __init__(self, entries: Optional[Mapping[TokenPair, float]] = None):
        self._entries: Dict[TokenPair, float] = {}
        self._by_source: Dict[str, Set[str]] = {}
        for pair, score in (entries or {}).items():
            self._add(pair, score)

    def _add(self, pair: TokenPair, score: float) -> None:
        if not 0.0 < score <= 1.0:
            raise ValueError(f"Lexicon score for {pair} must be in (0, 1], got {score}")
        self._entries[pair] = float(score)
        self._by_source.setdefault(pair[0], set()).add(pair[1])

    @property
    def entries(self) -> Dict[TokenPair, float]:
        return dict(self._entries)

    @property
    def size(self) -> int:
        return len(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, pair: object) -> bool:
        return pair in self._entries

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Lexicon) and self._entries == other._entries

    def items(self) -> Iterable[Tuple[TokenPair, float]]:
        return sorted(self._entries.items())

    def score(self, src: str, tgt: str) -> float:
        return self._entries.get((src, tgt), 0.0)

    def targets(self, src: str) -> Set[str]:
        return self._by_source.get(src, set())

    def best_target(self, src: str) -> Optional[str]:
        """Highest-scoring translation of ``src``; ties go to the lexicographically first."""
        candidates = self._by_source.get(src)
        if not candidates:
            return None
        return min(candidates, key=lambda t: (-self._entries[(src, t)], t))

    def merged_with(self, other: "Lexicon") -> "Lexicon":
        """Union of both tables keeping the higher score per pair."""
        merged = dict(self._entries)
        for pair, score in other._entries.items():
            merged[pair] = max(score, merged.get(pair, 0.0))
        return Lexicon(merged)

    def fingerprint(self) -> str:
        digest = hashlib.sha256()
        for (src, tgt), score in self.items():
            digest.update(f"{src}\t{tgt}\t{score:.6f}\n".encode("utf-8"))
        return digest.hexdigest()
