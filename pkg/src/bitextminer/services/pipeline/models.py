"""Report models for pipeline runs."""

import csv
import io
from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

from ...core.files import write_json

TOTAL_ROW_ID = "TOTAL"


class CorpusType(Enum):
    """Parallelism of a document pair judged by its accepted fraction."""

    PARALLEL = "parallel"
    NOISY_PARALLEL = "noisy-parallel"
    COMPARABLE = "comparable"
    QUASI_COMPARABLE = "quasi-comparable"

    @classmethod
    def classify(
        cls,
        accepted: int,
        src_sents: int,
        tgt_sents: int,
        parallel_threshold: float = 0.9,
        noisy_parallel_threshold: float = 0.5,
    ) -> "CorpusType":
        shorter = min(src_sents, tgt_sents)
        fraction = accepted / shorter if shorter else 0.0
        if fraction >= parallel_threshold:
            return cls.PARALLEL
        if fraction >= noisy_parallel_threshold:
            return cls.NOISY_PARALLEL
        if fraction > 0.0:
            return cls.COMPARABLE
        return cls.QUASI_COMPARABLE


class ReportRow(BaseModel):
    """Counts for one document pair."""

    doc_id: str
    src_sents: int = Field(ge=0)
    tgt_sents: int = Field(ge=0)
    aligned: int = Field(ge=0, description="Aligner links with both sides non-empty")
    accepted: int = Field(ge=0)
    rejected: int = Field(ge=0)
    tier_tallies: List[int] = Field(default_factory=list)
    src_vocab: int = Field(0, ge=0)
    tgt_vocab: int = Field(0, ge=0)
    corpus_type: CorpusType = CorpusType.QUASI_COMPARABLE

    @model_validator(mode="after")
    def validate_counts(self) -> "ReportRow":
        if self.accepted > self.src_sents:
            raise ValueError(
                f"{self.doc_id}: accepted ({self.accepted}) exceeds source sentences ({self.src_sents})"
            )
        if sum(self.tier_tallies) != self.accepted:
            raise ValueError(f"{self.doc_id}: tier tallies do not add up to accepted")
        return self


class ReportTotals(BaseModel):
    documents: int = 0
    src_sents: int = 0
    tgt_sents: int = 0
    aligned: int = 0
    accepted: int = 0
    rejected: int = 0
    tier_tallies: List[int] = Field(default_factory=list)

    @classmethod
    def of(cls, rows: List[ReportRow], tier_count: int) -> "ReportTotals":
        tallies = [0] * tier_count
        for row in rows:
            for index, count in enumerate(row.tier_tallies):
                tallies[index] += count
        return cls(
            documents=len(rows),
            src_sents=sum(r.src_sents for r in rows),
            tgt_sents=sum(r.tgt_sents for r in rows),
            aligned=sum(r.aligned for r in rows),
            accepted=sum(r.accepted for r in rows),
            rejected=sum(r.rejected for r in rows),
            tier_tallies=tallies,
        )


class GoldCounts(BaseModel):
    """Aligner and filter output judged against planted gold pairs."""

    gold: int = 0
    aligned_yes: int = 0
    aligned_no: int = 0
    filtered_yes: int = 0
    filtered_no: int = 0

    @property
    def precision(self) -> float:
        accepted = self.filtered_yes + self.filtered_no
        return self.filtered_yes / accepted if accepted else 0.0

    @property
    def recall(self) -> float:
        return self.filtered_yes / self.gold if self.gold else 0.0

    @property
    def aligned_precision(self) -> float:
        aligned = self.aligned_yes + self.aligned_no
        return self.aligned_yes / aligned if aligned else 0.0


class GoldReport(BaseModel):
    documents: Dict[str, GoldCounts] = Field(default_factory=dict)
    totals: GoldCounts = Field(default_factory=GoldCounts)
    precision: float = 0.0
    recall: float = 0.0


class MiningReport(BaseModel):
    """Per-document mining counts with corpus totals."""

    source_lang: str
    target_lang: str
    config_hash: str
    tiers: List[str]
    rows: List[ReportRow] = Field(default_factory=list)
    totals: ReportTotals = Field(default_factory=ReportTotals)
    dropped_documents: List[str] = Field(default_factory=list)
    gold: Optional[GoldReport] = None

    @classmethod
    def build(
        cls,
        source_lang: str,
        target_lang: str,
        config_hash: str,
        tiers: List[str],
        rows: List[ReportRow],
        **extra,
    ) -> "MiningReport":
        rows = sorted(rows, key=lambda r: r.doc_id)
        return cls(
            source_lang=source_lang,
            target_lang=target_lang,
            config_hash=config_hash,
            tiers=tiers,
            rows=rows,
            totals=ReportTotals.of(rows, len(tiers)),
            **extra,
        )

    def check_totals(self) -> None:
        """
        Raises:
            ValueError: If the totals are not the column sums of the rows
        """
        expected = ReportTotals.of(self.rows, len(self.tiers))
        if expected != self.totals:
            raise ValueError(f"Report totals {self.totals} do not match row sums {expected}")

    def to_tsv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, delimiter="\t", lineterminator="\n")
        tier_columns = [f"tier{i + 1}" for i in range(len(self.tiers))]
        writer.writerow(
            ["doc_id", "src_sents", "tgt_sents", "aligned", "accepted", "rejected", *tier_columns]
        )
        for row in self.rows:
            writer.writerow(
                [row.doc_id, row.src_sents, row.tgt_sents, row.aligned, row.accepted, row.rejected]
                + row.tier_tallies
            )
        t = self.totals
        writer.writerow(
            [TOTAL_ROW_ID, t.src_sents, t.tgt_sents, t.aligned, t.accepted, t.rejected]
            + t.tier_tallies
        )
        return buffer.getvalue()

    def write(self, out_dir: Path, stem: str = "mining_report") -> None:
        """Write ``<stem>.json`` and ``<stem>.tsv``, checking totals first."""
        self.check_totals()
        out_dir = Path(out_dir)
        write_json(out_dir / f"{stem}.json", self.model_dump(mode="json"))
        (out_dir / f"{stem}.tsv").write_text(self.to_tsv(), encoding="utf-8")
