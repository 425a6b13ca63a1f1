"""Pipeline orchestration and the bootstrap retraining loop."""

import shutil
import time
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from structlog.contextvars import bound_contextvars

from ...config.logging import LoggerMixin, get_logger, log_performance
from ...config.settings import get_settings
from ...core.files import read_json, read_lines, write_json, write_lines
from ...core.textproc import tokenize
from ...exceptions import BitextMinerError, StageFailure
from ..alignment import Lexicon, lexicon_from_pairs, read_alignment, write_lexicon
from ..filtering import read_accepted
from .config import PipelineConfig
from .gold import evaluate_against_gold, read_gold
from .models import CorpusType, MiningReport, ReportRow
from .stages import (
    STAGE_DIRS,
    align_stage,
    aligned_paths,
    clean_stage,
    crawl_stage,
    filter_stage,
    filtered_paths,
    read_stage_marker,
    sentence_vocabulary,
    stage_dir,
    translate_stage,
)

logger = get_logger(__name__)

REPORT_STEM = "mining_report"
BOOTSTRAP_REPORT = "bootstrap_report.json"
LEARNED_LEXICON = "learned_lexicon.tsv"

TextPair = Tuple[str, str]


def corpus_paths(out_dir: Path, config: PipelineConfig) -> Tuple[Path, Path]:
    return (
        Path(out_dir) / f"corpus.{config.source_lang}",
        Path(out_dir) / f"corpus.{config.target_lang}",
    )


class PipelineRunner(LoggerMixin):
    """
    Runs the enabled stages of one configuration in order.

    Disabled stages are not rerun; later stages read whatever their
    upstream directory already holds, so a run can resume from any stage.
    """

    def __init__(
        self,
        config: PipelineConfig,
        jobs: Optional[int] = None,
        aligner_lexicon: Optional[Lexicon] = None,
        gloss_lexicon: Optional[Lexicon] = None,
    ):
        self.config = config
        self.out_dir = Path(config.paths.out_dir)
        self.jobs = jobs or get_settings().jobs
        self.aligner_lexicon = aligner_lexicon
        self.gloss_lexicon = gloss_lexicon

    def _dispatch(self, stage: str) -> int:
        if stage == "crawl":
            return crawl_stage(self.config, self.out_dir)
        if stage == "clean":
            return clean_stage(self.config, self.out_dir)
        if stage == "align":
            return align_stage(self.config, self.out_dir, self.jobs, self.aligner_lexicon)
        if stage == "translate":
            return translate_stage(self.config, self.out_dir, self.gloss_lexicon)
        return filter_stage(self.config, self.out_dir, self.jobs)

    def _run_stage(self, stage: str) -> None:
        if not getattr(self.config.stages, stage):
            self.logger.info("Skipping stage", stage=stage, reuse=str(stage_dir(self.out_dir, stage)))
            return
        start_time = time.perf_counter()
        with bound_contextvars(stage=stage):
            try:
                count = self._dispatch(stage)
            except BitextMinerError:
                raise
            except Exception as e:
                raise StageFailure(stage, f"{type(e).__name__}: {e}") from e
            log_performance(
                f"stage:{stage}", (time.perf_counter() - start_time) * 1000, documents=count
            )

    def run(self) -> MiningReport:
        self.out_dir.mkdir(parents=True, exist_ok=True)
        self.logger.info(
            "Starting pipeline",
            out_dir=str(self.out_dir),
            config_hash=self.config.config_hash()[:12],
            jobs=self.jobs,
        )
        for stage in STAGE_DIRS:
            self._run_stage(stage)
        report = assemble_report(self.config, self.out_dir)
        self.logger.info(
            "Pipeline finished",
            documents=report.totals.documents,
            accepted=report.totals.accepted,
            aligned=report.totals.aligned,
        )
        return report


def _document_pairs(
    config: PipelineConfig, out_dir: Path, doc_id: str
) -> Tuple[ReportRow, List[TextPair], List[TextPair]]:
    aligned = aligned_paths(stage_dir(out_dir, "align"), doc_id, config.source_lang, config.target_lang)
    filtered = filtered_paths(stage_dir(out_dir, "filter"), doc_id)
    src_lines = read_lines(aligned["src"])
    tgt_lines = read_lines(aligned["tgt"])
    alignment = read_alignment(aligned["alignment"])
    accepted = [(src, tgt) for src, tgt, _, _ in read_accepted(filtered["accepted"])]
    filter_report = read_json(filtered["report"])

    aligned_pairs = [
        (" ".join(src_lines[i] for i in link.src), " ".join(tgt_lines[j] for j in link.tgt))
        for link in alignment.pairs()
    ]
    row = ReportRow(
        doc_id=doc_id,
        src_sents=len(src_lines),
        tgt_sents=len(tgt_lines),
        aligned=len(aligned_pairs),
        accepted=filter_report["accepted"],
        rejected=filter_report["rejected"],
        tier_tallies=filter_report["tier_tallies"],
        src_vocab=sentence_vocabulary(src_lines),
        tgt_vocab=sentence_vocabulary(tgt_lines),
        corpus_type=CorpusType.classify(
            filter_report["accepted"],
            len(src_lines),
            len(tgt_lines),
            config.report.parallel_threshold,
            config.report.noisy_parallel_threshold,
        ),
    )
    return row, aligned_pairs, accepted


def assemble_report(config: PipelineConfig, out_dir: Path) -> MiningReport:
    """
    Build the corpus files and the mining report from the filter stage output.

    Documents are reduced in doc id order.
    """
    out_dir = Path(out_dir)
    filtered_dir = stage_dir(out_dir, "filter")
    doc_ids = (
        sorted(d.name for d in filtered_dir.iterdir() if d.is_dir()) if filtered_dir.exists() else []
    )
    rows: List[ReportRow] = []
    aligned_by_doc: Dict[str, List[TextPair]] = {}
    accepted_by_doc: Dict[str, List[TextPair]] = {}
    for doc_id in doc_ids:
        try:
            row, aligned_pairs, accepted = _document_pairs(config, out_dir, doc_id)
        except Exception as e:
            raise StageFailure("report", f"{type(e).__name__}: {e}", doc_id) from e
        rows.append(row)
        aligned_by_doc[doc_id] = aligned_pairs
        accepted_by_doc[doc_id] = accepted

    src_corpus, tgt_corpus = corpus_paths(out_dir, config)
    pairs = [pair for doc_id in doc_ids for pair in accepted_by_doc[doc_id]]
    write_lines(src_corpus, [src for src, _ in pairs])
    write_lines(tgt_corpus, [tgt for _, tgt in pairs])

    gold = None
    if config.report.gold is not None:
        gold = evaluate_against_gold(aligned_by_doc, accepted_by_doc, read_gold(config.report.gold))
        logger.info("Gold evaluation", precision=round(gold.precision, 4), recall=round(gold.recall, 4))

    clean_marker = read_stage_marker(stage_dir(out_dir, "clean")) or {}
    report = MiningReport.build(
        source_lang=config.source_lang,
        target_lang=config.target_lang,
        config_hash=config.config_hash(),
        tiers=[tier.name for tier in config.filtering.tiers],
        rows=rows,
        dropped_documents=list(clean_marker.get("dropped", [])),
        gold=gold,
    )
    report.write(out_dir, REPORT_STEM)
    return report


def run_pipeline(config: PipelineConfig, jobs: Optional[int] = None) -> MiningReport:
    """
    Run crawl, clean, align, translate and filter, then write the corpus and report.

    Raises:
        StageFailure: With the stage name and, where known, the document id
    """
    return PipelineRunner(config, jobs).run()


def accepted_token_pairs(out_dir: Path) -> List[Tuple[List[str], List[str]]]:
    filtered_dir = stage_dir(out_dir, "filter")
    pairs = []
    for doc_dir in sorted(d for d in filtered_dir.iterdir() if d.is_dir()):
        for src, tgt, _, _ in read_accepted(filtered_paths(filtered_dir, doc_dir.name)["accepted"]):
            pairs.append((tokenize(src), tokenize(tgt)))
    return pairs


def _round_config(config: PipelineConfig, round_dir: Path, first: bool) -> PipelineConfig:
    round_config = config.with_out_dir(round_dir)
    if first:
        return round_config
    return round_config.model_copy(
        update={"stages": config.stages.model_copy(update={"crawl": False, "clean": False})}
    )


def iterate_bootstrap(
    config: PipelineConfig, rounds: int, jobs: Optional[int] = None
) -> MiningReport:
    """
    Repeat align, translate and filter, retraining the lexicons between rounds.

    After each round a lexicon is learned from the accepted pairs. It is
    merged into the aligner lexicon and extends the gloss lexicon for the
    following rounds. Each round writes to ``rounds/round-<n>/``; the last
    completed round is copied to the output directory. A round accepting
    nothing ends the loop.
    """
    if rounds < 1:
        raise ValueError("rounds must be at least 1")
    out_dir = Path(config.paths.out_dir)
    rounds_dir = out_dir / "rounds"
    learned: Optional[Lexicon] = None
    summaries = []
    last_dir: Optional[Path] = None
    report: Optional[MiningReport] = None
    bound = logger.bind(component="bootstrap", out_dir=str(out_dir))

    for round_number in range(1, rounds + 1):
        round_dir = rounds_dir / f"round-{round_number}"
        if round_number > 1:
            if round_dir.exists():
                shutil.rmtree(round_dir)
            for stage in ("crawl", "clean"):
                if stage_dir(last_dir, stage).exists():
                    shutil.copytree(stage_dir(last_dir, stage), stage_dir(round_dir, stage))
        runner = PipelineRunner(
            _round_config(config, round_dir, first=round_number == 1),
            jobs,
            aligner_lexicon=learned,
            gloss_lexicon=learned,
        )
        report = runner.run()
        last_dir = round_dir
        summaries.append(
            {
                "round": round_number,
                "accepted": report.totals.accepted,
                "aligned": report.totals.aligned,
                "learned_lexicon_size": learned.size if learned is not None else 0,
            }
        )
        bound.info("Bootstrap round finished", round=round_number, accepted=report.totals.accepted)
        if report.totals.accepted == 0:
            bound.warning("Round accepted no pairs, stopping early", round=round_number)
            break
        if round_number == rounds:
            break
        params = config.aligner
        round_learned = lexicon_from_pairs(
            accepted_token_pairs(round_dir),
            min_count=params.lexicon_min_count,
            score_floor=params.lexicon_score_floor,
        )
        learned = learned.merged_with(round_learned) if learned is not None else round_learned
        write_lexicon(round_dir / LEARNED_LEXICON, learned)

    shutil.copytree(last_dir, out_dir, dirs_exist_ok=True)
    write_json(
        out_dir / BOOTSTRAP_REPORT,
        {"rounds_requested": rounds, "rounds_run": len(summaries), "rounds": summaries},
    )
    return report
