"""Pipeline stages: each reads its upstream directory and writes its own.

Output layout under the run directory::

    raw/<id>/...            crawled HTML pairs
    docs/<id>/...           cleaned text pairs
    aligned/<id>/<id>.<lang>.sents, <id>.align.tsv, <id>.lexicon.tsv
    trans/<id>/<id>.trans   translation of the source sentences
    filtered/<id>/<id>.accepted.tsv, <id>.filter.json

Every stage directory carries a ``stage.json`` marker with the config hash.
"""

import asyncio
import shutil
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ...config.logging import get_logger
from ...core.files import read_json, read_lines, write_json, write_lines
from ...core.resources import load_cleaning_rules
from ...core.textproc import (
    Sentence,
    StopwordSet,
    SynonymLexicon,
    load_abbreviations,
    load_synonyms,
    segment_sentences,
)
from ...exceptions import StageFailure
from ..acquisition import (
    build_fetcher,
    clean_pairs,
    crawl_topic,
    read_document_pairs,
    read_raw_pairs,
    write_document_pairs,
    write_failures,
    write_raw_pairs,
)
from ..alignment import (
    AlignerParameters,
    Lexicon,
    SentenceAlignment,
    align_two_pass,
    read_alignment,
    read_lexicon,
    suggested_positions,
    write_alignment,
    write_lexicon,
)
from ..filtering import AcceptedPair, FilterReport, FilterTier, filter_corpus, write_accepted
from ..translation import EngineName, TranslationRequest, build_engine, translate_lines
from .config import PipelineConfig

logger = get_logger(__name__)

STAGE_MARKER = "stage.json"
STAGE_DIRS = {
    "crawl": "raw",
    "clean": "docs",
    "align": "aligned",
    "translate": "trans",
    "filter": "filtered",
}


def stage_dir(out_dir: Path, stage: str) -> Path:
    return Path(out_dir) / STAGE_DIRS[stage]


def write_stage_marker(directory: Path, stage: str, config_hash: str, **extra: Any) -> None:
    write_json(Path(directory) / STAGE_MARKER, {"stage": stage, "config_hash": config_hash, **extra})


def read_stage_marker(directory: Path) -> Optional[Dict[str, Any]]:
    marker = Path(directory) / STAGE_MARKER
    return read_json(marker) if marker.exists() else None


def _reset(directory: Path) -> Path:
    if directory.exists():
        shutil.rmtree(directory)
    directory.mkdir(parents=True)
    return directory


def _doc_ids(directory: Path) -> List[str]:
    if not directory.exists():
        return []
    return sorted(d.name for d in directory.iterdir() if d.is_dir())


def run_parallel(func: Callable, tasks: Sequence[Any], jobs: int) -> List[Any]:
    """Map ``func`` over ``tasks`` in order, in a process pool when ``jobs > 1``."""
    if jobs <= 1 or len(tasks) <= 1:
        return [func(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
        return list(pool.map(func, tasks))


# crawl / clean


def crawl_stage(config: PipelineConfig, out_dir: Path) -> int:
    directory = _reset(stage_dir(out_dir, "crawl"))
    fetcher = build_fetcher(config.paths.fixtures_dir, allow_http=config.crawl.allow_http)
    result = asyncio.run(
        crawl_topic(
            config.crawl.seed_url,
            max_articles=config.crawl.max_articles,
            politeness_delay=config.crawl.delay_ms / 1000.0,
            fetcher=fetcher,
            source_lang=config.source_lang,
            target_lang=config.target_lang,
            concurrency=config.crawl.concurrency,
        )
    )
    count = write_raw_pairs(directory, result.pairs)
    write_failures(directory, result.failures)
    write_stage_marker(directory, "crawl", config.config_hash(), pairs=count)
    return count


def clean_stage(config: PipelineConfig, out_dir: Path) -> int:
    raw_pairs = read_raw_pairs(stage_dir(out_dir, "crawl"))
    directory = _reset(stage_dir(out_dir, "clean"))
    cleaned, dropped = clean_pairs(raw_pairs, load_cleaning_rules())
    count = write_document_pairs(directory, cleaned)
    write_stage_marker(directory, "clean", config.config_hash(), pairs=count, dropped=dropped)
    return count


# align


@dataclass(frozen=True)
class AlignTask:
    doc_id: str
    src_text: str
    tgt_text: str
    src_lang: str
    tgt_lang: str
    params: AlignerParameters
    lexicon: Optional[Lexicon] = None


@dataclass
class AlignOutcome:
    doc_id: str
    src_sentences: List[str] = field(default_factory=list)
    tgt_sentences: List[str] = field(default_factory=list)
    alignment: Optional[SentenceAlignment] = None
    lexicon: Optional[Lexicon] = None
    error: Optional[str] = None


def align_document(task: AlignTask) -> AlignOutcome:
    """Segment both sides and align them with the two-pass aligner."""
    try:
        src = segment_sentences(task.src_text, load_abbreviations(task.src_lang))
        tgt = segment_sentences(task.tgt_text, load_abbreviations(task.tgt_lang))
        alignment, lexicon = align_two_pass(src, tgt, task.lexicon, task.params)
        alignment.validate(len(src), len(tgt))
    except Exception as e:
        return AlignOutcome(doc_id=task.doc_id, error=f"{type(e).__name__}: {e}")
    return AlignOutcome(
        doc_id=task.doc_id,
        src_sentences=[s.text for s in src],
        tgt_sentences=[s.text for s in tgt],
        alignment=alignment,
        lexicon=lexicon,
    )


def aligned_paths(directory: Path, doc_id: str, src_lang: str, tgt_lang: str) -> Dict[str, Path]:
    doc_dir = Path(directory) / doc_id
    return {
        "src": doc_dir / f"{doc_id}.{src_lang}.sents",
        "tgt": doc_dir / f"{doc_id}.{tgt_lang}.sents",
        "alignment": doc_dir / f"{doc_id}.align.tsv",
        "lexicon": doc_dir / f"{doc_id}.lexicon.tsv",
    }


def load_aligner_lexicon(config: PipelineConfig, extra: Optional[Lexicon] = None) -> Optional[Lexicon]:
    external = read_lexicon(config.aligner.lexicon) if config.aligner.lexicon else None
    if extra is None:
        return external
    return external.merged_with(extra) if external is not None else extra


def align_stage(
    config: PipelineConfig, out_dir: Path, jobs: int = 1, extra_lexicon: Optional[Lexicon] = None
) -> int:
    pairs = read_document_pairs(stage_dir(out_dir, "clean"))
    directory = _reset(stage_dir(out_dir, "align"))
    lexicon = load_aligner_lexicon(config, extra_lexicon)
    params = config.aligner.parameters()
    tasks = [
        AlignTask(
            doc_id=pair.id,
            src_text=pair.source_doc.text,
            tgt_text=pair.target_doc.text,
            src_lang=pair.source_doc.lang,
            tgt_lang=pair.target_doc.lang,
            params=params,
            lexicon=lexicon,
        )
        for pair in pairs
    ]
    for outcome in run_parallel(align_document, tasks, jobs):
        if outcome.error is not None:
            raise StageFailure("align", outcome.error, outcome.doc_id)
        paths = aligned_paths(directory, outcome.doc_id, config.source_lang, config.target_lang)
        write_lines(paths["src"], outcome.src_sentences)
        write_lines(paths["tgt"], outcome.tgt_sentences)
        write_alignment(paths["alignment"], outcome.alignment)
        write_lexicon(paths["lexicon"], outcome.lexicon)
        logger.debug(
            "Aligned document",
            doc_id=outcome.doc_id,
            links=len(outcome.alignment),
            pairs=len(outcome.alignment.pairs()),
        )
    write_stage_marker(
        directory,
        "align",
        config.config_hash(),
        documents=len(tasks),
        lexicon_fingerprint=lexicon.fingerprint() if lexicon is not None else None,
    )
    return len(tasks)


# translate


def load_gloss_lexicon(config: PipelineConfig, extra: Optional[Lexicon] = None) -> Lexicon:
    """
    The configured gloss lexicon extended by ``extra``.

    Entries of ``extra`` are added only for source words the configured
    lexicon does not cover.
    """
    base = read_lexicon(config.translation.lexicon) if config.translation.lexicon else Lexicon()
    if extra is None:
        return base
    covered = {src for src, _ in base.entries}
    additions = {pair: score for pair, score in extra.entries.items() if pair[0] not in covered}
    return base.merged_with(Lexicon(additions))


def translation_path(directory: Path, doc_id: str) -> Path:
    return Path(directory) / doc_id / f"{doc_id}.trans"


def translate_stage(
    config: PipelineConfig, out_dir: Path, extra_lexicon: Optional[Lexicon] = None
) -> int:
    aligned = stage_dir(out_dir, "align")
    directory = _reset(stage_dir(out_dir, "translate"))
    cache_dir = config.paths.cache_dir or Path(out_dir) / "cache"
    settings = config.translation
    lexicon = load_gloss_lexicon(config, extra_lexicon)
    engine = build_engine(
        settings.engine,
        lexicon=lexicon,
        memory_path=settings.memory,
        command=settings.command,
        memory_fallback=settings.memory_fallback,
        command_timeout=settings.command_timeout,
    )
    doc_ids = _doc_ids(aligned)
    try:
        for doc_id in doc_ids:
            paths = aligned_paths(aligned, doc_id, config.source_lang, config.target_lang)
            request = TranslationRequest(
                lines=read_lines(paths["src"]),
                source_lang=config.source_lang,
                target_lang=config.target_lang,
            )
            try:
                result = translate_lines(request, engine, cache_dir)
            except Exception as e:
                raise StageFailure("translate", f"{type(e).__name__}: {e}", doc_id) from e
            write_lines(translation_path(directory, doc_id), result.lines)
    finally:
        engine.close()
    write_stage_marker(
        directory,
        "translate",
        config.config_hash(),
        documents=len(doc_ids),
        engine=engine.cache_id,
        lexicon_fingerprint=lexicon.fingerprint() if settings.engine is not EngineName.EXTERNAL else None,
    )
    return len(doc_ids)


# filter


@dataclass(frozen=True)
class FilterTask:
    doc_id: str
    src_lines: List[str]
    trans_lines: List[str]
    tgt_lines: List[str]
    suggested: List[int]
    tiers: List[FilterTier]
    window: Any
    stops: StopwordSet
    synonyms: Optional[SynonymLexicon]
    max_variants: int
    ratio_without_stopwords: bool


@dataclass
class FilterOutcome:
    doc_id: str
    pairs: List[AcceptedPair] = field(default_factory=list)
    report: Optional[FilterReport] = None
    error: Optional[str] = None


def filter_document(task: FilterTask) -> FilterOutcome:
    try:
        pairs, report = filter_corpus(
            task.src_lines,
            task.trans_lines,
            task.tgt_lines,
            task.tiers,
            window=task.window,
            stops=task.stops,
            lex=task.synonyms,
            suggested=task.suggested,
            max_variants=task.max_variants,
            ratio_without_stopwords=task.ratio_without_stopwords,
        )
    except Exception as e:
        return FilterOutcome(doc_id=task.doc_id, error=f"{type(e).__name__}: {e}")
    return FilterOutcome(doc_id=task.doc_id, pairs=pairs, report=report)


def filtered_paths(directory: Path, doc_id: str) -> Dict[str, Path]:
    doc_dir = Path(directory) / doc_id
    return {
        "accepted": doc_dir / f"{doc_id}.accepted.tsv",
        "report": doc_dir / f"{doc_id}.filter.json",
    }


def filter_resources(config: PipelineConfig) -> Tuple[StopwordSet, Optional[SynonymLexicon]]:
    """Stopwords and synonyms of the target language, which translations are written in."""
    settings = config.filtering
    stops = (
        StopwordSet.from_file(config.target_lang, settings.stopwords)
        if settings.stopwords
        else StopwordSet.for_language(config.target_lang)
    )
    synonyms = load_synonyms(settings.synonyms) if settings.synonyms else None
    return stops, synonyms


def filter_stage(config: PipelineConfig, out_dir: Path, jobs: int = 1) -> int:
    aligned = stage_dir(out_dir, "align")
    translated = stage_dir(out_dir, "translate")
    directory = _reset(stage_dir(out_dir, "filter"))
    stops, synonyms = filter_resources(config)
    settings = config.filtering

    tasks = []
    for doc_id in _doc_ids(aligned):
        paths = aligned_paths(aligned, doc_id, config.source_lang, config.target_lang)
        src_lines = read_lines(paths["src"])
        trans_file = translation_path(translated, doc_id)
        if not trans_file.exists():
            raise StageFailure("filter", "missing translation file", doc_id)
        tasks.append(
            FilterTask(
                doc_id=doc_id,
                src_lines=src_lines,
                trans_lines=read_lines(trans_file),
                tgt_lines=read_lines(paths["tgt"]),
                suggested=suggested_positions(read_alignment(paths["alignment"]), len(src_lines)),
                tiers=list(settings.tiers),
                window=settings.window,
                stops=stops,
                synonyms=synonyms,
                max_variants=settings.max_variants,
                ratio_without_stopwords=settings.ratio_without_stopwords,
            )
        )

    for outcome in run_parallel(filter_document, tasks, jobs):
        if outcome.error is not None:
            raise StageFailure("filter", outcome.error, outcome.doc_id)
        paths = filtered_paths(directory, outcome.doc_id)
        paths["accepted"].parent.mkdir(parents=True, exist_ok=True)
        write_accepted(paths["accepted"], outcome.pairs)
        write_json(paths["report"], outcome.report.to_dict())
    write_stage_marker(directory, "filter", config.config_hash(), documents=len(tasks))
    return len(tasks)


def sentence_vocabulary(lines: Sequence[str]) -> int:
    vocabulary = set()
    for line in lines:
        vocabulary.update(Sentence.from_text(line).tokens)
    return len(vocabulary)
