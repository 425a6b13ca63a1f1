"""Command-line interface: one subcommand per pipeline stage plus whole-run commands."""

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from .config.logging import get_logger
from .core.files import read_lines, write_json, write_lines
from .core.resources import load_cleaning_rules
from .core.textproc import (
    Sentence,
    StopwordSet,
    load_abbreviations,
    load_synonyms,
    segment_sentences,
)
from .exceptions import EXIT_OK, ConfigurationError, handle_cli_exception
from .services.acquisition import (
    clean_pairs,
    read_raw_pairs,
    write_document_pairs,
)
from .services.alignment import (
    align_length_based,
    align_two_pass,
    read_alignment,
    read_lexicon,
    suggested_positions,
    write_alignment,
    write_lexicon,
)
from .services.evaluation import evaluate_corpus
from .services.filtering import default_tiers, filter_corpus, load_tiers, write_accepted
from .services.pipeline import (
    PipelineConfig,
    generate_fixture,
    iterate_bootstrap,
    load_pipeline_config,
    pipeline_config_schema,
    run_pipeline,
    stage_dir,
    validate_pipeline_config,
)
from .services.pipeline.stages import clean_stage, crawl_stage
from .services.translation import EngineName, TranslationRequest, build_engine, translate_lines
from .services.word_alignment import (
    GDFA_METHOD,
    WordAlignmentSet,
    read_pharaoh,
    symmetrize_files,
    word_orientations,
)
from .utils.config import ensure_cache_directory, initialize_application

logger = get_logger(__name__)


def _optional_config(args: argparse.Namespace) -> Optional[PipelineConfig]:
    return load_pipeline_config(Path(args.config)) if args.config else None


def _required_config(args: argparse.Namespace) -> PipelineConfig:
    if not args.config:
        raise ConfigurationError("--config", f"'{args.command}' needs a pipeline config file")
    config = load_pipeline_config(Path(args.config))
    if args.out_dir:
        config = config.with_out_dir(Path(args.out_dir))
    return config


def _out_dir(args: argparse.Namespace, config: Optional[PipelineConfig] = None) -> Path:
    if args.out_dir:
        return Path(args.out_dir)
    return Path(config.paths.out_dir) if config is not None else Path("out")


def _read_sentences(path: Path, lang: str, segmented: bool) -> List[Sentence]:
    if segmented:
        return [Sentence.from_text(line) for line in read_lines(path) if line.strip()]
    return segment_sentences(Path(path).read_text(encoding="utf-8"), load_abbreviations(lang))


# stage commands


def cmd_crawl(args: argparse.Namespace) -> int:
    base = _optional_config(args)
    data = base.model_dump(mode="json") if base is not None else {}
    crawl = data.setdefault("crawl", {})
    if args.seed:
        crawl["seed_url"] = args.seed
    if args.max_articles is not None:
        crawl["max_articles"] = args.max_articles
    if args.delay_ms is not None:
        crawl["delay_ms"] = args.delay_ms
    if args.no_http:
        crawl["allow_http"] = False
    if args.source_lang:
        data["source_lang"] = args.source_lang
    if args.target_lang:
        data["target_lang"] = args.target_lang
    if args.fixtures_dir:
        data.setdefault("paths", {})["fixtures_dir"] = str(Path(args.fixtures_dir).resolve())
    data.setdefault("stages", {}).update({"crawl": True, "clean": True})
    config = validate_pipeline_config(data, source="crawl options")

    out_dir = _out_dir(args, config)
    pairs = crawl_stage(config, out_dir)
    kept = clean_stage(config, out_dir)
    print(f"Crawled {pairs} article pairs, kept {kept} after cleaning -> {stage_dir(out_dir, 'clean')}")
    return EXIT_OK


def cmd_clean(args: argparse.Namespace) -> int:
    out_dir = _out_dir(args)
    raw_dir = Path(args.in_dir) if args.in_dir else stage_dir(out_dir, "crawl")
    rules = load_cleaning_rules(args.rules) if args.rules else load_cleaning_rules()
    cleaned, dropped = clean_pairs(read_raw_pairs(raw_dir), rules)
    count = write_document_pairs(stage_dir(out_dir, "clean"), cleaned)
    print(f"Cleaned {count} document pairs ({len(dropped)} dropped)")
    return EXIT_OK


def cmd_align(args: argparse.Namespace) -> int:
    config = _optional_config(args)
    params = config.aligner.parameters() if config is not None else None
    src = _read_sentences(Path(args.src), args.source_lang, args.segmented)
    tgt = _read_sentences(Path(args.tgt), args.target_lang, args.segmented)
    extra = {"params": params} if params is not None else {}

    if args.length_only:
        alignment = align_length_based(src, tgt, **extra)
        lexicon = None
    else:
        external = read_lexicon(Path(args.lexicon)) if args.lexicon else None
        alignment, lexicon = align_two_pass(src, tgt, external, **extra)

    write_alignment(Path(args.out), alignment)
    if args.lexicon_out and lexicon is not None:
        write_lexicon(Path(args.lexicon_out), lexicon)
    if args.sentences_out:
        stem = Path(args.sentences_out)
        write_lines(stem.with_suffix(f".{args.source_lang}"), [s.text for s in src])
        write_lines(stem.with_suffix(f".{args.target_lang}"), [s.text for s in tgt])
    print(f"Aligned {len(src)}x{len(tgt)} sentences into {len(alignment)} links")
    return EXIT_OK


def cmd_translate(args: argparse.Namespace) -> int:
    config = _optional_config(args)
    section = config.translation if config is not None else None
    engine_name = EngineName(args.engine) if args.engine else (
        section.engine if section is not None else EngineName.GLOSS
    )
    lexicon_path = args.lexicon or (section.lexicon if section is not None else None)
    engine = build_engine(
        engine_name,
        lexicon=read_lexicon(Path(lexicon_path)) if lexicon_path else None,
        memory_path=Path(args.tm) if args.tm else (section.memory if section is not None else None),
        command=args.cmd or (section.command if section is not None else None),
        memory_fallback=not args.no_fallback,
        command_timeout=args.timeout or (section.command_timeout if section is not None else 60.0),
    )
    cache_dir = Path(args.cache) if args.cache else ensure_cache_directory()
    request = TranslationRequest(
        lines=read_lines(Path(args.input)),
        source_lang=args.source_lang,
        target_lang=args.target_lang,
    )
    try:
        result = translate_lines(request, engine, cache_dir)
    finally:
        engine.close()
    write_lines(Path(args.output), result.lines)
    print(
        f"Translated {len(result.lines)} lines with {result.engine} "
        f"({result.cache_hits} cached, {result.engine_calls} engine calls)"
    )
    return EXIT_OK


def cmd_filter(args: argparse.Namespace) -> int:
    config = _optional_config(args)
    settings = config.filtering if config is not None else None
    if args.tiers:
        tiers = load_tiers(Path(args.tiers))
    else:
        tiers = list(settings.tiers) if settings is not None else default_tiers()
    window = args.window or (settings.window if settings is not None else "auto")
    if isinstance(window, str) and window.isdigit():
        window = int(window)

    src_lines = read_lines(Path(args.src))
    suggested = (
        suggested_positions(read_alignment(Path(args.alignment)), len(src_lines))
        if args.alignment
        else None
    )
    stops = (
        StopwordSet.from_file(args.target_lang, Path(args.stopwords))
        if args.stopwords
        else StopwordSet.for_language(args.target_lang)
    )
    synonyms = load_synonyms(Path(args.synonyms)) if args.synonyms else None

    pairs, report = filter_corpus(
        src_lines,
        read_lines(Path(args.trans)),
        read_lines(Path(args.tgt)),
        tiers,
        window=window,
        stops=stops,
        lex=synonyms,
        suggested=suggested,
    )
    out_dir = _out_dir(args)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_accepted(out_dir / "accepted.tsv", pairs)
    write_json(out_dir / "report.json", report.to_dict())
    print(f"Accepted {report.accepted} of {report.candidates_in} candidate lines -> {out_dir}")
    return EXIT_OK


def cmd_evaluate(args: argparse.Namespace) -> int:
    candidates = read_lines(Path(args.cand))
    references = [read_lines(Path(p)) for p in args.refs.split(",") if p]
    report = evaluate_corpus(candidates, references, percent=args.percent)
    print(json.dumps(report.model_dump(mode="json"), indent=2, sort_keys=True))
    return EXIT_OK


def cmd_symmetrize(args: argparse.Namespace) -> int:
    count = symmetrize_files(
        Path(args.forward), Path(args.backward), Path(args.out), method=args.method
    )
    if args.orientations:
        lines = []
        for points in read_pharaoh(Path(args.out)):
            alignment = WordAlignmentSet.infer(points)
            lines.append(
                " ".join(
                    f"{i}-{j}:{left.symbol}{right.symbol}"
                    for (i, j), left, right in word_orientations(alignment)
                )
            )
        write_lines(Path(args.orientations), lines)
    print(f"Symmetrized {count} sentence pairs -> {args.out}")
    return EXIT_OK


# whole-run commands


def cmd_pipeline(args: argparse.Namespace) -> int:
    report = run_pipeline(_required_config(args), jobs=args.jobs)
    print(
        f"Mined {report.totals.accepted} sentence pairs from {report.totals.documents} documents"
    )
    return EXIT_OK


def cmd_bootstrap(args: argparse.Namespace) -> int:
    report = iterate_bootstrap(_required_config(args), rounds=args.rounds, jobs=args.jobs)
    print(
        f"Mined {report.totals.accepted} sentence pairs from {report.totals.documents} documents"
    )
    return EXIT_OK


def cmd_fixture(args: argparse.Namespace) -> int:
    corpus = generate_fixture(
        Path(args.out_dir or "fixture"),
        documents=args.documents,
        seed=args.seed,
        noise_only=args.noise_only,
    )
    print(
        f"Wrote {corpus.documents} documents with {corpus.planted_pairs} planted pairs; "
        f"config: {corpus.config_path}"
    )
    return EXIT_OK


def cmd_schema(args: argparse.Namespace) -> int:
    print(json.dumps(pipeline_config_schema(), indent=2, sort_keys=True))
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "crawl": cmd_crawl,
    "clean": cmd_clean,
    "align": cmd_align,
    "translate": cmd_translate,
    "filter": cmd_filter,
    "evaluate": cmd_evaluate,
    "symmetrize": cmd_symmetrize,
    "pipeline": cmd_pipeline,
    "bootstrap": cmd_bootstrap,
    "fixture": cmd_fixture,
    "schema": cmd_schema,
}


def _positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="pipeline config file (JSON)")
    common.add_argument("--out-dir", help="output directory")
    common.add_argument("--jobs", type=_positive_int, help="worker processes for align and filter")
    common.add_argument("--verbose", "-v", action="store_true", help="debug logging")

    langs = argparse.ArgumentParser(add_help=False)
    langs.add_argument("--source-lang", default="pl")
    langs.add_argument("--target-lang", default="en")

    parser = argparse.ArgumentParser(
        prog="bitextminer",
        description="Mine parallel sentences from comparable bilingual documents.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("crawl", parents=[common], help="crawl and clean article pairs")
    p.add_argument("--seed", help="seed article URL (http(s):// or fixture://)")
    p.add_argument("--max-articles", type=_positive_int)
    p.add_argument("--delay-ms", type=int)
    p.add_argument("--source-lang")
    p.add_argument("--target-lang")
    p.add_argument("--fixtures-dir")
    p.add_argument("--no-http", action="store_true", help="only serve fixture:// URLs")

    p = sub.add_parser("clean", parents=[common], help="clean crawled HTML pairs")
    p.add_argument("--in-dir", help="raw pair directory (default <out-dir>/raw)")
    p.add_argument("--rules", help="cleaning rules YAML")

    p = sub.add_parser("align", parents=[common, langs], help="sentence-align two documents")
    p.add_argument("--src", required=True)
    p.add_argument("--tgt", required=True)
    p.add_argument("--out", required=True, help="alignment TSV")
    p.add_argument("--lexicon", help="external lexicon TSV")
    p.add_argument("--lexicon-out", help="write the second-pass lexicon here")
    p.add_argument("--sentences-out", help="write segmented sentences to <stem>.<lang>")
    p.add_argument("--segmented", action="store_true", help="inputs are one sentence per line")
    p.add_argument("--length-only", action="store_true", help="single length-based pass")

    p = sub.add_parser("translate", parents=[common, langs], help="translate a sentence file")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--engine", choices=[e.value for e in EngineName])
    p.add_argument("--cmd", help="external translation program")
    p.add_argument("--timeout", type=float, help="seconds to wait for each external answer")
    p.add_argument("--tm", help="translation memory TSV")
    p.add_argument("--lexicon", help="gloss lexicon TSV")
    p.add_argument("--cache", help="translation cache directory")
    p.add_argument("--no-fallback", action="store_true", help="memory misses pass through")

    p = sub.add_parser("filter", parents=[common, langs], help="filter translated sentence pairs")
    p.add_argument("--src", required=True)
    p.add_argument("--trans", required=True)
    p.add_argument("--tgt", required=True)
    p.add_argument("--tiers", help="tier file: 'comparator threshold' per line")
    p.add_argument("--window", help="auto, unbounded or a radius")
    p.add_argument("--alignment", help="alignment TSV used to centre windows")
    p.add_argument("--stopwords")
    p.add_argument("--synonyms")

    p = sub.add_parser("evaluate", parents=[common], help="score a candidate translation")
    p.add_argument("--cand", required=True)
    p.add_argument("--refs", required=True, help="comma-separated reference files")
    p.add_argument("--percent", action="store_true")

    p = sub.add_parser("symmetrize", parents=[common], help="grow-diag-final-and symmetrization")
    p.add_argument("--forward", required=True)
    p.add_argument("--backward", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--method", default=GDFA_METHOD)
    p.add_argument("--orientations", help="write word-based M/S/D orientations here")

    sub.add_parser("pipeline", parents=[common], help="run every stage from a config")

    p = sub.add_parser("bootstrap", parents=[common], help="iterate align and filter with learned lexicons")
    p.add_argument("--rounds", type=_positive_int, default=2)

    p = sub.add_parser("fixture", parents=[common], help="generate the synthetic fixture corpus")
    p.add_argument("--documents", type=_positive_int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--noise-only", action="store_true")

    sub.add_parser("schema", parents=[common], help="print the pipeline config JSON schema")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    initialize_application(verbose=args.verbose)
    try:
        return COMMANDS[args.command](args)
    except Exception as e:
        return handle_cli_exception(e)


if __name__ == "__main__":
    sys.exit(main())
