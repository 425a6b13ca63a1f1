"""Pipeline orchestration, reporting and the synthetic fixture corpus."""

from .config import (
    PipelineConfig,
    load_pipeline_config,
    pipeline_config_schema,
    validate_pipeline_config,
)
from .fixture import FixtureCorpus, generate_fixture
from .gold import evaluate_against_gold, read_gold, write_gold
from .models import CorpusType, GoldCounts, GoldReport, MiningReport, ReportRow, ReportTotals
from .runner import (
    PipelineRunner,
    assemble_report,
    corpus_paths,
    iterate_bootstrap,
    run_pipeline,
)
from .stages import STAGE_DIRS, read_stage_marker, stage_dir, write_stage_marker

__all__ = [
    "STAGE_DIRS",
    "CorpusType",
    "FixtureCorpus",
    "GoldCounts",
    "GoldReport",
    "MiningReport",
    "PipelineConfig",
    "PipelineRunner",
    "ReportRow",
    "ReportTotals",
    "assemble_report",
    "corpus_paths",
    "evaluate_against_gold",
    "generate_fixture",
    "iterate_bootstrap",
    "load_pipeline_config",
    "pipeline_config_schema",
    "read_gold",
    "read_stage_marker",
    "run_pipeline",
    "stage_dir",
    "validate_pipeline_config",
    "write_gold",
    "write_stage_marker",
]
