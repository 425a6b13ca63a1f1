"""Run configuration for the mining pipeline (JSON file, validated by pydantic)."""

import hashlib
import json
from pathlib import Path
from typing import List, Literal, Optional, Union

from pydantic import (
    BaseModel,
    Field,
    PositiveFloat,
    PositiveInt,
    ValidationError,
    ValidationInfo,
    field_validator,
    model_validator,
)

from ...exceptions import ConfigurationError
from ..alignment.models import AlignerParameters
from ..filtering.models import FilterTier
from ..filtering.tiers import default_tiers
from ..translation.models import EngineName

SECTION_MODEL_CONFIG = {"extra": "forbid"}


def _resolve(value: Optional[Path], info: ValidationInfo) -> Optional[Path]:
    """Relative paths are taken relative to the config file's directory."""
    if value is None:
        return None
    base_dir = (info.context or {}).get("base_dir")
    if base_dir is not None and not value.is_absolute():
        return Path(base_dir) / value
    return value


class StageToggles(BaseModel):
    crawl: bool = True
    clean: bool = True
    align: bool = True
    translate: bool = True
    filter: bool = True

    model_config = SECTION_MODEL_CONFIG


class PathsConfig(BaseModel):
    fixtures_dir: Optional[Path] = None
    out_dir: Path = Path("out")
    cache_dir: Optional[Path] = None

    model_config = SECTION_MODEL_CONFIG

    @field_validator("fixtures_dir", "out_dir", "cache_dir")
    @classmethod
    def resolve_paths(cls, v: Optional[Path], info: ValidationInfo) -> Optional[Path]:
        return _resolve(v, info)


class CrawlConfig(BaseModel):
    seed_url: Optional[str] = None
    max_articles: PositiveInt = 20
    delay_ms: int = Field(1000, ge=0)
    concurrency: PositiveInt = 4
    allow_http: bool = True

    model_config = SECTION_MODEL_CONFIG


class AlignerConfig(AlignerParameters):
    """Aligner constants plus an optional external seed lexicon."""

    lexicon: Optional[Path] = None

    @field_validator("lexicon")
    @classmethod
    def resolve_lexicon(cls, v: Optional[Path], info: ValidationInfo) -> Optional[Path]:
        return _resolve(v, info)

    def parameters(self) -> AlignerParameters:
        return AlignerParameters(**self.model_dump(exclude={"lexicon"}))


class TranslationConfig(BaseModel):
    engine: EngineName = EngineName.GLOSS
    memory: Optional[Path] = None
    lexicon: Optional[Path] = None
    command: Optional[str] = None
    command_timeout: PositiveFloat = 60.0
    memory_fallback: bool = True

    model_config = SECTION_MODEL_CONFIG

    @field_validator("memory", "lexicon")
    @classmethod
    def resolve_paths(cls, v: Optional[Path], info: ValidationInfo) -> Optional[Path]:
        return _resolve(v, info)

    @model_validator(mode="after")
    def validate_engine_inputs(self) -> "TranslationConfig":
        if self.engine is EngineName.MEMORY and self.memory is None:
            raise ValueError("engine 'memory' requires 'memory' (a translation-memory TSV)")
        if self.engine is EngineName.EXTERNAL and not self.command:
            raise ValueError("engine 'external' requires 'command'")
        return self


class FilteringConfig(BaseModel):
    tiers: List[FilterTier] = Field(default_factory=default_tiers, min_length=1)
    window: Union[Literal["auto", "unbounded"], PositiveInt] = "auto"
    stopwords: Optional[Path] = None
    synonyms: Optional[Path] = None
    max_variants: PositiveInt = 64
    ratio_without_stopwords: bool = True

    model_config = SECTION_MODEL_CONFIG

    @field_validator("stopwords", "synonyms")
    @classmethod
    def resolve_paths(cls, v: Optional[Path], info: ValidationInfo) -> Optional[Path]:
        return _resolve(v, info)


class ReportConfig(BaseModel):
    parallel_threshold: float = Field(0.9, gt=0.0, le=1.0)
    noisy_parallel_threshold: float = Field(0.5, gt=0.0, le=1.0)
    gold: Optional[Path] = None

    model_config = SECTION_MODEL_CONFIG

    @field_validator("gold")
    @classmethod
    def resolve_gold(cls, v: Optional[Path], info: ValidationInfo) -> Optional[Path]:
        return _resolve(v, info)

    @model_validator(mode="after")
    def validate_threshold_order(self) -> "ReportConfig":
        if self.noisy_parallel_threshold > self.parallel_threshold:
            raise ValueError("noisy_parallel_threshold must not exceed parallel_threshold")
        return self


class PipelineConfig(BaseModel):
    """Everything one pipeline run depends on."""

    source_lang: str = "pl"
    target_lang: str = "en"
    random_seed: int = 0
    stages: StageToggles = Field(default_factory=StageToggles)
    paths: PathsConfig = Field(default_factory=PathsConfig)
    crawl: CrawlConfig = Field(default_factory=CrawlConfig)
    aligner: AlignerConfig = Field(default_factory=AlignerConfig)
    translation: TranslationConfig = Field(default_factory=TranslationConfig)
    filtering: FilteringConfig = Field(default_factory=FilteringConfig)
    report: ReportConfig = Field(default_factory=ReportConfig)

    model_config = SECTION_MODEL_CONFIG

    @field_validator("source_lang", "target_lang")
    @classmethod
    def validate_lang(cls, v: str) -> str:
        if len(v) != 2 or not v.isalpha() or not v.islower():
            raise ValueError(f"Language code must be two lowercase letters, got '{v}'")
        return v

    @model_validator(mode="after")
    def validate_run(self) -> "PipelineConfig":
        if self.source_lang == self.target_lang:
            raise ValueError("source_lang and target_lang must differ")
        if self.stages.crawl and not self.crawl.seed_url:
            raise ValueError("crawl.seed_url is required when the crawl stage is enabled")
        if (
            self.stages.crawl
            and self.crawl.seed_url.startswith("fixture://")
            and self.paths.fixtures_dir is None
        ):
            raise ValueError("paths.fixtures_dir is required for fixture:// seeds")
        for name, path in self.referenced_files().items():
            if not path.exists():
                raise ValueError(f"{name} does not exist: {path}")
        return self

    def referenced_files(self) -> dict:
        candidates = {
            "paths.fixtures_dir": self.paths.fixtures_dir if self.stages.crawl else None,
            "aligner.lexicon": self.aligner.lexicon,
            "translation.memory": self.translation.memory,
            "translation.lexicon": self.translation.lexicon,
            "filtering.stopwords": self.filtering.stopwords,
            "filtering.synonyms": self.filtering.synonyms,
            "report.gold": self.report.gold,
        }
        return {name: path for name, path in candidates.items() if path is not None}

    def config_hash(self) -> str:
        """sha256 of the canonical JSON form, ignoring where outputs and caches go."""
        data = self.model_dump(mode="json", exclude={"paths": {"out_dir", "cache_dir"}})
        canonical = json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def with_out_dir(self, out_dir: Path) -> "PipelineConfig":
        return self.model_copy(
            update={"paths": self.paths.model_copy(update={"out_dir": Path(out_dir)})}
        )


def load_pipeline_config(path: Path) -> PipelineConfig:
    """
    Load and validate a pipeline config file.

    Raises:
        ConfigurationError: If the file is missing, is not JSON, or fails validation
    """
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except FileNotFoundError:
        raise ConfigurationError(str(path), "config file not found")
    except json.JSONDecodeError as e:
        raise ConfigurationError(str(path), f"invalid JSON: {e}")
    return validate_pipeline_config(data, base_dir=path.resolve().parent, source=str(path))


def validate_pipeline_config(
    data: dict, base_dir: Optional[Path] = None, source: str = "config"
) -> PipelineConfig:
    try:
        return PipelineConfig.model_validate(data, context={"base_dir": base_dir})
    except ValidationError as e:
        raise ConfigurationError.from_validation_error(source, e)


def pipeline_config_schema() -> dict:
    return PipelineConfig.model_json_schema()
