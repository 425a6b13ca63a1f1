"""Tests for the pipeline run configuration."""

import json

import pytest

from bitextminer.exceptions import ConfigurationError
from bitextminer.services.filtering import Comparator
from bitextminer.services.pipeline import (
    load_pipeline_config,
    pipeline_config_schema,
    validate_pipeline_config,
)
from bitextminer.services.translation import EngineName

NO_CRAWL = {"stages": {"crawl": False}}


class TestValidatePipelineConfig:
    """Test validation of config dictionaries."""

    def test_defaults(self):
        config = validate_pipeline_config(NO_CRAWL)
        assert (config.source_lang, config.target_lang) == ("pl", "en")
        assert config.translation.engine == EngineName.GLOSS
        assert config.filtering.window == "auto"
        assert [t.comparator for t in config.filtering.tiers] == [
            Comparator.NORMALIZED_OVERLAP,
            Comparator.RATIO,
            Comparator.SYNONYM_RATIO,
        ]

    def test_crawl_needs_seed(self):
        with pytest.raises(ConfigurationError) as exc_info:
            validate_pipeline_config({})
        assert "seed_url" in exc_info.value.message

    def test_fixture_seed_needs_fixtures_dir(self):
        with pytest.raises(ConfigurationError):
            validate_pipeline_config({"crawl": {"seed_url": "fixture://pl/doc01"}})

    def test_languages_must_differ(self):
        with pytest.raises(ConfigurationError):
            validate_pipeline_config({**NO_CRAWL, "source_lang": "en", "target_lang": "en"})

    @pytest.mark.parametrize("lang", ["PL", "pol", "p1", ""])
    def test_language_code_format(self, lang):
        with pytest.raises(ConfigurationError) as exc_info:
            validate_pipeline_config({**NO_CRAWL, "source_lang": lang})
        assert "source_lang" in exc_info.value.details["field_errors"]

    def test_unknown_section_key(self):
        with pytest.raises(ConfigurationError):
            validate_pipeline_config({**NO_CRAWL, "filtering": {"windw": 3}})

    @pytest.mark.parametrize("window", [0, -1, "wide"])
    def test_invalid_window(self, window):
        with pytest.raises(ConfigurationError):
            validate_pipeline_config({**NO_CRAWL, "filtering": {"window": window}})

    def test_numeric_window(self):
        config = validate_pipeline_config({**NO_CRAWL, "filtering": {"window": 25}})
        assert config.filtering.window == 25

    def test_memory_engine_needs_memory_file(self):
        with pytest.raises(ConfigurationError):
            validate_pipeline_config({**NO_CRAWL, "translation": {"engine": "memory"}})

    def test_external_engine_needs_command(self):
        with pytest.raises(ConfigurationError):
            validate_pipeline_config({**NO_CRAWL, "translation": {"engine": "external"}})

    def test_external_timeout_must_be_positive(self):
        translation = {"engine": "external", "command": "mt", "command_timeout": 0}
        with pytest.raises(ConfigurationError):
            validate_pipeline_config({**NO_CRAWL, "translation": translation})

    def test_missing_referenced_file(self, tmp_path):
        with pytest.raises(ConfigurationError) as exc_info:
            validate_pipeline_config(
                {**NO_CRAWL, "aligner": {"lexicon": "nope.tsv"}}, base_dir=tmp_path
            )
        assert "aligner.lexicon" in exc_info.value.message

    def test_report_threshold_order(self):
        with pytest.raises(ConfigurationError):
            validate_pipeline_config(
                {**NO_CRAWL, "report": {"parallel_threshold": 0.4, "noisy_parallel_threshold": 0.6}}
            )

    def test_tier_threshold_range(self):
        with pytest.raises(ConfigurationError):
            validate_pipeline_config(
                {**NO_CRAWL, "filtering": {"tiers": [{"comparator": "ratio", "threshold": 1.2}]}}
            )

    def test_empty_tier_list(self):
        with pytest.raises(ConfigurationError):
            validate_pipeline_config({**NO_CRAWL, "filtering": {"tiers": []}})


class TestLoadPipelineConfig:
    """Test reading config files."""

    def test_relative_paths_resolve_against_config_dir(self, tmp_path):
        (tmp_path / "lexicon.tsv").write_text("kot\tcat\t1.0\n", encoding="utf-8")
        path = tmp_path / "pipeline.json"
        path.write_text(
            json.dumps({**NO_CRAWL, "aligner": {"lexicon": "lexicon.tsv"}, "paths": {"out_dir": "out"}}),
            encoding="utf-8",
        )
        config = load_pipeline_config(path)
        assert config.aligner.lexicon == tmp_path.resolve() / "lexicon.tsv"
        assert config.paths.out_dir == tmp_path.resolve() / "out"

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigurationError) as exc_info:
            load_pipeline_config(tmp_path / "absent.json")
        assert "not found" in exc_info.value.message

    def test_bad_json(self, tmp_path):
        path = tmp_path / "pipeline.json"
        path.write_text("{stages: ", encoding="utf-8")
        with pytest.raises(ConfigurationError) as exc_info:
            load_pipeline_config(path)
        assert "invalid JSON" in exc_info.value.message


class TestConfigHash:
    """Test the run identity hash."""

    def test_ignores_output_location(self, tmp_path):
        config = validate_pipeline_config(NO_CRAWL)
        moved = config.with_out_dir(tmp_path / "elsewhere")
        assert moved.paths.out_dir == tmp_path / "elsewhere"
        assert moved.config_hash() == config.config_hash()

    def test_changes_with_settings(self):
        base = validate_pipeline_config(NO_CRAWL)
        other = validate_pipeline_config({**NO_CRAWL, "filtering": {"window": 5}})
        assert base.config_hash() != other.config_hash()


def test_schema_lists_sections():
    schema = pipeline_config_schema()
    assert {"stages", "paths", "crawl", "aligner", "translation", "filtering", "report"} <= set(
        schema["properties"]
    )
