"""Shared test configuration and fixtures."""

import os
from pathlib import Path
from typing import List, Sequence
from unittest.mock import patch

import pytest

from bitextminer.config.settings import get_settings
from bitextminer.core.resources import load_shipped_list
from bitextminer.core.textproc import Sentence

FIXTURES_DIR = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def testing_env():
    """Run every test with testing settings and no .env leakage."""
    with patch.dict(
        os.environ,
        {"BITEXTMINER_ENVIRONMENT": "testing", "BITEXTMINER_JOBS": "1"},
    ):
        get_settings.cache_clear()
        yield
    get_settings.cache_clear()


@pytest.fixture(autouse=True)
def clean_lru_cache():
    """Clear LRU caches between tests to avoid state pollution."""
    yield
    load_shipped_list.cache_clear()


@pytest.fixture
def wiki_dir() -> Path:
    """Hand-written fixture wiki served under ``fixture://``."""
    return FIXTURES_DIR / "wiki"


@pytest.fixture
def make_sentences():
    """Build Sentence objects from plain strings."""

    def _make(texts: Sequence[str]) -> List[Sentence]:
        return [Sentence.from_text(t) for t in texts]

    return _make


@pytest.fixture(scope="session")
def fixture_corpus(tmp_path_factory):
    """The 20-document synthetic corpus, generated once per session."""
    from bitextminer.services.pipeline import generate_fixture

    return generate_fixture(tmp_path_factory.mktemp("fixture"), documents=20, seed=7)


@pytest.fixture(scope="session")
def fixture_run(fixture_corpus, tmp_path_factory):
    """One full pipeline run over the synthetic corpus."""
    from bitextminer.services.pipeline import load_pipeline_config, run_pipeline

    config = load_pipeline_config(fixture_corpus.config_path).with_out_dir(
        tmp_path_factory.mktemp("run")
    )
    report = run_pipeline(config, jobs=1)
    return config, report
