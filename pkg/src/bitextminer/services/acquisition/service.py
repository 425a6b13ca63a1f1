"""Acquisition stage helpers: fetcher construction and pair cleaning."""

from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from ...config.logging import get_logger, log_error
from ...config.settings import Settings, get_settings
from ...exceptions import EmptyDocumentError
from .cleaner import clean_pair
from .fetcher import FixtureFetcher, HttpFetcher, RoutingFetcher
from .models import DocumentPair, RawArticlePair

logger = get_logger(__name__)


def build_fetcher(
    fixtures_dir: Optional[Path] = None,
    settings: Optional[Settings] = None,
    allow_http: bool = True,
) -> RoutingFetcher:
    settings = settings or get_settings()
    fixtures_dir = fixtures_dir or (Path(settings.fixtures_dir) if settings.fixtures_dir else None)
    http = (
        HttpFetcher(
            user_agent=settings.http_user_agent,
            timeout_seconds=settings.http_timeout_seconds,
            max_retries=settings.http_max_retries,
            backoff_seconds=settings.http_backoff_seconds,
        )
        if allow_http
        else None
    )
    return RoutingFetcher(FixtureFetcher(fixtures_dir) if fixtures_dir else None, http)


def clean_pairs(
    raw_pairs: List[RawArticlePair], rules: Optional[Dict[str, Any]] = None
) -> Tuple[List[DocumentPair], List[str]]:
    """
    Clean both sides of every pair.

    Returns:
        The cleaned pairs and the ids of pairs dropped because a side was
        empty after cleaning
    """
    cleaned, dropped = [], []
    for pair in raw_pairs:
        try:
            source_doc, target_doc = clean_pair(pair, rules)
        except EmptyDocumentError as e:
            log_error(e, doc_id=pair.id, url=e.url)
            dropped.append(pair.id)
            continue
        cleaned.append(
            DocumentPair(
                id=pair.id,
                source_doc=source_doc,
                target_doc=target_doc,
                origin=pair.origin,
                urls={pair.source.lang: pair.source.url, pair.target.lang: pair.target.url},
            )
        )
    logger.info("Cleaned document pairs", kept=len(cleaned), dropped=len(dropped))
    return cleaned, dropped
