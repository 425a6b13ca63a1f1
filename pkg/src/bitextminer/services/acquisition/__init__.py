"""Article acquisition: crawling, HTML cleaning and pair storage."""

from .cleaner import extract_clean_text, extract_paragraphs, extract_title, wrap_as_html
from .crawler import PolitenessThrottle, TopicCrawler, crawl_topic, document_id
from .fetcher import FixtureFetcher, HttpFetcher, PageFetcher, RoutingFetcher, fixture_path
from .models import (
    CleanDocument,
    CrawlFailure,
    CrawlResult,
    DocumentOrigin,
    DocumentPair,
    RawArticle,
    RawArticlePair,
)
from .service import build_fetcher, clean_pairs
from .storage import (
    read_document_pairs,
    read_raw_pairs,
    write_document_pairs,
    write_failures,
    write_raw_pairs,
)

__all__ = [
    "CleanDocument",
    "CrawlFailure",
    "CrawlResult",
    "DocumentOrigin",
    "DocumentPair",
    "FixtureFetcher",
    "HttpFetcher",
    "PageFetcher",
    "PolitenessThrottle",
    "RawArticle",
    "RawArticlePair",
    "RoutingFetcher",
    "TopicCrawler",
    "build_fetcher",
    "clean_pairs",
    "crawl_topic",
    "document_id",
    "extract_clean_text",
    "extract_paragraphs",
    "extract_title",
    "fixture_path",
    "read_document_pairs",
    "read_raw_pairs",
    "wrap_as_html",
    "write_document_pairs",
    "write_failures",
    "write_raw_pairs",
]
