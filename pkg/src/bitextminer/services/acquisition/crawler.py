"""Breadth-first topic crawler following interlanguage links."""

import asyncio
import time
from collections import deque
from typing import Any, Dict, List, Optional, Tuple
from urllib.parse import unquote, urldefrag, urljoin, urlparse

from bs4 import BeautifulSoup
from slugify import slugify

from ...config.logging import get_logger, log_performance
from ...core.resources import load_cleaning_rules
from ...exceptions import ConfigurationError, FetchError
from .cleaner import content_root, extract_title, parse_html
from .fetcher import FIXTURE_SCHEME, PageFetcher
from .models import CrawlFailure, CrawlResult, DocumentOrigin, RawArticle, RawArticlePair

logger = get_logger(__name__)


class PolitenessThrottle:
    """Spaces request starts by at least ``delay_seconds``."""

    def __init__(self, delay_seconds: float):
        self.delay_seconds = max(0.0, delay_seconds)
        self._lock = asyncio.Lock()
        self._last_start: Optional[float] = None

    async def wait(self) -> None:
        async with self._lock:
            now = time.monotonic()
            if self._last_start is not None:
                remaining = self.delay_seconds - (now - self._last_start)
                if remaining > 0:
                    await asyncio.sleep(remaining)
            self._last_start = time.monotonic()


def normalize_title(title: str) -> str:
    return " ".join(title.replace("_", " ").split()).casefold()


def document_id(sequence: int, title: str) -> str:
    """Zero-padded sequence number plus a slug of the article title."""
    return f"{sequence:04d}-{slugify(title) or 'article'}"


class TopicCrawler:
    """
    Crawls topic-related articles of the source-language wiki.

    Starting at the seed, in-body article links are followed breadth-first.
    Every visited article whose interlanguage link names the target language
    is emitted with its counterpart; articles without one are skipped but
    their links are still followed.
    """

    def __init__(
        self,
        fetcher: PageFetcher,
        source_lang: str,
        target_lang: str,
        max_articles: int,
        politeness_delay: float = 1.0,
        concurrency: int = 4,
        origin: DocumentOrigin = DocumentOrigin.CRAWLED,
        rules: Optional[Dict[str, Any]] = None,
    ):
        if max_articles < 1:
            raise ConfigurationError("crawl.max_articles", "must be a positive integer")
        if concurrency < 1:
            raise ConfigurationError("crawl.concurrency", "must be a positive integer")
        self.fetcher = fetcher
        self.source_lang = source_lang
        self.target_lang = target_lang
        self.max_articles = max_articles
        self.concurrency = concurrency
        self.origin = origin
        self.rules = rules if rules is not None else load_cleaning_rules()
        self.throttle = PolitenessThrottle(politeness_delay)
        self._semaphore = asyncio.Semaphore(concurrency)
        self.logger = logger.bind(component="crawler", source_lang=source_lang)

    async def _fetch(self, url: str) -> str:
        async with self._semaphore:
            await self.throttle.wait()
            return await self.fetcher.fetch(url)

    async def _fetch_many(self, urls: List[str]) -> List[Any]:
        return await asyncio.gather(*(self._fetch(u) for u in urls), return_exceptions=True)

    def _is_article_link(self, url: str, page_url: str) -> bool:
        parsed = urlparse(url)
        page = urlparse(page_url)
        excluded = tuple(self.rules.get("excluded_link_prefixes", []))
        if parsed.scheme == FIXTURE_SCHEME:
            name = parsed.path.rsplit("/", 1)[-1] or parsed.netloc
            return page.scheme == FIXTURE_SCHEME and not unquote(name).startswith(excluded)
        if parsed.scheme not in ("http", "https") or parsed.netloc != page.netloc:
            return False
        if not parsed.path.startswith("/wiki/") or parsed.query:
            return False
        return not unquote(parsed.path[len("/wiki/") :]).startswith(excluded)

    def article_links(self, soup: BeautifulSoup, page_url: str) -> List[str]:
        """In-body article links in document order, fragments dropped."""
        content = content_root(soup, self.rules)
        for selector in self.rules.get("remove_selectors", []):
            for element in content.select(selector):
                element.decompose()
        links = []
        for anchor in content.select("a[href]"):
            url = urldefrag(urljoin(page_url, anchor["href"]))[0]
            if url and url != page_url and self._is_article_link(url, page_url):
                links.append(url)
        return links

    def counterpart_url(self, soup: BeautifulSoup, page_url: str) -> Optional[str]:
        selector = self.rules.get("interlanguage_selector", "a[hreflang]")
        for anchor in soup.select(selector):
            if anchor.get("hreflang") == self.target_lang and anchor.get("href"):
                return urljoin(page_url, anchor["href"])
        return None

    async def crawl(self, seed_url: str) -> CrawlResult:
        """
        Crawl from ``seed_url`` until ``max_articles`` pairs are found.

        Raises:
            ConfigurationError: If the seed article has no counterpart
        """
        start_time = time.perf_counter()
        result = CrawlResult()
        queue = deque([seed_url])
        seen_urls = {seed_url}
        seen_titles = set()

        while queue and len(result.pairs) < self.max_articles:
            batch = [queue.popleft() for _ in range(min(self.concurrency, len(queue)))]
            pages = await self._fetch_many(batch)

            found: List[Tuple[str, str, str, str]] = []
            for url, page in zip(batch, pages):
                if isinstance(page, FetchError):
                    self._record_failure(result, page, url)
                    continue
                if isinstance(page, BaseException):
                    raise page
                result.visited += 1
                soup = parse_html(page)
                title = extract_title(soup, self.rules) or unquote(url.rsplit("/", 1)[-1])
                key = normalize_title(title)
                if key in seen_titles:
                    continue
                seen_titles.add(key)

                counterpart = self.counterpart_url(soup, url)
                for link in self.article_links(soup, url):
                    if link not in seen_urls:
                        seen_urls.add(link)
                        queue.append(link)
                if counterpart is None:
                    if url == seed_url:
                        raise ConfigurationError(
                            "crawl.seed",
                            f"seed article {url} has no '{self.target_lang}' interlanguage link",
                        )
                    self.logger.info("Skipping article without counterpart", url=url)
                    continue
                found.append((url, title, page, counterpart))

            counterparts = await self._fetch_many([c for _, _, _, c in found])
            for (url, title, page, counterpart), target_page in zip(found, counterparts):
                if len(result.pairs) >= self.max_articles:
                    break
                if isinstance(target_page, FetchError):
                    self._record_failure(result, target_page, counterpart)
                    continue
                if isinstance(target_page, BaseException):
                    raise target_page
                target_title = extract_title(parse_html(target_page), self.rules)
                result.pairs.append(
                    RawArticlePair(
                        id=document_id(len(result.pairs) + 1, title),
                        source=RawArticle(url=url, lang=self.source_lang, title=title, html=page),
                        target=RawArticle(
                            url=counterpart,
                            lang=self.target_lang,
                            title=target_title,
                            html=target_page,
                        ),
                        origin=self.origin,
                    )
                )

        log_performance(
            "crawl_topic",
            (time.perf_counter() - start_time) * 1000,
            seed=seed_url,
            pairs=len(result.pairs),
            visited=result.visited,
            failures=len(result.failures),
        )
        return result

    def _record_failure(self, result: CrawlResult, error: FetchError, url: str) -> None:
        self.logger.warning("Page fetch failed, skipping", url=url, error=error.message)
        result.failures.append(
            CrawlFailure(url=url, message=error.message, attempts=error.details.get("attempts", 1))
        )


async def crawl_topic(
    seed_url: str,
    max_articles: int,
    politeness_delay: float,
    fetcher: PageFetcher,
    source_lang: str = "pl",
    target_lang: str = "en",
    concurrency: int = 4,
    origin: Optional[DocumentOrigin] = None,
) -> CrawlResult:
    """Crawl article pairs from a seed; ``fixture://`` seeds produce fixture pairs."""
    if origin is None:
        origin = (
            DocumentOrigin.FIXTURE
            if urlparse(seed_url).scheme == FIXTURE_SCHEME
            else DocumentOrigin.CRAWLED
        )
    crawler = TopicCrawler(
        fetcher,
        source_lang=source_lang,
        target_lang=target_lang,
        max_articles=max_articles,
        politeness_delay=politeness_delay,
        concurrency=concurrency,
        origin=origin,
    )
    try:
        return await crawler.crawl(seed_url)
    finally:
        await fetcher.close()
