"""Page fetchers: bundled fixture pages and live HTTP."""

import asyncio
from pathlib import Path
from typing import Optional, Protocol
from urllib.parse import urlparse

import aiohttp

from ...config.logging import LoggerMixin
from ...exceptions import FetchError

FIXTURE_SCHEME = "fixture"


class PageFetcher(Protocol):
    """Protocol for page fetcher implementations."""

    async def fetch(self, url: str) -> str:
        """Return the page markup or raise FetchError."""
        ...

    async def close(self) -> None: ...


def fixture_path(fixtures_dir: Path, url: str) -> Path:
    """``fixture://pl/doc1`` -> ``<fixtures_dir>/pl/doc1.html``."""
    parsed = urlparse(url)
    relative = f"{parsed.netloc}{parsed.path}".strip("/")
    return Path(fixtures_dir) / f"{relative}.html"


class FixtureFetcher(LoggerMixin):
    """Serves ``fixture://`` URLs from a directory of HTML files."""

    def __init__(self, fixtures_dir: Path):
        self.fixtures_dir = Path(fixtures_dir)

    async def fetch(self, url: str) -> str:
        if urlparse(url).scheme != FIXTURE_SCHEME:
            raise FetchError(url, "fixture fetcher only serves fixture:// URLs")
        path = fixture_path(self.fixtures_dir, url)
        try:
            return path.read_text(encoding="utf-8")
        except FileNotFoundError:
            raise FetchError(url, f"no fixture page at {path}")

    async def close(self) -> None:
        pass


class HttpFetcher(LoggerMixin):
    """aiohttp client with retries and exponential backoff."""

    def __init__(
        self,
        user_agent: str,
        timeout_seconds: float = 30.0,
        max_retries: int = 3,
        backoff_seconds: float = 0.5,
    ):
        self.user_agent = user_agent
        self.timeout = aiohttp.ClientTimeout(total=timeout_seconds)
        self.max_retries = max_retries
        self.backoff_seconds = backoff_seconds
        self._session: Optional[aiohttp.ClientSession] = None

    def _get_session(self) -> aiohttp.ClientSession:
        if self._session is None or self._session.closed:
            self._session = aiohttp.ClientSession(
                timeout=self.timeout, headers={"User-Agent": self.user_agent}
            )
        return self._session

    async def fetch(self, url: str) -> str:
        attempts = self.max_retries + 1
        last_error = "unknown error"
        for attempt in range(1, attempts + 1):
            try:
                async with self._get_session().get(url) as response:
                    if response.status == 200:
                        return await response.text()
                    last_error = f"HTTP {response.status}"
                    if response.status < 500 and response.status != 429:
                        raise FetchError(url, last_error, attempt)
            except (aiohttp.ClientError, asyncio.TimeoutError) as e:
                last_error = str(e) or type(e).__name__
            if attempt < attempts:
                delay = self.backoff_seconds * (2 ** (attempt - 1))
                self.logger.warning(
                    "Fetch failed, retrying", url=url, attempt=attempt, delay_s=delay, error=last_error
                )
                await asyncio.sleep(delay)
        raise FetchError(url, last_error, attempts)

    async def close(self) -> None:
        if self._session is not None and not self._session.closed:
            await self._session.close()


class RoutingFetcher:
    """Dispatches ``fixture://`` URLs to fixtures and everything else to HTTP."""

    def __init__(self, fixtures: Optional[FixtureFetcher], http: Optional[HttpFetcher]):
        self.fixtures = fixtures
        self.http = http

    async def fetch(self, url: str) -> str:
        if urlparse(url).scheme == FIXTURE_SCHEME:
            if self.fixtures is None:
                raise FetchError(url, "no fixtures directory configured")
            return await self.fixtures.fetch(url)
        if self.http is None:
            raise FetchError(url, "live fetching is disabled")
        return await self.http.fetch(url)

    async def close(self) -> None:
        for fetcher in (self.fixtures, self.http):
            if fetcher is not None:
                await fetcher.close()
