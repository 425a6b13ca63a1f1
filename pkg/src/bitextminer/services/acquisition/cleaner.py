"""Selector-driven HTML cleaning of wiki article pages."""

import html
import re
from typing import Any, Dict, List, Optional, Sequence, Tuple

from bs4 import BeautifulSoup, Tag

from ...config.logging import get_logger
from ...core.resources import load_cleaning_rules
from ...exceptions import EmptyDocumentError
from .models import BARE_URL, MARKUP_TAG, CleanDocument, RawArticle, RawArticlePair

logger = get_logger(__name__)

_WHITESPACE = re.compile(r"\s+")
_EDIT_MARKER = re.compile(r"\[\s*(edit|edytuj|edytuj kod)\s*\]", re.IGNORECASE)


def parse_html(markup: str) -> BeautifulSoup:
    """Lenient parse; lxml recovers from broken markup."""
    return BeautifulSoup(markup, "lxml")


def content_root(soup: BeautifulSoup, rules: Dict[str, Any]) -> Tag:
    for selector in rules.get("content_selectors", []):
        found = soup.select_one(selector)
        if found is not None:
            return found
    return soup.body or soup


def extract_title(soup: BeautifulSoup, rules: Optional[Dict[str, Any]] = None) -> str:
    """Page title without the site suffix."""
    rules = rules if rules is not None else load_cleaning_rules()
    for selector in rules.get("title_selectors", []):
        found = soup.select_one(selector)
        if found is None:
            continue
        title = _WHITESPACE.sub(" ", found.get_text()).strip()
        for separator in rules.get("title_suffix_separators", []):
            if separator in title:
                title = title.split(separator)[0].strip()
        if title:
            return title
    return ""


def _heading_text(heading: Tag) -> str:
    return _EDIT_MARKER.sub("", heading.get_text()).strip().lower()


def _strip_after_stop_heading(content: Tag, stop_headings: Sequence[str]) -> None:
    stops = {h.lower() for h in stop_headings}
    for heading in content.find_all(["h2", "h3"]):
        if _heading_text(heading) not in stops:
            continue
        # Newer skins wrap headings in <div class="mw-heading">.
        anchor = heading
        parent = heading.parent
        if isinstance(parent, Tag) and parent.name == "div" and "mw-heading" in (
            parent.get("class") or []
        ):
            anchor = parent
        for sibling in list(anchor.next_siblings):
            sibling.extract()
        anchor.decompose()
        return


def _clean_paragraph(text: str) -> str:
    text = _WHITESPACE.sub(" ", text)
    text = MARKUP_TAG.sub(" ", text)
    text = BARE_URL.sub(" ", text)
    return _WHITESPACE.sub(" ", text).strip()


def extract_paragraphs(markup: str, rules: Optional[Dict[str, Any]] = None) -> List[str]:
    """Paragraph texts of the article body, boilerplate removed."""
    rules = rules if rules is not None else load_cleaning_rules()
    soup = parse_html(markup)
    content = content_root(soup, rules)

    for selector in rules.get("remove_selectors", []):
        for element in content.select(selector):
            element.decompose()
    _strip_after_stop_heading(content, rules.get("stop_headings", []))

    paragraphs = []
    for element in content.select(rules.get("paragraph_selector", "p")):
        text = _clean_paragraph(element.get_text())
        if text:
            paragraphs.append(text)
    return paragraphs


def extract_clean_text(
    article: RawArticle, rules: Optional[Dict[str, Any]] = None
) -> CleanDocument:
    """
    Reduce an article page to its paragraph text.

    Tables, figures, navigation, reference lists and everything after a
    references-style heading are dropped; bare URLs are removed from the
    remaining text. Paragraphs are joined by blank lines.

    Raises:
        EmptyDocumentError: If no text is left after cleaning
    """
    rules = rules if rules is not None else load_cleaning_rules()
    paragraphs = extract_paragraphs(article.html, rules)
    if not paragraphs:
        raise EmptyDocumentError(article.url, article.lang)
    title = article.title or extract_title(parse_html(article.html), rules)
    return CleanDocument(lang=article.lang, title=title, text="\n\n".join(paragraphs))


def wrap_as_html(text: str, title: str = "") -> str:
    """Minimal page holding each blank-line separated paragraph in a ``<p>``."""
    body = "".join(
        f"<p>{html.escape(p)}</p>" for p in text.split("\n\n") if p.strip()
    )
    head = f"<title>{html.escape(title)}</title>" if title else ""
    return f"<html><head>{head}</head><body>{body}</body></html>"


def clean_pair(
    pair: RawArticlePair, rules: Optional[Dict[str, Any]] = None
) -> Tuple[CleanDocument, CleanDocument]:
    return extract_clean_text(pair.source, rules), extract_clean_text(pair.target, rules)
