"""Data models for article acquisition and cleaning."""

import re
from enum import Enum
from typing import Dict, List

from pydantic import BaseModel, Field, field_validator, model_validator

_LANG_CODE = re.compile(r"^[a-z]{2}$")
MARKUP_TAG = re.compile(r"</?[A-Za-z][A-Za-z0-9]*(?:[ \t][^<>\n]*)?/?>")
BARE_URL = re.compile(r"(https?://|www\.)\S+", re.IGNORECASE)


def _validate_lang(v: str) -> str:
    if not _LANG_CODE.match(v):
        raise ValueError(f"Language code must be two lowercase letters, got '{v}'")
    return v


class DocumentOrigin(Enum):
    """Where a document pair came from."""

    CRAWLED = "crawled"
    FIXTURE = "fixture"


class RawArticle(BaseModel):
    """A fetched article page before cleaning."""

    url: str
    lang: str
    title: str = ""
    html: str = Field(min_length=1)

    @field_validator("lang")
    @classmethod
    def validate_lang(cls, v: str) -> str:
        return _validate_lang(v)


class RawArticlePair(BaseModel):
    """An article and its cross-language counterpart as crawled."""

    id: str
    source: RawArticle
    target: RawArticle
    origin: DocumentOrigin = DocumentOrigin.CRAWLED


class CleanDocument(BaseModel):
    """Markup-free article text; paragraphs are separated by blank lines."""

    lang: str
    title: str = ""
    text: str

    @field_validator("lang")
    @classmethod
    def validate_lang(cls, v: str) -> str:
        return _validate_lang(v)

    @field_validator("text")
    @classmethod
    def validate_plain_text(cls, v: str) -> str:
        if MARKUP_TAG.search(v):
            raise ValueError("Document text must not contain markup tags")
        if BARE_URL.search(v):
            raise ValueError("Document text must not contain URLs")
        return v

    @property
    def paragraphs(self) -> List[str]:
        return [p for p in self.text.split("\n\n") if p.strip()]


class DocumentPair(BaseModel):
    """A topic-aligned bilingual document pair with its corpus-unique id."""

    id: str = Field(min_length=1)
    source_doc: CleanDocument
    target_doc: CleanDocument
    origin: DocumentOrigin = DocumentOrigin.CRAWLED
    urls: Dict[str, str] = Field(default_factory=dict)

    @model_validator(mode="after")
    def validate_distinct_langs(self) -> "DocumentPair":
        if self.source_doc.lang == self.target_doc.lang:
            raise ValueError("Source and target documents must be in different languages")
        return self


class CrawlFailure(BaseModel):
    url: str
    message: str
    attempts: int = 1


class CrawlResult(BaseModel):
    """Pairs in discovery order plus the pages that could not be fetched."""

    pairs: List[RawArticlePair] = Field(default_factory=list)
    failures: List[CrawlFailure] = Field(default_factory=list)
    visited: int = 0
