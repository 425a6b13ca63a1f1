"""Data models for the translation stage."""

import re
from enum import Enum
from typing import List

from pydantic import BaseModel, Field, field_validator, model_validator

_LANG_CODE = re.compile(r"^[a-z]{2}$")


class EngineName(Enum):
    """Built-in translation engines."""

    MEMORY = "memory"
    GLOSS = "gloss"
    EXTERNAL = "external"


class TranslationRequest(BaseModel):
    """Lines to translate, in order, plus the language pair."""

    lines: List[str] = Field(default_factory=list)
    source_lang: str
    target_lang: str

    @field_validator("source_lang", "target_lang")
    @classmethod
    def validate_lang(cls, v: str) -> str:
        if not _LANG_CODE.match(v):
            raise ValueError(f"Language code must be two lowercase letters, got '{v}'")
        return v

    @model_validator(mode="after")
    def validate_distinct_langs(self) -> "TranslationRequest":
        if self.source_lang == self.target_lang:
            raise ValueError("source_lang and target_lang must differ")
        return self

    @property
    def lang_pair(self) -> str:
        return f"{self.source_lang}-{self.target_lang}"


class TranslationResult(BaseModel):
    """Translations positionally matching the request lines."""

    lines: List[str] = Field(default_factory=list)
    engine: str
    cache_hits: int = 0
    engine_calls: int = 0
