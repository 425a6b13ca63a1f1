"""Pluggable translation engines producing the intermediate translation file."""

from .cache import TranslationCache
from .engines import (
    ExternalCommandEngine,
    GlossEngine,
    MemoryEngine,
    TranslationEngine,
    gloss_translate,
    load_translation_memory,
)
from .models import EngineName, TranslationRequest, TranslationResult
from .service import build_engine, translate_lines

__all__ = [
    "EngineName",
    "ExternalCommandEngine",
    "GlossEngine",
    "MemoryEngine",
    "TranslationCache",
    "TranslationEngine",
    "TranslationRequest",
    "TranslationResult",
    "build_engine",
    "gloss_translate",
    "load_translation_memory",
    "translate_lines",
]
