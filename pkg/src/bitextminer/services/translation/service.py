"""Translation stage: cached, line-preserving translation of a source file."""

import time
from pathlib import Path
from typing import Optional

from ...config.logging import get_logger, log_performance
from ...exceptions import ConfigurationError
from ..alignment.models import Lexicon
from .cache import TranslationCache
from .engines import ExternalCommandEngine, GlossEngine, MemoryEngine, TranslationEngine
from .models import EngineName, TranslationRequest, TranslationResult

logger = get_logger(__name__)


def build_engine(
    engine: EngineName,
    lexicon: Optional[Lexicon] = None,
    memory_path: Optional[Path] = None,
    command: Optional[str] = None,
    memory_fallback: bool = True,
    command_timeout: float = 60.0,
) -> TranslationEngine:
    """
    Create a translation engine from its identifier and data.

    Raises:
        ConfigurationError: If the engine's required data is missing
    """
    lexicon = lexicon if lexicon is not None else Lexicon()
    if engine is EngineName.GLOSS:
        return GlossEngine(lexicon)
    if engine is EngineName.MEMORY:
        if memory_path is None:
            raise ConfigurationError("translation.memory", "memory engine needs a --tm file")
        if not Path(memory_path).exists():
            raise ConfigurationError(
                "translation.memory", f"translation memory not found: {memory_path}"
            )
        fallback = GlossEngine(lexicon) if memory_fallback else None
        return MemoryEngine.from_file(Path(memory_path), fallback)
    if not command:
        raise ConfigurationError("translation.command", "external engine needs a --cmd program")
    return ExternalCommandEngine(command, timeout=command_timeout)


def translate_lines(
    request: TranslationRequest,
    engine: TranslationEngine,
    cache_dir: Optional[Path] = None,
) -> TranslationResult:
    """
    Translate every line independently, preserving count and order.

    Empty lines map to empty lines without reaching the engine. With a
    cache directory, lines already translated by the same engine identity
    are served from the cache.
    """
    start_time = time.perf_counter()
    cache = (
        TranslationCache(cache_dir, engine.cache_id, request.lang_pair)
        if cache_dir is not None
        else None
    )
    translations = []
    hits = calls = 0
    for index, line in enumerate(request.lines):
        if not line.strip():
            translations.append("")
            continue
        cached = cache.get(line) if cache is not None else None
        if cached is not None:
            hits += 1
            translations.append(cached)
            continue
        translation = engine.translate(line, index).replace("\t", " ").replace("\n", " ")
        calls += 1
        if cache is not None:
            cache.put(line, translation)
        translations.append(translation)

    log_performance(
        "translate_lines",
        (time.perf_counter() - start_time) * 1000,
        engine=engine.name,
        lines=len(request.lines),
        cache_hits=hits,
        engine_calls=calls,
    )
    return TranslationResult(
        lines=translations, engine=engine.name, cache_hits=hits, engine_calls=calls
    )
