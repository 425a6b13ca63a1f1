"""Synthetic bilingual wiki with a known parallel subset.

Source pages are chained by in-body links (doc01 -> doc02 -> ...) and each
carries an interlanguage link to its target page. Every page mixes planted
translation pairs with noise sentences that have no counterpart; target
pages shuffle some planted sentences locally so their order crosses the
source order. Words are pseudo-words with a one-to-one dictionary, so a
word-by-word gloss of a planted source sentence reproduces its target
wherever the seed lexicon covers the words.
"""

import html
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Sequence, Set, Tuple

from ...config.logging import get_logger
from ...core.files import write_json
from ...core.textproc import load_abbreviations
from ...core.resources import load_shipped_list
from ..acquisition.crawler import document_id
from ..alignment import Lexicon, write_lexicon
from .gold import write_gold

logger = get_logger(__name__)

SOURCE_LANG = "pl"
TARGET_LANG = "en"
SOURCE_ALPHABET = "aąbcćdeęfghijklłmnńoóprsśtuwyzźż"
TARGET_ALPHABET = "abcdefghijklmnoprstuvwyz"
VOCABULARY_SIZE = 800
SEED_LEXICON_COVERAGE = 0.85
SWAP_PROBABILITY = 0.15

CONFIG_FILE = "pipeline.json"
GOLD_FILE = "gold.tsv"
LEXICON_FILE = "seed_lexicon.tsv"
WIKI_DIR = "wiki"


@dataclass(frozen=True)
class FixtureCorpus:
    """Where a generated fixture lives and what was planted in it."""

    root: Path
    config_path: Path
    gold_path: Path
    lexicon_path: Path
    documents: int
    planted_pairs: int
    source_sentences: int
    target_sentences: int


def _reserved_words() -> Set[str]:
    reserved: Set[str] = set()
    for lang in (SOURCE_LANG, TARGET_LANG):
        reserved |= load_shipped_list("stopwords", lang)
        reserved |= {a.rstrip(".") for a in load_abbreviations(lang)}
    return reserved


def _make_words(rng: random.Random, alphabet: str, count: int, exclude: Set[str]) -> List[str]:
    words: List[str] = []
    seen = set(exclude)
    while len(words) < count:
        word = "".join(rng.choice(alphabet) for _ in range(rng.randint(3, 9)))
        if word in seen:
            continue
        seen.add(word)
        words.append(word)
    return words


def _sentence(words: Sequence[str]) -> str:
    return " ".join([words[0].capitalize(), *words[1:]]) + "."


def _paragraphs(rng: random.Random, sentences: Sequence[str]) -> List[str]:
    paragraphs, index = [], 0
    while index < len(sentences):
        size = rng.randint(2, 4)
        paragraphs.append(" ".join(sentences[index : index + size]))
        index += size
    return paragraphs


def _insert_noise(rng: random.Random, sentences: List[str], noise: Sequence[str]) -> List[str]:
    result = list(sentences)
    for sentence in noise:
        result.insert(rng.randint(0, len(result)), sentence)
    return result


def _page(
    lang: str,
    title: str,
    paragraphs: Sequence[str],
    next_url: str,
    next_title: str,
    counterpart_lang: str,
    counterpart_url: str,
) -> str:
    site = "Wikipedia, wolna encyklopedia" if lang == SOURCE_LANG else "Wikipedia"
    references = "Przypisy" if lang == SOURCE_LANG else "References"
    body = "\n".join(f"<p>{html.escape(p)}</p>" for p in paragraphs)
    see_also = (
        f'<ul class="related"><li><a href="{next_url}">{html.escape(next_title)}</a></li></ul>'
        if next_url
        else ""
    )
    return f"""<!DOCTYPE html>
<html lang="{lang}">
<head><meta charset="utf-8"><title>{html.escape(title)} – {site}</title></head>
<body>
<h1 id="firstHeading">{html.escape(title)}</h1>
<div id="mw-content-text"><div class="mw-parser-output">
<table class="infobox"><tr><th>{html.escape(title)}</th><td>1 2 3</td></tr></table>
{body}
{see_also}
<div class="mw-heading mw-heading2"><h2>{references}</h2></div>
<ol class="references"><li>https://example.org/{lang}/source</li></ol>
<p>{references} 1.</p>
</div></div>
<div id="p-lang"><ul>
<li class="interlanguage-link"><a href="{counterpart_url}" hreflang="{counterpart_lang}">{counterpart_lang}</a></li>
</ul></div>
</body>
</html>
"""


def generate_fixture(
    out_dir: Path, documents: int = 20, seed: int = 0, noise_only: bool = False
) -> FixtureCorpus:
    """
    Write the synthetic wiki, seed lexicon, gold pairs and a pipeline config.

    With ``noise_only`` no parallel sentences are planted.
    """
    if documents < 1:
        raise ValueError("documents must be at least 1")
    rng = random.Random(seed)
    root = Path(out_dir)
    reserved = _reserved_words()
    src_words = _make_words(rng, SOURCE_ALPHABET, VOCABULARY_SIZE, reserved)
    tgt_words = _make_words(rng, TARGET_ALPHABET, VOCABULARY_SIZE, reserved | set(src_words))
    dictionary = dict(zip(src_words, tgt_words))

    def random_sentence() -> List[str]:
        return [rng.choice(src_words) for _ in range(rng.randint(7, 14))]

    def random_target_sentence() -> List[str]:
        return [rng.choice(tgt_words) for _ in range(rng.randint(7, 14))]

    gold: Dict[str, List[Tuple[str, str]]] = {}
    source_total = target_total = 0
    for number in range(1, documents + 1):
        src_title, tgt_title = f"Dokument {number:02d}", f"Document {number:02d}"
        planted_count = 0 if noise_only else rng.randint(8, 14)
        noise_range = (6, 10) if noise_only else (1, 4)
        planted = []
        for _ in range(planted_count):
            words = random_sentence()
            planted.append((_sentence(words), _sentence([dictionary[w] for w in words])))

        targets = [tgt for _, tgt in planted]
        for k in range(len(targets) - 1):
            if rng.random() < SWAP_PROBABILITY:
                targets[k], targets[k + 1] = targets[k + 1], targets[k]
        src_sentences = _insert_noise(
            rng,
            [src for src, _ in planted],
            [_sentence(random_sentence()) for _ in range(rng.randint(*noise_range))],
        )
        tgt_sentences = _insert_noise(
            rng,
            targets,
            [_sentence(random_target_sentence()) for _ in range(rng.randint(*noise_range))],
        )
        source_total += len(src_sentences)
        target_total += len(tgt_sentences)
        if planted:
            gold[document_id(number, src_title)] = planted

        has_next = number < documents
        src_url = f"fixture://{SOURCE_LANG}/doc{number:02d}"
        tgt_url = f"fixture://{TARGET_LANG}/doc{number:02d}"
        pages = (
            (
                SOURCE_LANG,
                src_title,
                _paragraphs(rng, src_sentences),
                f"fixture://{SOURCE_LANG}/doc{number + 1:02d}" if has_next else "",
                f"Dokument {number + 1:02d}",
                TARGET_LANG,
                tgt_url,
            ),
            (
                TARGET_LANG,
                tgt_title,
                _paragraphs(rng, tgt_sentences),
                f"fixture://{TARGET_LANG}/doc{number + 1:02d}" if has_next else "",
                f"Document {number + 1:02d}",
                SOURCE_LANG,
                src_url,
            ),
        )
        for lang, title, paragraphs, next_url, next_title, other_lang, other_url in pages:
            page_path = root / WIKI_DIR / lang / f"doc{number:02d}.html"
            page_path.parent.mkdir(parents=True, exist_ok=True)
            page_path.write_text(
                _page(lang, title, paragraphs, next_url, next_title, other_lang, other_url),
                encoding="utf-8",
            )

    covered = rng.sample(src_words, int(len(src_words) * SEED_LEXICON_COVERAGE))
    lexicon_path = root / LEXICON_FILE
    write_lexicon(lexicon_path, Lexicon({(w, dictionary[w]): 1.0 for w in covered}))
    gold_path = root / GOLD_FILE
    write_gold(gold_path, gold)

    config_path = root / CONFIG_FILE
    write_json(
        config_path,
        {
            "source_lang": SOURCE_LANG,
            "target_lang": TARGET_LANG,
            "random_seed": seed,
            "paths": {"fixtures_dir": WIKI_DIR, "out_dir": "out"},
            "crawl": {
                "seed_url": f"fixture://{SOURCE_LANG}/doc01",
                "max_articles": documents,
                "delay_ms": 0,
                "allow_http": False,
            },
            "aligner": {"lexicon": LEXICON_FILE},
            "translation": {"engine": "gloss", "lexicon": LEXICON_FILE},
            "report": {"gold": GOLD_FILE},
        },
    )
    planted_pairs = sum(len(pairs) for pairs in gold.values())
    logger.info(
        "Generated fixture corpus",
        root=str(root),
        documents=documents,
        planted_pairs=planted_pairs,
        seed=seed,
    )
    return FixtureCorpus(
        root=root,
        config_path=config_path,
        gold_path=gold_path,
        lexicon_path=lexicon_path,
        documents=documents,
        planted_pairs=planted_pairs,
        source_sentences=source_total,
        target_sentences=target_total,
    )
