"""On-disk layout of crawled and cleaned document pairs.

Each pair lives in its own directory named by the pair id::

    <stage dir>/<id>/<id>.<lang>.html   (raw stage)
    <stage dir>/<id>/<id>.<lang>.txt    (clean stage)
    <stage dir>/<id>/<id>.meta.json
"""

from pathlib import Path
from typing import Iterable, List

from ...core.files import read_json, write_json
from .models import (
    CleanDocument,
    CrawlFailure,
    DocumentOrigin,
    DocumentPair,
    RawArticle,
    RawArticlePair,
)

META_SUFFIX = ".meta.json"
FAILURES_FILE = "crawl_failures.json"


def _pair_dirs(stage_dir: Path) -> List[Path]:
    stage_dir = Path(stage_dir)
    if not stage_dir.exists():
        return []
    return sorted(
        d for d in stage_dir.iterdir() if d.is_dir() and (d / f"{d.name}{META_SUFFIX}").exists()
    )


def write_raw_pairs(stage_dir: Path, pairs: Iterable[RawArticlePair]) -> int:
    count = 0
    for pair in pairs:
        pair_dir = Path(stage_dir) / pair.id
        pair_dir.mkdir(parents=True, exist_ok=True)
        for article in (pair.source, pair.target):
            (pair_dir / f"{pair.id}.{article.lang}.html").write_text(article.html, encoding="utf-8")
        write_json(
            pair_dir / f"{pair.id}{META_SUFFIX}",
            {
                "id": pair.id,
                "origin": pair.origin.value,
                "langs": [pair.source.lang, pair.target.lang],
                "titles": {pair.source.lang: pair.source.title, pair.target.lang: pair.target.title},
                "urls": {pair.source.lang: pair.source.url, pair.target.lang: pair.target.url},
            },
        )
        count += 1
    return count


def read_raw_pairs(stage_dir: Path) -> List[RawArticlePair]:
    pairs = []
    for pair_dir in _pair_dirs(stage_dir):
        meta = read_json(pair_dir / f"{pair_dir.name}{META_SUFFIX}")
        articles = [
            RawArticle(
                url=meta["urls"][lang],
                lang=lang,
                title=meta["titles"][lang],
                html=(pair_dir / f"{meta['id']}.{lang}.html").read_text(encoding="utf-8"),
            )
            for lang in meta["langs"]
        ]
        pairs.append(
            RawArticlePair(
                id=meta["id"],
                source=articles[0],
                target=articles[1],
                origin=DocumentOrigin(meta["origin"]),
            )
        )
    return pairs


def write_failures(stage_dir: Path, failures: Iterable[CrawlFailure]) -> None:
    write_json(Path(stage_dir) / FAILURES_FILE, [f.model_dump() for f in failures])


def write_document_pairs(stage_dir: Path, pairs: Iterable[DocumentPair]) -> int:
    count = 0
    for pair in pairs:
        pair_dir = Path(stage_dir) / pair.id
        pair_dir.mkdir(parents=True, exist_ok=True)
        for doc in (pair.source_doc, pair.target_doc):
            (pair_dir / f"{pair.id}.{doc.lang}.txt").write_text(doc.text + "\n", encoding="utf-8")
        write_json(
            pair_dir / f"{pair.id}{META_SUFFIX}",
            {
                "id": pair.id,
                "origin": pair.origin.value,
                "langs": [pair.source_doc.lang, pair.target_doc.lang],
                "titles": {
                    pair.source_doc.lang: pair.source_doc.title,
                    pair.target_doc.lang: pair.target_doc.title,
                },
                "urls": dict(pair.urls),
            },
        )
        count += 1
    return count


def read_document_pairs(stage_dir: Path) -> List[DocumentPair]:
    pairs = []
    for pair_dir in _pair_dirs(stage_dir):
        meta = read_json(pair_dir / f"{pair_dir.name}{META_SUFFIX}")
        docs = [
            CleanDocument(
                lang=lang,
                title=meta["titles"].get(lang, ""),
                text=(pair_dir / f"{meta['id']}.{lang}.txt").read_text(encoding="utf-8").rstrip("\n"),
            )
            for lang in meta["langs"]
        ]
        pairs.append(
            DocumentPair(
                id=meta["id"],
                source_doc=docs[0],
                target_doc=docs[1],
                origin=DocumentOrigin(meta["origin"]),
                urls=meta.get("urls", {}),
            )
        )
    return pairs
