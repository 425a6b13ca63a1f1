"""Append-only translation cache, one TSV per engine and language pair."""

import hashlib
import threading
from pathlib import Path
from typing import Dict, Optional


def line_key(line: str) -> str:
    return hashlib.sha256(line.encode("utf-8")).hexdigest()


class TranslationCache:
    """Maps ``sha256(source line)`` to its translation."""

    def __init__(self, cache_dir: Path, cache_id: str, lang_pair: str):
        self.path = Path(cache_dir) / f"{cache_id}.{lang_pair}.tsv"
        self._lock = threading.Lock()
        self._entries: Dict[str, str] = {}
        if self.path.exists():
            with open(self.path, "r", encoding="utf-8") as f:
                for line in f:
                    key, sep, translation = line.rstrip("\n").partition("\t")
                    if sep:
                        self._entries.setdefault(key, translation)

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, line: str) -> Optional[str]:
        return self._entries.get(line_key(line))

    def put(self, line: str, translation: str) -> None:
        key = line_key(line)
        with self._lock:
            if key in self._entries:
                return
            self._entries[key] = translation
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as f:
                f.write(f"{key}\t{translation}\n")
