"""Loaders for the data files shipped in ``bitextminer/resources``."""

from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, FrozenSet, Optional

import yaml

RESOURCES_DIR = Path(__file__).resolve().parent.parent / "resources"


@lru_cache(maxsize=4)
def load_cleaning_rules(path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load HTML cleaning rules from a YAML file.

    Args:
        path: Custom rules file; the shipped rules are used when omitted

    Returns:
        Dictionary of selector lists and heading names

    Raises:
        FileNotFoundError: If the rules file doesn't exist
        yaml.YAMLError: If the YAML file is malformed
    """
    rules_file = Path(path) if path else RESOURCES_DIR / "cleaning_rules.yaml"

    try:
        with open(rules_file, "r", encoding="utf-8") as f:
            return yaml.safe_load(f) or {}
    except FileNotFoundError:
        raise FileNotFoundError(f"Cleaning rules file not found: {rules_file}")
    except yaml.YAMLError as e:
        raise yaml.YAMLError(f"Error parsing cleaning rules YAML file: {e}")


def read_word_list(path: Path) -> FrozenSet[str]:
    """Read a one-entry-per-line UTF-8 list, skipping blanks and ``#`` comments."""
    entries = set()
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            entry = line.strip()
            if entry and not entry.startswith("#"):
                entries.add(entry)
    return frozenset(entries)


@lru_cache(maxsize=16)
def load_shipped_list(kind: str, lang: str) -> FrozenSet[str]:
    """
    Load a shipped word list such as ``stopwords/en.txt``.

    Unknown languages get an empty list so the pipeline stays language
    independent.
    """
    list_file = RESOURCES_DIR / kind / f"{lang}.txt"
    if not list_file.exists():
        return frozenset()
    return read_word_list(list_file)
