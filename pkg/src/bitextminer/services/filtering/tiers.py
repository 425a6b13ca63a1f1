"""Tier ladder configuration."""

from pathlib import Path
from typing import List, Sequence

from ...exceptions import ConfigurationError
from .models import Comparator, FilterTier


def default_tiers() -> List[FilterTier]:
    """normalized_overlap >= 0.7, then ratio >= 0.6, then synonym_ratio >= 0.6."""
    return [
        FilterTier(comparator=Comparator.NORMALIZED_OVERLAP, threshold=0.7),
        FilterTier(comparator=Comparator.RATIO, threshold=0.6),
        FilterTier(comparator=Comparator.SYNONYM_RATIO, threshold=0.6),
    ]


def parse_tiers(lines: Sequence[str], source: str = "<tiers>") -> List[FilterTier]:
    """Parse ``comparator threshold`` lines; order is execution order."""
    tiers = []
    for line_number, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ConfigurationError(
                "filtering.tiers",
                f"{source}:{line_number}: expected 'comparator threshold', got '{line}'",
            )
        try:
            tiers.append(FilterTier(comparator=Comparator(parts[0]), threshold=float(parts[1])))
        except ValueError as e:
            valid = ", ".join(c.value for c in Comparator)
            raise ConfigurationError(
                "filtering.tiers",
                f"{source}:{line_number}: {e} (comparators: {valid}; thresholds in [0, 1])",
            )
    if not tiers:
        raise ConfigurationError("filtering.tiers", f"{source}: no tiers defined")
    return tiers


def load_tiers(path: Path) -> List[FilterTier]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return parse_tiers(f.read().splitlines(), source=str(path))
    except FileNotFoundError:
        raise ConfigurationError("filtering.tiers", f"tier file not found: {path}")


def format_tiers(tiers: Sequence[FilterTier]) -> str:
    return "".join(f"{tier.comparator.value} {tier.threshold:g}\n" for tier in tiers)

