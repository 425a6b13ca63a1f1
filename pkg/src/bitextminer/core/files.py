"""Deterministic file helpers for stage artifacts."""

import json
from pathlib import Path
from typing import Any, Iterable, List


def write_json(path: Path, data: Any) -> None:
    """Write sorted, indented UTF-8 JSON with a trailing newline."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(
        json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )


def read_json(path: Path) -> Any:
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def write_lines(path: Path, lines: Iterable[str]) -> None:
    """One line per entry, LF-terminated."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(f"{line}\n" for line in lines), encoding="utf-8")


def read_lines(path: Path) -> List[str]:
    with open(path, "r", encoding="utf-8") as f:
        return f.read().splitlines()
