"""JSON-lines artifact files with a manifest header line.

Every stage artifact starts with one ``{"_manifest": {...}}`` line that
records the producing stage, a config hash, the seed, and the row
count, so "which run made this file" stays answerable. Readers skip
the manifest transparently.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterator

FORMAT_VERSION = 1


def write_jsonl(
    path: str | Path,
    rows: list[dict],
    stage: str,
    config_hash: str = "",
    seed: int | None = None,
) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    manifest = {
        "_manifest": {
            "format_version": FORMAT_VERSION,
            "stage": stage,
            "config_hash": config_hash,
            "seed": seed,
            "count": len(rows),
        }
    }
    with path.open("w", encoding="utf-8") as fh:
        fh.write(json.dumps(manifest, ensure_ascii=False, sort_keys=True) + "\n")
        for row in rows:
            fh.write(json.dumps(row, ensure_ascii=False, sort_keys=True) + "\n")


def read_manifest(path: str | Path) -> dict | None:
    with Path(path).open("r", encoding="utf-8") as fh:
        first = fh.readline().strip()
    if not first:
        return None
    row = json.loads(first)
    return row.get("_manifest")


def read_jsonl(path: str | Path) -> Iterator[dict]:
    """Yield data rows, skipping the manifest line if present."""
    with Path(path).open("r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            row = json.loads(line)
            if "_manifest" in row:
                continue
            yield row
