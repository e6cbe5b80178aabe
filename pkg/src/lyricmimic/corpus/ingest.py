"""Raw lyrics ingestion: normalization, bar segmentation, filtering, dedup."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Iterable, Iterator

from ..utils import content_id
from .types import Bar, LyricsDoc

log = logging.getLogger(__name__)

# Bars fall back to fixed windows of this many lines when the text has
# no blank-line boundaries.
FALLBACK_BAR_LINES = 4

MIN_CHARS = 100


def normalize_lines(text: str) -> list[str]:
    """Per-line cleanup: trim edges, collapse internal whitespace runs.

    Blank lines are kept (as empty strings) so bar boundaries survive,
    but leading/trailing blank lines and repeated blanks collapse.
    """
    lines: list[str] = []
    for raw_line in text.splitlines():
        line = " ".join(raw_line.split())
        if line:
            lines.append(line)
        elif lines and lines[-1]:
            lines.append("")
    while lines and not lines[-1]:
        lines.pop()
    return lines


def segment_bars(text: str) -> list[Bar]:
    """Split lyrics into bars.

    Bars are blank-line delimited; when the text has no blank lines the
    fallback is fixed windows of four lines (the last bar may be
    shorter).
    """
    lines = normalize_lines(text)
    if not lines:
        raise ValueError("empty lyrics")

    groups: list[list[str]] = [[]]
    for line in lines:
        if line:
            groups[-1].append(line)
        else:
            groups.append([])
    groups = [g for g in groups if g]

    if len(groups) == 1 and len(groups[0]) > FALLBACK_BAR_LINES:
        only = groups[0]
        groups = [
            only[i : i + FALLBACK_BAR_LINES] for i in range(0, len(only), FALLBACK_BAR_LINES)
        ]

    return [Bar(index=i, lines=tuple(g)) for i, g in enumerate(groups)]


def canonical_text(bars: list[Bar]) -> str:
    """Canonical raw_text: lines joined by \\n, bars by blank lines."""
    return "\n\n".join(bar.text for bar in bars)


def make_doc(title: str, text: str) -> LyricsDoc:
    """Segment one lyric into a LyricsDoc with a content-derived id."""
    bars = segment_bars(text)
    canon = canonical_text(bars)
    return LyricsDoc(id=content_id(canon, prefix="d"), title=title, raw_text=canon, bars=tuple(bars))


def ingest_corpus(
    raw_docs: Iterable[tuple[str, str | bytes]],
    min_chars: int = MIN_CHARS,
) -> list[LyricsDoc]:
    """Filter, deduplicate, and segment a raw (title, text) stream.

    Docs shorter than ``min_chars`` non-whitespace characters are
    dropped; texts identical after whitespace normalization are kept
    once (first occurrence wins). Undecodable or empty records are
    rejected with a logged reason, never aborting the stream.
    """
    docs: list[LyricsDoc] = []
    seen: set[str] = set()
    for i, (title, text) in enumerate(raw_docs):
        if isinstance(text, bytes):
            try:
                text = text.decode("utf-8")
            except UnicodeDecodeError as exc:
                log.warning("rejecting record %d (%r): undecodable input: %s", i, title, exc)
                continue
        try:
            doc = make_doc(title, text)
        except ValueError as exc:
            log.warning("rejecting record %d (%r): %s", i, title, exc)
            continue
        if doc.char_count < min_chars:
            log.info(
                "rejecting record %d (%r): %d chars < %d", i, title, doc.char_count, min_chars
            )
            continue
        if doc.raw_text in seen:
            log.info("rejecting record %d (%r): duplicate of earlier doc", i, title)
            continue
        seen.add(doc.raw_text)
        docs.append(doc)
    return docs


def read_raw_docs(path: str | Path) -> Iterator[tuple[str, str | bytes]]:
    """Yield (title, text) records from a JSONL file or a directory of
    .txt files (title = file stem). Bytes are passed through so the
    ingest layer owns decode failures."""
    path = Path(path)
    if path.is_dir():
        for file in sorted(path.glob("*.txt")):
            yield file.stem, file.read_bytes()
        return
    with path.open("rb") as fh:
        for i, raw_line in enumerate(fh):
            raw_line = raw_line.strip()
            if not raw_line:
                continue
            try:
                row = json.loads(raw_line.decode("utf-8"))
                yield row.get("title", f"untitled-{i}"), row["text"]
            except (UnicodeDecodeError, json.JSONDecodeError, KeyError) as exc:
                log.warning("skipping malformed line %d of %s: %s", i, path, exc)
