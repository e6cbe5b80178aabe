"""Per-bar keyword extraction and the whole-song keyword slice."""

from __future__ import annotations

import math

from ..backends import TextEmbedder, WordSegmenter, cosine
from .types import KeywordSet, LyricsDoc

KEYWORDS_PER_BAR = 5
SONG_KEYWORD_RATIO = 0.10


def _bar_candidates(
    bar_text: str, segmenter: WordSegmenter, stopwords: set[str]
) -> list[tuple[str, int]]:
    """Unique candidate words with their first-occurrence position.

    Stopwords and single-character tokens are never candidates.
    """
    first_seen: dict[str, int] = {}
    for pos, token in enumerate(segmenter.segment(bar_text)):
        if len(token) < 2 or token in stopwords:
            continue
        first_seen.setdefault(token, pos)
    return list(first_seen.items())


def extract_keywords(
    doc: LyricsDoc,
    embedder: TextEmbedder,
    segmenter: WordSegmenter,
    stopwords: set[str] | None = None,
    keywords_per_bar: int = KEYWORDS_PER_BAR,
    song_ratio: float = SONG_KEYWORD_RATIO,
) -> KeywordSet:
    """Score candidate words against their bar and keep the best.

    Per bar: score = cosine(embed(word), embed(bar text)), top
    ``keywords_per_bar`` kept, ties broken by earlier first occurrence
    then lexicographic order. The song-level set is the top
    ceil(``song_ratio``) slice of all per-bar keywords (at least one),
    duplicates merged keeping the max score and backfilled from the
    remaining pool so the slice size is preserved when possible.
    """
    stopwords = stopwords or set()
    per_bar: dict[int, list[tuple[str, float]]] = {}
    # Pool entries: (score, bar index, first occurrence, word).
    pool: list[tuple[float, int, int, str]] = []

    for bar in doc.bars:
        candidates = _bar_candidates(bar.text, segmenter, stopwords)
        if not candidates:
            per_bar[bar.index] = []
            continue
        bar_vec = embedder.embed(bar.text)
        scored = [
            (cosine(embedder.embed(word), bar_vec), pos, word) for word, pos in candidates
        ]
        scored.sort(key=lambda t: (-t[0], t[1], t[2]))
        top = scored[:keywords_per_bar]
        per_bar[bar.index] = [(word, score) for score, _, word in top]
        pool.extend((score, bar.index, pos, word) for score, pos, word in top)

    total = len(pool)
    song_level: list[tuple[str, float]] = []
    if total:
        n_keep = max(1, math.ceil(song_ratio * total))
        pool.sort(key=lambda t: (-t[0], t[1], t[2], t[3]))
        best: dict[str, float] = {}
        order: list[str] = []
        for score, _, _, word in pool:
            if word in best:
                best[word] = max(best[word], score)
            else:
                best[word] = score
                order.append(word)
            # Cut at n_keep distinct words: merging duplicates inside the
            # slice would otherwise shrink it below the 10% contract.
            if len(order) >= n_keep:
                break
        song_level = sorted(
            ((w, best[w]) for w in order), key=lambda t: (-t[1], order.index(t[0]))
        )

    return KeywordSet(per_bar=per_bar, song_level=song_level)
