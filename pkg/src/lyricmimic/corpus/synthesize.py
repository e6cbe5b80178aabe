"""Parallel corpus synthesis: sample keyword subsets, generate new lyrics."""

from __future__ import annotations

import logging
import math
import random

from ..utils import derive_seed
from .types import AttributeRecord, KeywordSet, LyricsDoc, ParallelPair

log = logging.getLogger(__name__)

PAIRS_PER_SOURCE = 3
MIN_SUBSET_RATIO = 0.30


def sample_keyword_subset(
    song_level: list[tuple[str, float]], rng: random.Random
) -> list[tuple[str, float]]:
    """Random subset of the song-level keywords, uniformly sized between
    30% and 100% of the set, preserving score order."""
    n = len(song_level)
    if n == 0:
        return []
    low = max(1, math.ceil(MIN_SUBSET_RATIO * n))
    size = rng.randint(low, n)
    picked = sorted(rng.sample(range(n), size))
    return [song_level[i] for i in picked]


def synthesize_parallel_corpus(
    records: list[AttributeRecord],
    docs: list[LyricsDoc],
    k2l_model,
    tokenizer,
    rng_seed: int,
    pairs_per_source: int = PAIRS_PER_SOURCE,
    decode_overrides: dict | None = None,
) -> list[ParallelPair]:
    """Generate ``pairs_per_source`` new lyrics per source through the
    keyword-to-lyrics model, each conditioned on a random subset of that
    source's song-level keywords plus its writing style.

    Fully deterministic for a fixed ``rng_seed``: every random choice is
    derived from (seed, doc id, sample index), so reruns are
    byte-identical. A generation failure skips that sample with a log
    line; the final count may then be below pairs_per_source * len(records).
    """
    from ..decoding import DecodeConfig, FormatSkeleton, generate
    from ..model.assembly import assemble_k2l_input

    by_id = {doc.id: doc for doc in docs}
    overrides = decode_overrides or {}
    pairs: list[ParallelPair] = []
    for record in records:
        doc = by_id[record.doc_id]
        skeleton = FormatSkeleton.from_format(record.writing_style.format)
        for i in range(pairs_per_source):
            rng = random.Random(derive_seed(rng_seed, record.doc_id, i, "subset"))
            subset = sample_keyword_subset(record.keywords.song_level, rng)
            subset_kws = KeywordSet(per_bar={}, song_level=subset)
            encoded = assemble_k2l_input(subset_kws, record.writing_style, tokenizer)
            config = DecodeConfig(
                seed=derive_seed(rng_seed, record.doc_id, i, "decode"), **overrides
            )
            try:
                text = generate(k2l_model, tokenizer, encoded, skeleton, config)
            except Exception as exc:
                log.warning(
                    "skipping sample %d for doc %s: generation failed: %s",
                    i,
                    record.doc_id,
                    exc,
                )
                continue
            pairs.append(
                ParallelPair(
                    doc_id=record.doc_id,
                    synthetic_lyrics=text,
                    keywords=subset_kws,
                    writing_style=record.writing_style,
                    target_lyrics=doc.raw_text,
                )
            )
    return pairs
