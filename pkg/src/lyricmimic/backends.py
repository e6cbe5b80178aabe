"""Pluggable text backends: embedding and word segmentation.

The pipeline only depends on the two protocols below, so a production
deployment can drop in a sentence-transformer embedder or a proper
Chinese segmenter. The bundled implementations are fully deterministic
and need no model downloads, which keeps the whole pipeline testable.
"""

from __future__ import annotations

import hashlib
from typing import Protocol

import numpy as np


class TextEmbedder(Protocol):
    def embed(self, text: str) -> np.ndarray:
        """Return a 1-D float vector for the text."""
        ...


class WordSegmenter(Protocol):
    def segment(self, text: str) -> list[str]:
        """Split text into word tokens."""
        ...


def cosine(a: np.ndarray, b: np.ndarray) -> float:
    na = float(np.linalg.norm(a))
    nb = float(np.linalg.norm(b))
    if na == 0.0 or nb == 0.0:
        return 0.0
    return float(np.dot(a, b) / (na * nb))


class HashEmbedder:
    """Deterministic signed hash-projection embedding.

    Each character unigram and bigram is hashed onto one of ``dim``
    buckets with a +/-1 sign; the vector is the signed count profile.
    Identical texts always map to identical vectors, and the map does
    not depend on the process hash seed.
    """

    def __init__(self, dim: int = 64):
        if dim < 2:
            raise ValueError("dim must be >= 2")
        self.dim = dim

    def _features(self, text: str):
        chars = [c for c in text if not c.isspace()]
        yield from chars
        for i in range(len(chars) - 1):
            yield chars[i] + chars[i + 1]

    def embed(self, text: str) -> np.ndarray:
        vec = np.zeros(self.dim, dtype=np.float64)
        for feat in self._features(text):
            digest = hashlib.blake2b(feat.encode("utf-8"), digest_size=8).digest()
            value = int.from_bytes(digest, "big")
            sign = 1.0 if value & 1 else -1.0
            vec[(value >> 1) % self.dim] += sign
        if not vec.any():
            # Guarantee a usable direction even for degenerate input so
            # cosine(x, x) is 1.0 for any non-identical-to-zero pair.
            vec[0] = 1.0
        return vec


class LexiconSegmenter:
    """Greedy longest-match dictionary segmentation.

    Characters not covered by any lexicon entry come out as
    single-character tokens. Whitespace and line breaks split tokens but
    are never emitted.
    """

    def __init__(self, lexicon: list[str]):
        self.words = {w for w in lexicon if w}
        self.max_len = max((len(w) for w in self.words), default=1)

    def segment(self, text: str) -> list[str]:
        tokens: list[str] = []
        for chunk in text.split():
            i = 0
            n = len(chunk)
            while i < n:
                match = chunk[i]
                for size in range(min(self.max_len, n - i), 1, -1):
                    cand = chunk[i : i + size]
                    if cand in self.words:
                        match = cand
                        break
                tokens.append(match)
                i += len(match)
        return tokens
