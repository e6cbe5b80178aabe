"""Style/emotion classification and attribute corpus assembly."""

from __future__ import annotations

from typing import Protocol

from ..backends import TextEmbedder, WordSegmenter
from .keywords import extract_keywords
from .types import AttributeRecord, KeywordSet, LyricsDoc, WritingStyle


class ClassifierError(Exception):
    """Raised when attribute classification fails for a doc."""


class AttributeClassifier(Protocol):
    def classify(self, doc: LyricsDoc) -> tuple[str, str]:
        """Return (style label, emotion label) for the doc."""
        ...


class LexiconClassifier:
    """Occurrence-count classifier over per-label cue word lists.

    The label whose cue words occur most often wins; ties resolve to
    the earlier label in the configured order, so results are
    deterministic. Labels without any cue hits fall back to the first
    configured label.
    """

    def __init__(
        self,
        style_labels: list[str],
        emotion_labels: list[str],
        style_lexicon: dict[str, list[str]],
        emotion_lexicon: dict[str, list[str]],
    ):
        if not style_labels or not emotion_labels:
            raise ClassifierError("label sets must be non-empty")
        self.style_labels = list(style_labels)
        self.emotion_labels = list(emotion_labels)
        self.style_lexicon = style_lexicon
        self.emotion_lexicon = emotion_lexicon

    @staticmethod
    def _best(text: str, labels: list[str], lexicon: dict[str, list[str]]) -> str:
        counts = []
        for rank, label in enumerate(labels):
            hits = sum(text.count(cue) for cue in lexicon.get(label, []))
            counts.append((-hits, rank, label))
        counts.sort()
        return counts[0][2]

    def classify(self, doc: LyricsDoc) -> tuple[str, str]:
        style = self._best(doc.raw_text, self.style_labels, self.style_lexicon)
        emotion = self._best(doc.raw_text, self.emotion_labels, self.emotion_lexicon)
        return style, emotion


def classify_attributes(doc: LyricsDoc, classifier: AttributeClassifier) -> WritingStyle:
    """One style and one emotion label plus the format skeleton."""
    try:
        style, emotion = classifier.classify(doc)
    except ClassifierError:
        raise
    except Exception as exc:  # propagate with the doc id attached
        raise ClassifierError(f"classification failed for doc {doc.id}: {exc}") from exc
    return WritingStyle(
        style=style,
        emotion=emotion,
        format=tuple(tuple(bar.line_lengths) for bar in doc.bars),
    )


def build_attribute_corpus(
    docs: list[LyricsDoc],
    embedder: TextEmbedder,
    segmenter: WordSegmenter,
    classifier: AttributeClassifier,
    stopwords: set[str] | None = None,
) -> list[AttributeRecord]:
    """One AttributeRecord per admitted doc, in input order."""
    records = []
    for doc in docs:
        keywords: KeywordSet = extract_keywords(doc, embedder, segmenter, stopwords)
        style = classify_attributes(doc, classifier)
        records.append(AttributeRecord(doc_id=doc.id, keywords=keywords, writing_style=style))
    return records
