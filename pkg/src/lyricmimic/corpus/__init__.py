from .types import (
    AttributeRecord,
    Bar,
    KeywordSet,
    LyricsDoc,
    ParallelPair,
    WritingStyle,
)
from .ingest import ingest_corpus, make_doc, read_raw_docs, segment_bars
from .keywords import extract_keywords
from .attributes import (
    AttributeClassifier,
    ClassifierError,
    LexiconClassifier,
    build_attribute_corpus,
    classify_attributes,
)
from .synthesize import synthesize_parallel_corpus

__all__ = [
    "AttributeClassifier",
    "AttributeRecord",
    "Bar",
    "ClassifierError",
    "KeywordSet",
    "LexiconClassifier",
    "LyricsDoc",
    "ParallelPair",
    "WritingStyle",
    "build_attribute_corpus",
    "classify_attributes",
    "extract_keywords",
    "ingest_corpus",
    "make_doc",
    "read_raw_docs",
    "segment_bars",
    "synthesize_parallel_corpus",
]
