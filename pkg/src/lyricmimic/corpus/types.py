"""Core corpus data types."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Bar:
    """A contiguous group of lyric lines (stanza-like unit)."""

    index: int
    lines: tuple[str, ...]

    @property
    def line_lengths(self) -> list[int]:
        return [len(line) for line in self.lines]

    @property
    def text(self) -> str:
        return "\n".join(self.lines)


@dataclass(frozen=True)
class LyricsDoc:
    """One song's lyrics, segmented into bars.

    ``raw_text`` is the canonical form: bars joined by blank lines,
    lines joined by newlines. ``char_count`` counts non-whitespace
    code points.
    """

    id: str
    title: str
    raw_text: str
    bars: tuple[Bar, ...]

    @property
    def char_count(self) -> int:
        return sum(1 for c in self.raw_text if not c.isspace())

    @property
    def lines(self) -> list[str]:
        return [line for bar in self.bars for line in bar.lines]

    @property
    def format(self) -> list[list[int]]:
        """Structural skeleton: line lengths per bar."""
        return [bar.line_lengths for bar in self.bars]


@dataclass
class KeywordSet:
    """Scored keywords per bar plus the whole-song top slice.

    ``per_bar`` lists are score-descending; ``song_level`` is the top
    ceil(10%) of all per-bar entries, score-descending, duplicates
    merged keeping the max score.
    """

    per_bar: dict[int, list[tuple[str, float]]] = field(default_factory=dict)
    song_level: list[tuple[str, float]] = field(default_factory=list)

    def song_keywords(self) -> list[str]:
        return [word for word, _ in self.song_level]

    def to_dict(self) -> dict:
        return {
            "per_bar": {str(i): [[w, s] for w, s in kws] for i, kws in self.per_bar.items()},
            "song_level": [[w, s] for w, s in self.song_level],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "KeywordSet":
        return cls(
            per_bar={
                int(i): [(w, float(s)) for w, s in kws] for i, kws in data["per_bar"].items()
            },
            song_level=[(w, float(s)) for w, s in data["song_level"]],
        )


@dataclass(frozen=True)
class WritingStyle:
    """Extracted attributes of a song: style label, emotion label, and
    the structural format skeleton (line lengths per bar)."""

    style: str
    emotion: str
    format: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {
            "style": self.style,
            "emotion": self.emotion,
            "format": [list(bar) for bar in self.format],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "WritingStyle":
        return cls(
            style=data["style"],
            emotion=data["emotion"],
            format=tuple(tuple(bar) for bar in data["format"]),
        )


@dataclass
class AttributeRecord:
    """Attributes aligned with one admitted source doc."""

    doc_id: str
    keywords: KeywordSet
    writing_style: WritingStyle

    def to_dict(self) -> dict:
        row = {"doc_id": self.doc_id, "keywords": self.keywords.to_dict()}
        row.update(self.writing_style.to_dict())
        return row

    @classmethod
    def from_dict(cls, data: dict) -> "AttributeRecord":
        return cls(
            doc_id=data["doc_id"],
            keywords=KeywordSet.from_dict(data["keywords"]),
            writing_style=WritingStyle.from_dict(data),
        )


@dataclass
class ParallelPair:
    """One synthetic training example: generated lyrics plus the
    attributes of its source, targeting the source lyrics."""

    doc_id: str
    synthetic_lyrics: str
    keywords: KeywordSet
    writing_style: WritingStyle
    target_lyrics: str

    def to_dict(self) -> dict:
        row = {
            "doc_id": self.doc_id,
            "synthetic_lyrics": self.synthetic_lyrics,
            "keywords": self.keywords.to_dict(),
            "target_lyrics": self.target_lyrics,
        }
        row.update(self.writing_style.to_dict())
        return row

    @classmethod
    def from_dict(cls, data: dict) -> "ParallelPair":
        return cls(
            doc_id=data["doc_id"],
            synthetic_lyrics=data["synthetic_lyrics"],
            keywords=KeywordSet.from_dict(data["keywords"]),
            writing_style=WritingStyle.from_dict(data),
            target_lyrics=data["target_lyrics"],
        )
