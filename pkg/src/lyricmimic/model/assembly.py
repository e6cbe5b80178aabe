"""Encoder input assembly: control segments, lyrics, and truncation.

Layouts:
  keyword-to-lyrics   [STYLE] style [EMO] emotion [KW] kw1 [KW] kw2 ...
  lyrics-to-lyrics    ... same controls ... [LYRIC] line [SEP] line [SEP] ...

The control segments (style, emotion, keywords) are never truncated.
When a lyrics-to-lyrics input exceeds the budget, whole bars are
removed from the end of the lyrics until it fits.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..corpus.types import KeywordSet, LyricsDoc, WritingStyle
from .tokenizer import EMO, KW, LYRIC, STYLE, CharTokenizer


@dataclass
class EncodedInput:
    """Token ids plus the span map of the layout segments.

    Spans are half-open [start, end) indices into ``token_ids``.
    ``bar_spans`` (lyrics inputs only) track each surviving bar so tests
    can check that truncation removed whole trailing bars.
    """

    token_ids: list[int]
    sections: dict[str, tuple[int, int]] = field(default_factory=dict)
    bar_spans: list[tuple[int, int]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.token_ids)


def _control_ids(
    keywords: KeywordSet, style: WritingStyle, tokenizer: CharTokenizer, max_len: int
) -> tuple[list[int], dict[str, tuple[int, int]]]:
    """Control prefix; keywords are trimmed from the tail (lowest scored
    first, song_level being score-descending) if the budget is exceeded."""
    ids: list[int] = []
    sections: dict[str, tuple[int, int]] = {}

    ids.append(tokenizer.marker_id(STYLE))
    start = len(ids)
    ids.extend(tokenizer.encode(style.style))
    sections["style"] = (start, len(ids))

    ids.append(tokenizer.marker_id(EMO))
    start = len(ids)
    ids.extend(tokenizer.encode(style.emotion))
    sections["emotion"] = (start, len(ids))

    kw_start = len(ids)
    kw_marker = tokenizer.marker_id(KW)
    for word, _ in keywords.song_level:
        word_ids = [kw_marker] + tokenizer.encode(word)
        if len(ids) + len(word_ids) > max_len:
            break
        ids.extend(word_ids)
    sections["keywords"] = (kw_start, len(ids))
    return ids, sections


def assemble_k2l_input(
    keywords: KeywordSet, style: WritingStyle, tokenizer: CharTokenizer
) -> EncodedInput:
    """Keywords + writing style as the encoder input."""
    max_len = 512
    ids, sections = _control_ids(keywords, style, tokenizer, max_len)
    return EncodedInput(token_ids=ids, sections=sections)


def assemble_l2l_input(
    source: LyricsDoc,
    keywords: KeywordSet,
    style: WritingStyle,
    tokenizer: CharTokenizer,
    max_seq_len: int = 512,
) -> EncodedInput:
    """Controls plus the source lyrics as the encoder input.

    If the total exceeds ``max_seq_len``, whole bars are dropped from
    the end of the lyrics until it fits; the controls stay intact.
    """
    ids, sections = _control_ids(keywords, style, tokenizer, max_seq_len)
    ids.append(tokenizer.marker_id(LYRIC))
    lyric_start = len(ids)

    bar_token_lists = []
    for bar in source.bars:
        bar_ids: list[int] = []
        for line in bar.lines:
            bar_ids.extend(tokenizer.encode(line))
            bar_ids.append(tokenizer.sep_id)
        bar_token_lists.append(bar_ids)

    budget = max_seq_len - len(ids)
    kept = list(bar_token_lists)
    while kept and sum(len(b) for b in kept) > budget:
        kept.pop()
    if not kept:
        raise ValueError("source too long for control budget")

    bar_spans = []
    for bar_ids in kept:
        start = len(ids)
        ids.extend(bar_ids)
        bar_spans.append((start, len(ids)))
    sections["lyrics"] = (lyric_start, len(ids))
    return EncodedInput(token_ids=ids, sections=sections, bar_spans=bar_spans)


def encode_target(doc_or_text: LyricsDoc | str, tokenizer: CharTokenizer) -> list[int]:
    """Decoder target: flat lines separated by [SEP], closed by [EOS].

    Bar boundaries are carried by the format skeleton, not the token
    stream, so the decoder sees exactly what format-controlled
    generation will produce.
    """
    if isinstance(doc_or_text, LyricsDoc):
        lines = doc_or_text.lines
    else:
        lines = [line for line in doc_or_text.splitlines() if line.strip()]
    ids: list[int] = []
    for i, line in enumerate(lines):
        ids.extend(tokenizer.encode(line))
        if i < len(lines) - 1:
            ids.append(tokenizer.sep_id)
    ids.append(tokenizer.eos_id)
    return ids
