"""Character-level tokenizer with control markers.

Character tokens make per-line character counts equal token counts,
which the format controller relies on. A word-level vocabulary is a
deployment-scale option behind the same interface.
"""

from __future__ import annotations

from typing import Iterable

PAD, BOS, EOS, SEP = "[PAD]", "[BOS]", "[EOS]", "[SEP]"
STYLE, EMO, KW, LYRIC, UNK = "[STYLE]", "[EMO]", "[KW]", "[LYRIC]", "[UNK]"

SPECIAL_TOKENS = (PAD, BOS, EOS, SEP, STYLE, EMO, KW, LYRIC, UNK)

# Rendered in place of out-of-vocabulary characters when decoding.
UNK_CHAR = "□"  # □


class CharTokenizer:
    """Maps text to ids one character at a time.

    Newlines encode to [SEP]; every other character must be in the
    vocabulary or it becomes [UNK]. encode/decode round-trips any
    in-vocabulary text.
    """

    def __init__(self, alphabet: Iterable[str]):
        chars = sorted(set(alphabet) - set(SPECIAL_TOKENS) - {"\n"})
        self.tokens: list[str] = list(SPECIAL_TOKENS) + chars
        self.index: dict[str, int] = {tok: i for i, tok in enumerate(self.tokens)}

    @classmethod
    def from_texts(cls, texts: Iterable[str]) -> "CharTokenizer":
        alphabet: set[str] = set()
        for text in texts:
            alphabet.update(c for c in text if c != "\n")
        return cls(alphabet)

    @property
    def vocab_size(self) -> int:
        return len(self.tokens)

    @property
    def pad_id(self) -> int:
        return self.index[PAD]

    @property
    def bos_id(self) -> int:
        return self.index[BOS]

    @property
    def eos_id(self) -> int:
        return self.index[EOS]

    @property
    def sep_id(self) -> int:
        return self.index[SEP]

    @property
    def unk_id(self) -> int:
        return self.index[UNK]

    def special_ids(self) -> set[int]:
        return {self.index[tok] for tok in SPECIAL_TOKENS}

    def marker_id(self, marker: str) -> int:
        if marker not in SPECIAL_TOKENS:
            raise KeyError(f"not a marker token: {marker}")
        return self.index[marker]

    def encode(self, text: str) -> list[int]:
        ids = []
        for ch in text:
            if ch == "\n":
                ids.append(self.sep_id)
            else:
                ids.append(self.index.get(ch, self.unk_id))
        return ids

    def decode(self, ids: Iterable[int], skip_special: bool = True) -> str:
        out = []
        for i in ids:
            tok = self.tokens[i]
            if tok == SEP:
                out.append("\n")
            elif tok == UNK:
                if not skip_special:
                    out.append(UNK_CHAR)
            elif tok in SPECIAL_TOKENS:
                if not skip_special:
                    out.append(tok)
            else:
                out.append(tok)
        return "".join(out)
