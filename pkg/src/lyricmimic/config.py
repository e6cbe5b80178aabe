"""Pipeline configuration: label sets, lexicons, and constants.

Defaults are bundled as package data; a YAML or JSON file can override
any field. Only what the file names is replaced, the rest keeps the
packaged defaults.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import yaml


def _data_text(name: str) -> str:
    return resources.files("lyricmimic.data").joinpath(name).read_text(encoding="utf-8")


def load_wordlist(path_or_text: str) -> list[str]:
    """One term per line, UTF-8; blank lines and # comments skipped."""
    words = []
    for line in path_or_text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.append(line)
    return words


@dataclass
class PipelineConfig:
    emotion_labels: list[str] = field(default_factory=list)
    style_labels: list[str] = field(default_factory=list)
    stopwords: set[str] = field(default_factory=set)
    lexicon: list[str] = field(default_factory=list)
    emotion_lexicon: dict[str, list[str]] = field(default_factory=dict)
    style_lexicon: dict[str, list[str]] = field(default_factory=dict)
    blocklist: list[str] = field(default_factory=list)
    rerank_w1: float = 0.7
    rerank_w2: float = 0.3
    keywords_per_bar: int = 5
    song_keyword_ratio: float = 0.1
    min_chars: int = 100
    pairs_per_source: int = 3
    candidates_per_request: int = 10
    top_n_results: int = 3
    decode: dict = field(default_factory=dict)


def default_config() -> PipelineConfig:
    """Configuration built from the packaged data files."""
    base = json.loads(_data_text("default_config.json"))
    return PipelineConfig(
        emotion_labels=base["emotion_labels"],
        style_labels=base["style_labels"],
        stopwords=set(load_wordlist(_data_text("stopwords.txt"))),
        lexicon=load_wordlist(_data_text("lexicon.txt")),
        emotion_lexicon=json.loads(_data_text("emotion_lexicon.json")),
        style_lexicon=json.loads(_data_text("style_lexicon.json")),
        blocklist=load_wordlist(_data_text("blocklist.txt")),
        rerank_w1=base["rerank"]["w1"],
        rerank_w2=base["rerank"]["w2"],
        keywords_per_bar=base["keywords_per_bar"],
        song_keyword_ratio=base["song_keyword_ratio"],
        min_chars=base["min_chars"],
        pairs_per_source=base["pairs_per_source"],
        candidates_per_request=base["candidates_per_request"],
        top_n_results=base["top_n_results"],
        decode=dict(base["decode"]),
    )


def load_config(path: str | Path | None = None) -> PipelineConfig:
    """Default config, optionally overridden by a YAML/JSON file.

    Recognized override keys: emotion_labels, style_labels, stopwords,
    lexicon, blocklist (lists), emotion_lexicon, style_lexicon (maps),
    rerank {w1, w2}, decode (map), and the scalar pipeline constants.
    """
    cfg = default_config()
    if path is None:
        return cfg
    raw = Path(path).read_text(encoding="utf-8")
    data = yaml.safe_load(raw) if str(path).endswith((".yaml", ".yml")) else json.loads(raw)
    if not isinstance(data, dict):
        raise ValueError(f"config file {path} must contain a mapping")

    for key in ("emotion_labels", "style_labels", "lexicon", "blocklist"):
        if key in data:
            setattr(cfg, key, list(data[key]))
    if "stopwords" in data:
        cfg.stopwords = set(data["stopwords"])
    for key in ("emotion_lexicon", "style_lexicon"):
        if key in data:
            setattr(cfg, key, {k: list(v) for k, v in data[key].items()})
    if "rerank" in data:
        cfg.rerank_w1 = float(data["rerank"].get("w1", cfg.rerank_w1))
        cfg.rerank_w2 = float(data["rerank"].get("w2", cfg.rerank_w2))
    if "decode" in data:
        cfg.decode.update(data["decode"])
    for key in (
        "keywords_per_bar",
        "song_keyword_ratio",
        "min_chars",
        "pairs_per_source",
        "candidates_per_request",
        "top_n_results",
    ):
        if key in data:
            setattr(cfg, key, type(getattr(cfg, key))(data[key]))
    return cfg
