"""Lyrics imitation pipeline.

Builds a parallel training corpus from unpaired lyrics via a
keyword-to-lyrics model, trains a lyrics-to-lyrics imitation model on it,
and serves format-faithful imitated lyrics through a reranking pipeline,
an HTTP API, and a CLI.
"""

__version__ = "0.1.0"
